#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace malle {

// A bijection of {1..degree}. Points are stored 0-based internally.
// Products compose right to left: (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  // images[i] is the 0-based image of point i. Throws ValidationError unless a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long k) const;
  // g * this * g^-1
  Permutation conjugated_by(const Permutation& g) const;

  bool is_identity() const;
  int order() const;
  // Number of cycles, fixed points included.
  int cycle_count() const;
  // Nontrivial cycles as 1-based point lists, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const;
  // Cycle notation with 1-based points, "()" for the identity.
  std::string to_string() const;

  // Canonical element order: lexicographic on the image array.
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

// Parses a product of disjoint cycles such as "(1,5)(2,6)" over points 1..degree.
// Errors name the offending token.
Permutation parse_permutation(std::string_view text, int degree);

// ind_n(g) = n - #cycles of g on n points.
int index_of(const Permutation& g, int n);

}  // namespace malle
