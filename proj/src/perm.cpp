#include "malle/perm.hpp"

#include <cctype>
#include <numeric>

#include "malle/errors.hpp"

namespace malle {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n == 0) throw ValidationError("permutation of degree 0");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw ValidationError("image array is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree <= 0) throw ValidationError("permutation degree must be positive");
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw ValidationError("degree mismatch in product");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[i] = images_[static_cast<std::size_t>(rhs.images_[i])];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return out;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation acc = identity(degree());
  while (e) {
    if (e & 1ULL) acc = acc * base;
    base = base * base;
    e >>= 1ULL;
  }
  return acc;
}

Permutation Permutation::conjugated_by(const Permutation& g) const { return g * (*this) * g.inverse(); }

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::order() const {
  long long ord = 1;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return static_cast<int>(ord);
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) seen[j] = 1;
  }
  return count;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    std::vector<int> cyc;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = 1;
      cyc.push_back(static_cast<int>(j) + 1);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::string s;
  for (const auto& c : cyc) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  return s;
}

std::size_t Permutation::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (int v : images_) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

Permutation parse_permutation(std::string_view text, int degree) {
  if (degree <= 0) throw ParseError("degree must be positive");
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto token_at = [&](std::size_t pos) {
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ',' &&
           text[end] != ')' && text[end] != '(')
      ++end;
    if (end == pos && pos < text.size()) end = pos + 1;
    return std::string(text.substr(pos, end - pos));
  };

  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation text");
  bool saw_cycle = false;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' but found '" + token_at(i) + "'");
    ++i;
    skip_ws();
    std::vector<int> cycle;
    if (i < text.size() && text[i] == ')') {
      ++i;
      saw_cycle = true;
      continue;  // "()" contributes nothing
    }
    while (true) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) {
        if (i == text.size()) throw ParseError("unterminated cycle");
        throw ParseError("expected a point but found '" + token_at(i) + "'");
      }
      std::string tok(text.substr(start, i - start));
      if (tok.size() > 9) throw ParseError("point " + tok + " exceeds degree " + std::to_string(degree));
      int pt = std::stoi(tok);
      if (pt < 1 || pt > degree) throw ParseError("point " + tok + " out of range 1.." + std::to_string(degree));
      if (used[static_cast<std::size_t>(pt - 1)]) throw ParseError("point " + tok + " repeated");
      used[static_cast<std::size_t>(pt - 1)] = 1;
      cycle.push_back(pt - 1);
      skip_ws();
      if (i == text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("unexpected token '" + token_at(i) + "'");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    saw_cycle = true;
  }
  if (!saw_cycle) throw ParseError("no cycles found");
  return Permutation(std::move(img));
}

int index_of(const Permutation& g, int n) {
  if (g.degree() != n) throw ValidationError("index requested in degree " + std::to_string(n) +
                                             " for a permutation of degree " + std::to_string(g.degree()));
  return n - g.cycle_count();
}

}  // namespace malle
