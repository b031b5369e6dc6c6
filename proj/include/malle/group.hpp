#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "malle/perm.hpp"

namespace malle {

inline constexpr std::size_t kDefaultElementCap = 100000;

// Sorted indices into PermutationGroup::elements().
using ElementSet = std::vector<std::size_t>;

// Class-label override: a label pinned to the class containing a given representative.
using ClassLabel = std::pair<std::string, Permutation>;

// A finite permutation group given by generators. The element list is materialized
// lazily by breadth-first closure and sorted in canonical order, so index 0 is the
// identity. Copies share the materialized state; the fill is guarded by call_once.
class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<Permutation> generators, std::string name = {},
                   std::size_t cap = kDefaultElementCap);
  // Builds a group from an element list already known to be closed.
  static PermutationGroup from_elements(int degree, std::vector<Permutation> elements, std::string name = {});

  PermutationGroup with_labels(std::vector<ClassLabel> labels) const;
  PermutationGroup with_name(std::string name) const;

  int degree() const;
  const std::string& name() const;
  const std::vector<Permutation>& generators() const;
  const std::vector<ClassLabel>& labels() const;
  std::size_t cap() const;

  const std::vector<Permutation>& elements() const;
  std::size_t order() const { return elements().size(); }
  const Permutation& element(std::size_t i) const { return elements()[i]; }

  std::optional<std::size_t> find(const Permutation& p) const;
  // Like find, but throws ContractViolation for non-members.
  std::size_t locate(const Permutation& p) const;

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  std::size_t conj(std::size_t g, std::size_t x) const { return mul(mul(g, x), inv(g)); }
  int element_order(std::size_t a) const { return element(a).order(); }

  bool is_transitive() const;

 private:
  struct State;
  explicit PermutationGroup(std::shared_ptr<State> st) : st_(std::move(st)) {}
  void materialize() const;
  std::shared_ptr<State> st_;
};

// Returns the exact element list; throws ResourceCapError when the group exceeds its cap.
const std::vector<Permutation>& enumerate_elements(const PermutationGroup& G);

struct ConjugacyClass {
  std::size_t representative;  // smallest member in canonical order
  ElementSet members;
  std::size_t size() const { return members.size(); }
};

// Classes ordered by element order, then size, then smallest member.
std::vector<ConjugacyClass> conjugacy_classes(const PermutationGroup& G);

bool set_contains(const ElementSet& s, std::size_t x);
bool set_includes(const ElementSet& big, const ElementSet& small);
ElementSet set_union(const ElementSet& a, const ElementSet& b);
ElementSet set_intersection(const ElementSet& a, const ElementSet& b);

ElementSet whole_group(const PermutationGroup& G);
ElementSet trivial_subgroup();
ElementSet generate_subgroup(const PermutationGroup& G, const ElementSet& gens);
ElementSet normal_closure(const PermutationGroup& G, const ElementSet& gens);
ElementSet centralizer(const PermutationGroup& G, std::size_t x);
ElementSet pointwise_class_centralizer(const PermutationGroup& G, const ElementSet& c);
ElementSet center(const PermutationGroup& G);

bool is_subgroup(const PermutationGroup& G, const ElementSet& s);
bool is_normal(const PermutationGroup& G, const ElementSet& s);
bool is_abelian(const PermutationGroup& G, const ElementSet& s);

// Every normal subgroup, as the join closure of normal closures of single classes.
// Ordered by size, then lexicographically.
std::vector<ElementSet> normal_subgroups(const PermutationGroup& G);

// The subgroup s as a group in its own right (same degree).
PermutationGroup subgroup_as_group(const PermutationGroup& G, const ElementSet& s, std::string name = {});

struct QuotientGroup {
  ElementSet kernel;
  PermutationGroup carrier;                // regular action on the cosets
  std::vector<std::size_t> projection;     // parent element index -> carrier element index
  std::vector<std::size_t> coset_of;       // parent element index -> coset number
};

QuotientGroup quotient(const PermutationGroup& G, const ElementSet& N);

// Z_0 = 1, Z_1 = Z(G), ... up to the hypercenter. Terms are distinct.
std::vector<ElementSet> upper_central_series(const PermutationGroup& G);
ElementSet hypercenter(const PermutationGroup& G);
bool is_nilpotent(const PermutationGroup& G);
ElementSet fitting_subgroup(const PermutationGroup& G);

// Intransitive direct product on n + m points.
PermutationGroup direct_product(const PermutationGroup& G, const PermutationGroup& H);
// Product action on n * m points; point (i, j) is numbered i + n * j.
PermutationGroup direct_product_transitive(const PermutationGroup& G, const PermutationGroup& H);
// Imprimitive wreath product N wr B on n * m points: block b holds points b*n .. b*n+n-1.
PermutationGroup wreath_product(const PermutationGroup& N, const PermutationGroup& B);
// Left-multiplication action on the elements; carries class labels across.
PermutationGroup regular_representation(const PermutationGroup& G);

}  // namespace malle
