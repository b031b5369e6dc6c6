#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "malle/group.hpp"
#include "malle/rational.hpp"

namespace malle {

// The base field enters only through the unit groups U_e <= (Z/eZ)^x acting by powering.
// Full mode uses all units. Restricted mode lists generators for some moduli; an unlisted
// modulus e gets the largest subgroup compatible with the listed divisors of e.
class CyclotomicProfile {
 public:
  enum class Mode { full, restricted, trivial };

  static CyclotomicProfile full_q(int field_degree = 1);
  static CyclotomicProfile restricted(std::map<int, std::vector<int>> generators, int field_degree = 1,
                                      std::string name = "custom");
  // U_e = {1} everywhere: tame types become plain conjugacy classes.
  static CyclotomicProfile trivial();

  Mode mode() const { return mode_; }
  bool is_full() const { return mode_ == Mode::full; }
  int field_degree() const { return field_degree_; }
  const std::string& name() const { return name_; }
  const std::map<int, std::vector<int>>& listed() const { return listed_; }

  // Sorted residues of U_e.
  std::vector<int> units(int e) const;

 private:
  Mode mode_ = Mode::full;
  int field_degree_ = 1;
  std::string name_ = "Q";
  std::map<int, std::vector<int>> listed_;  // modulus -> full subgroup (sorted residues)
};

struct TameType {
  std::string label;
  int order = 0;
  std::size_t size = 0;
  int zeta_degree = 1;             // conjugation orbits merged by powering
  std::size_t representative = 0;  // smallest member
  ElementSet members;
  ElementSet orbit;                // conjugation orbit of the representative
};

struct TypeSystem {
  PermutationGroup group;
  CyclotomicProfile profile;
  std::vector<TameType> types;
  std::vector<int> type_of;  // element index -> type index, -1 for the identity

  std::size_t index(const std::string& label) const;
  std::optional<std::size_t> find(const std::string& label) const;
  std::vector<std::string> labels() const;
  // Type indices whose members lie in the subgroup.
  std::vector<std::size_t> types_in(const ElementSet& subgroup) const;
};

// Orbits of G \ {1} under conjugation and g -> g^u, u in U_ord(g).
// Ordered by order, then size, then smallest member. Rejects intransitive groups.
TypeSystem tame_types(const PermutationGroup& G, const CyclotomicProfile& profile);
// Same partition without the transitivity requirement.
TypeSystem tame_types_unchecked(const PermutationGroup& G, const CyclotomicProfile& profile);

int zeta_degree(const TypeSystem& ts, std::size_t tau);

struct WeightFunction {
  std::string name;
  std::vector<Rational> values;  // indexed like TypeSystem::types
};

// wt(tau) = ind_n(representative); n must be the degree of the group.
WeightFunction weight_discriminant(const TypeSystem& ts, int n);
WeightFunction weight_discriminant(const TypeSystem& ts);
// Codimension of the fixed space in the faithful 2-dimensional representation of D4.
WeightFunction weight_conductor_d4(const TypeSystem& ts);
WeightFunction weight_product_ramified(const TypeSystem& ts);
WeightFunction weight_custom(const TypeSystem& ts, const std::map<std::string, Rational>& table,
                             std::string name = "custom");
// D4 weights (2A, 2B, 2C, 4A) -> (2, 1 + gamma, 1, 2 + gamma); needs the pinned labels.
WeightFunction weight_inv_gamma(const TypeSystem& ts, const Rational& gamma);

struct MinWeight {
  Rational a;
  std::vector<std::size_t> argmin;
};
MinWeight min_weight(const WeightFunction& wt);

// Image of tau in the quotient, as a type index of quotient_types; nullopt when trivial.
std::optional<std::size_t> pushforward_type(const TypeSystem& parent, std::size_t tau, const QuotientGroup& q,
                                            const TypeSystem& quotient_types);

// 1 for prime-order types of nilpotent groups, zeta_degree otherwise.
int pole_order_bound(const TypeSystem& ts, std::size_t tau);
int pole_order_bound(const TypeSystem& ts, std::size_t tau, bool group_is_nilpotent);

bool is_d4(const PermutationGroup& G);

}  // namespace malle
