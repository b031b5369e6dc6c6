#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "malle/group.hpp"
#include "malle/hull.hpp"
#include "malle/ramtypes.hpp"
#include "malle/rational.hpp"
#include "malle/regions.hpp"

namespace malle {

enum class Verdict { asymptotic_with_power_saving, asymptotic_only, hull_too_small };
std::string to_string(Verdict v);

struct Witness {
  std::string name;                 // e.g. "<2A,2C>"
  ElementSet subgroup;
  std::vector<std::size_t> types;   // type indices inside the subgroup
};

struct MalleReport {
  std::string group;
  std::string weight;
  std::string profile;
  std::string cyclotomic;

  Rational a_inv;
  Rational sigma_a;
  Rational threshold;
  Rational delta;
  int b_low = 0;
  int b_high = 0;
  std::optional<Rational> xi;                     // absent when the profile has no t-aspect data
  std::optional<Rational> power_saving_exponent;  // present only for asymptotic-with-power-saving
  Verdict verdict = Verdict::hull_too_small;

  std::vector<Witness> witnesses;
  std::vector<TubularRegion> regions;
  std::vector<Rational> weights;
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  std::vector<int> pole_orders;
  std::vector<bool> pointwise;
  std::vector<Rational> pole_point;
  HullResult pole_membership;      // open-mode membership of the pole point
  LineThreshold line;              // closed-mode witness at the threshold
};

// Variables sharing one pure bound in every region, absent from every mixed constraint and
// present in every witness.
std::vector<bool> pointwise_variables(const std::vector<TubularRegion>& regions,
                                      const std::vector<std::vector<std::size_t>>& witness_types);

Rational xi_exponent(const std::vector<TubularRegion>& regions,
                     const std::vector<std::vector<std::size_t>>& witness_types, const std::vector<Rational>& beta,
                     const WeightFunction& wt, const Rational& s_star);

// (max_j sum b over minimum types in T_j, sum b over minimum types in the union), each at least 1.
std::pair<int, int> b_bounds(const WeightFunction& wt, const std::vector<std::vector<std::size_t>>& witness_types,
                             const std::vector<int>& pole_orders);

Witness make_witness(const TypeSystem& ts, const ElementSet& subgroup);

// Smallest abelian normal cover of the minimum-weight types together with every prime-order type
// that lies in some abelian normal subgroup.
std::vector<ElementSet> auto_witnesses(const TypeSystem& ts, const WeightFunction& wt);

MalleReport analyze(const TypeSystem& ts, const WeightFunction& wt, const std::vector<ElementSet>& witnesses,
                    const SubconvexityProfile& profile);

Rational tauberian_exponent(const Rational& sigma_a, const Rational& delta, const Rational& xi);

struct GammaFamilyPoint {
  Rational gamma;
  Rational threshold;
  Rational exponent;
  Rational secondary_exponent;  // 1/(1+gamma), from the 2B pole
  bool secondary_visible = false;
};

// D4 quartic fields ordered by the inv-gamma invariant, 0 <= gamma <= 11/8, under Burgess-Yang data.
GammaFamilyPoint d4_gamma_family(const Rational& gamma);
// Sign test 6 gamma^2 + 23 gamma - 5 < 0.
bool gamma_secondary_visible(const Rational& gamma);

}  // namespace malle
