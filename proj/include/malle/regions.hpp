#pragma once

#include <map>
#include <string>
#include <vector>

#include "malle/group.hpp"
#include "malle/ramtypes.hpp"
#include "malle/rational.hpp"

namespace malle {

enum class ProfilePreset { burgess_yang, lindelof, convexity, ref_d4, ref_16t11, custom };

// Validity edge gamma and per-type conductor (alpha) and t-aspect (beta) exponents.
struct SubconvexityProfile {
  std::string name;
  ProfilePreset preset = ProfilePreset::custom;
  Rational gamma{1, 2};
  std::vector<Rational> alpha;  // indexed like TypeSystem::types
  std::vector<Rational> beta;
  bool has_beta = true;  // false when the profile carries no t-aspect data
};

// beta = alpha |tau| [k:Q], capped at 1/3 for singleton types over the full cyclotomic profile.
Rational default_beta(const TypeSystem& ts, std::size_t tau, const Rational& alpha);

SubconvexityProfile make_profile(ProfilePreset preset, const TypeSystem& ts, const Rational& gamma = Rational(1, 2));
// Missing alpha entries are an error; missing beta entries follow default_beta.
SubconvexityProfile make_custom_profile(const TypeSystem& ts, const Rational& gamma,
                                        const std::map<std::string, Rational>& alpha,
                                        const std::map<std::string, Rational>& beta, bool has_beta = true,
                                        std::string name = "custom");

// coeffs . sigma > bound (or >= when not strict). Coefficients are dense over the variables.
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rational bound;
  bool strict = true;

  bool is_pure() const;  // exactly one nonzero coefficient
  std::string to_string(const std::vector<std::string>& variables) const;
};

struct TubularRegion {
  std::string name;
  std::vector<std::string> variables;
  std::vector<LinearConstraint> constraints;

  // Pure lower bound on variable v: the largest bound/coeff over pure constraints.
  Rational lower_bound(std::size_t v) const;
  // Checks nonnegative coefficients and a pure bound on every variable.
  void assert_orthant_recession() const;
  // Strict membership in the open region.
  bool contains(const std::vector<Rational>& point) const;
  // Every constraint holds as lhs >= bound + margin.
  bool satisfies(const std::vector<Rational>& point, const Rational& margin) const;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

// M[tau][kappa] = alpha_kappa * zeta(kappa) * (|o| - #cycles of tau's representative acting on o by
// conjugation), with o the conjugation orbit of kappa's representative.
RationalMatrix subconvexity_matrix(const TypeSystem& ts, const SubconvexityProfile& profile);

// Index of the conjugation action of element g on the orbit o (|o| - #cycles).
int conjugation_index(const PermutationGroup& G, std::size_t g, const ElementSet& orbit);

TubularRegion build_region(const TypeSystem& ts, const ElementSet& T, const SubconvexityProfile& profile,
                           std::string name = {});
TubularRegion absolute_convergence_orthant(const TypeSystem& ts);
TubularRegion absolute_convergence_orthant(const std::vector<std::string>& variables);

}  // namespace malle
