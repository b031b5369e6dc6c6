#include "malle/regions.hpp"

#include <algorithm>

#include "malle/errors.hpp"

namespace malle {

Rational default_beta(const TypeSystem& ts, std::size_t tau, const Rational& alpha) {
  const auto& t = ts.types.at(tau);
  Rational b = alpha * static_cast<unsigned long>(t.size) * ts.profile.field_degree();
  if (t.size == 1 && ts.profile.is_full()) b = rational_min(b, Rational(1, 3));
  return b;
}

namespace {

SubconvexityProfile uniform_profile(const TypeSystem& ts, std::string name, ProfilePreset preset,
                                    const Rational& gamma, const Rational& alpha, bool weyl_beta) {
  SubconvexityProfile p;
  p.name = std::move(name);
  p.preset = preset;
  p.gamma = gamma;
  for (std::size_t i = 0; i < ts.types.size(); ++i) {
    p.alpha.push_back(alpha);
    p.beta.push_back(weyl_beta ? default_beta(ts, i, alpha) : Rational(0));
  }
  return p;
}

void check_gamma(const Rational& gamma) {
  if (gamma < 0 || gamma >= 1) throw ValidationError("gamma must lie in [0, 1), got " + to_display(gamma));
}

}  // namespace

SubconvexityProfile make_profile(ProfilePreset preset, const TypeSystem& ts, const Rational& gamma) {
  check_gamma(gamma);
  switch (preset) {
    case ProfilePreset::burgess_yang:
      return uniform_profile(ts, "burgess-yang", preset, gamma, Rational(3, 8), true);
    case ProfilePreset::lindelof:
      return uniform_profile(ts, "lindelof:" + to_display(gamma), preset, gamma, Rational(0), false);
    case ProfilePreset::convexity:
      return uniform_profile(ts, "convexity", preset, gamma, Rational(1, 2), true);
    case ProfilePreset::ref_d4:
      return uniform_profile(ts, "ref-d4", preset, Rational(1, 2), Rational(3, 8), true);
    case ProfilePreset::ref_16t11:
      return uniform_profile(ts, "ref-16t11", preset, Rational(1, 2), Rational(3, 8), true);
    case ProfilePreset::custom:
      break;
  }
  throw ValidationError("custom profiles need explicit exponents");
}

SubconvexityProfile make_custom_profile(const TypeSystem& ts, const Rational& gamma,
                                        const std::map<std::string, Rational>& alpha,
                                        const std::map<std::string, Rational>& beta, bool has_beta,
                                        std::string name) {
  check_gamma(gamma);
  for (const auto* table : {&alpha, &beta})
    for (const auto& [label, v] : *table) {
      if (label != "*" && !ts.find(label)) throw ValidationError("exponent given for unknown type '" + label + "'");
      if (v < 0) throw ValidationError("exponent for " + label + " must be nonnegative");
    }
  SubconvexityProfile p;
  p.name = std::move(name);
  p.preset = ProfilePreset::custom;
  p.gamma = gamma;
  p.has_beta = has_beta;
  auto lookup = [](const std::map<std::string, Rational>& m, const std::string& label) -> const Rational* {
    if (auto it = m.find(label); it != m.end()) return &it->second;
    if (auto it = m.find("*"); it != m.end()) return &it->second;
    return nullptr;
  };
  for (std::size_t i = 0; i < ts.types.size(); ++i) {
    const Rational* a = lookup(alpha, ts.types[i].label);
    if (!a) throw ValidationError("missing alpha for type " + ts.types[i].label);
    p.alpha.push_back(*a);
    const Rational* b = lookup(beta, ts.types[i].label);
    p.beta.push_back(b ? *b : default_beta(ts, i, *a));
  }
  return p;
}

bool LinearConstraint::is_pure() const {
  return std::count_if(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c != 0; }) == 1;
}

std::string LinearConstraint::to_string(const std::vector<std::string>& variables) const {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (coeffs[i] != 1) s += to_display(coeffs[i]) + "*";
    s += variables.at(i);
  }
  s += strict ? " > " : " >= ";
  s += to_display(bound);
  return s;
}

Rational TubularRegion::lower_bound(std::size_t v) const {
  bool found = false;
  Rational best;
  for (const auto& c : constraints) {
    if (!c.is_pure() || c.coeffs.at(v) == 0) continue;
    Rational b = c.bound / c.coeffs[v];
    if (!found || b > best) best = b;
    found = true;
  }
  if (!found) throw ContractViolation("region " + name + " has no pure bound on " + variables.at(v));
  return best;
}

void TubularRegion::assert_orthant_recession() const {
  std::vector<char> bounded(variables.size(), 0);
  for (const auto& c : constraints) {
    if (c.coeffs.size() != variables.size()) throw ValidationError("constraint arity does not match variables");
    bool nonzero = false;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
      if (c.coeffs[i] < 0) throw ContractViolation("region " + name + " has a negative coefficient");
      nonzero = nonzero || c.coeffs[i] != 0;
    }
    if (!nonzero) throw ContractViolation("region " + name + " has an empty constraint");
    if (c.is_pure())
      for (std::size_t i = 0; i < c.coeffs.size(); ++i)
        if (c.coeffs[i] != 0) bounded[i] = 1;
  }
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (!bounded[i])
      throw ContractViolation("region " + name + " lacks a pure lower bound on " + variables[i]);
}

namespace {
Rational lhs(const LinearConstraint& c, const std::vector<Rational>& point) {
  Rational s = 0;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i)
    if (c.coeffs[i] != 0) s += c.coeffs[i] * point[i];
  return s;
}
}  // namespace

bool TubularRegion::contains(const std::vector<Rational>& point) const {
  if (point.size() != variables.size()) throw ValidationError("point dimension does not match the region");
  for (const auto& c : constraints) {
    Rational v = lhs(c, point);
    if (c.strict ? !(v > c.bound) : !(v >= c.bound)) return false;
  }
  return true;
}

bool TubularRegion::satisfies(const std::vector<Rational>& point, const Rational& margin) const {
  if (point.size() != variables.size()) throw ValidationError("point dimension does not match the region");
  for (const auto& c : constraints)
    if (lhs(c, point) < c.bound + margin) return false;
  return true;
}

int conjugation_index(const PermutationGroup& G, std::size_t g, const ElementSet& orbit) {
  std::vector<char> seen(orbit.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      std::size_t y = G.conj(g, orbit[j]);
      auto it = std::lower_bound(orbit.begin(), orbit.end(), y);
      if (it == orbit.end() || *it != y) throw ContractViolation("orbit is not stable under conjugation");
      j = static_cast<std::size_t>(it - orbit.begin());
    }
  }
  return static_cast<int>(orbit.size()) - cycles;
}

RationalMatrix subconvexity_matrix(const TypeSystem& ts, const SubconvexityProfile& profile) {
  const std::size_t n = ts.types.size();
  if (profile.alpha.size() != n) throw ValidationError("profile does not match the type list");
  RationalMatrix M(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t kappa = 0; kappa < n; ++kappa) {
    const auto& k = ts.types[kappa];
    if (profile.alpha[kappa] == 0) continue;
    for (std::size_t tau = 0; tau < n; ++tau) {
      int ind = conjugation_index(ts.group, ts.types[tau].representative, k.orbit);
      M[tau][kappa] = profile.alpha[kappa] * k.zeta_degree * ind;
    }
  }
  return M;
}

TubularRegion build_region(const TypeSystem& ts, const ElementSet& T, const SubconvexityProfile& profile,
                           std::string name) {
  if (!is_normal(ts.group, T)) throw ContractViolation("witness subgroup is not normal");
  if (!is_abelian(ts.group, T)) throw ContractViolation("witness subgroup is not abelian");
  const std::size_t n = ts.types.size();
  if (n == 0) throw ValidationError("group has no nontrivial types");
  const RationalMatrix M = subconvexity_matrix(ts, profile);
  std::vector<char> inside(n, 0);
  for (std::size_t t : ts.types_in(T)) inside[t] = 1;

  TubularRegion r;
  r.name = std::move(name);
  r.variables = ts.labels();
  for (std::size_t tau = 0; tau < n; ++tau) {
    LinearConstraint c{std::vector<Rational>(n, Rational(0)), inside[tau] ? profile.gamma : Rational(1), true};
    c.coeffs[tau] = 1;
    r.constraints.push_back(std::move(c));
  }
  for (std::size_t tau = 0; tau < n; ++tau) {
    if (inside[tau]) continue;
    LinearConstraint c{std::vector<Rational>(n, Rational(0)), Rational(1), true};
    c.coeffs[tau] = 1;
    bool mixed = false;
    for (std::size_t kappa = 0; kappa < n; ++kappa) {
      if (!inside[kappa] || M[tau][kappa] == 0) continue;
      c.coeffs[kappa] += M[tau][kappa];
      c.bound += M[tau][kappa];
      mixed = true;
    }
    if (mixed) r.constraints.push_back(std::move(c));
  }
  r.assert_orthant_recession();
  return r;
}

TubularRegion absolute_convergence_orthant(const std::vector<std::string>& variables) {
  if (variables.empty()) throw ValidationError("the orthant needs at least one type");
  TubularRegion r;
  r.name = "orthant";
  r.variables = variables;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    LinearConstraint c{std::vector<Rational>(variables.size(), Rational(0)), Rational(1), true};
    c.coeffs[i] = 1;
    r.constraints.push_back(std::move(c));
  }
  return r;
}

TubularRegion absolute_convergence_orthant(const TypeSystem& ts) { return absolute_convergence_orthant(ts.labels()); }

}  // namespace malle
