#include "malle/asymptotics.hpp"

#include <algorithm>
#include <set>

#include "malle/catalog.hpp"
#include "malle/concentration.hpp"
#include "malle/errors.hpp"

namespace malle {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::asymptotic_with_power_saving:
      return "asymptotic-with-power-saving";
    case Verdict::asymptotic_only:
      return "asymptotic-only";
    case Verdict::hull_too_small:
      return "hull-too-small";
  }
  return "?";
}

namespace {

bool holds(const std::vector<std::size_t>& s, std::size_t x) { return std::find(s.begin(), s.end(), x) != s.end(); }

}  // namespace

std::vector<bool> pointwise_variables(const std::vector<TubularRegion>& regions,
                                      const std::vector<std::vector<std::size_t>>& witness_types) {
  if (regions.empty() || witness_types.empty()) return {};
  const std::size_t n = regions.front().variables.size();
  std::vector<bool> out(n, true);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& w : witness_types) out[v] = out[v] && holds(w, v);
    if (!out[v]) continue;
    const Rational first = regions.front().lower_bound(v);
    for (const auto& r : regions) {
      if (r.lower_bound(v) != first) out[v] = false;
      for (const auto& c : r.constraints)
        if (!c.is_pure() && c.coeffs[v] != 0) out[v] = false;
    }
  }
  return out;
}

Rational xi_exponent(const std::vector<TubularRegion>& regions,
                     const std::vector<std::vector<std::size_t>>& witness_types, const std::vector<Rational>& beta,
                     const WeightFunction& wt, const Rational& s_star) {
  if (regions.size() != witness_types.size()) throw ValidationError("one witness type set per region is required");
  if (regions.empty()) return 0;
  const std::size_t n = regions.front().variables.size();
  if (beta.size() != n || wt.values.size() != n) throw ValidationError("beta and weights must cover every type");
  const std::vector<bool> pointwise = pointwise_variables(regions, witness_types);

  Rational regional = 0;
  for (std::size_t j = 0; j < regions.size(); ++j) {
    Rational sum = 0;
    for (std::size_t tau : witness_types[j]) {
      if (pointwise[tau]) continue;
      sum += beta[tau] * rational_max(1 - regions[j].lower_bound(tau), 0);
    }
    regional = rational_max(regional, sum);
  }
  for (std::size_t tau = 0; tau < n; ++tau)
    if (pointwise[tau]) regional += beta[tau] * rational_max(1 - wt.values[tau] * s_star, 0);
  return regional;
}

std::pair<int, int> b_bounds(const WeightFunction& wt, const std::vector<std::vector<std::size_t>>& witness_types,
                             const std::vector<int>& pole_orders) {
  if (pole_orders.size() != wt.values.size()) throw ValidationError("one pole order per type is required");
  const MinWeight mw = min_weight(wt);
  int low = 0;
  std::set<std::size_t> uni;
  for (const auto& w : witness_types) {
    int sum = 0;
    for (std::size_t tau : mw.argmin)
      if (holds(w, tau)) {
        sum += pole_orders[tau];
        uni.insert(tau);
      }
    low = std::max(low, sum);
  }
  int high = 0;
  for (std::size_t tau : uni) high += pole_orders[tau];
  low = std::max(low, 1);
  return {low, std::max(high, low)};
}

Witness make_witness(const TypeSystem& ts, const ElementSet& subgroup) {
  Witness w;
  w.subgroup = subgroup;
  w.types = ts.types_in(subgroup);
  w.name = "<";
  for (std::size_t i = 0; i < w.types.size(); ++i) w.name += (i ? "," : "") + ts.types[w.types[i]].label;
  w.name += ">";
  return w;
}

std::vector<ElementSet> auto_witnesses(const TypeSystem& ts, const WeightFunction& wt) {
  std::vector<ElementSet> candidates = abelian_normal_subgroups(ts.group);
  if (is_abelian(ts.group, whole_group(ts.group)) && ts.group.order() > 1) candidates.push_back(whole_group(ts.group));
  auto coverable = [&](std::size_t tau) {
    for (const auto& c : candidates)
      if (set_contains(c, ts.types[tau].representative)) return true;
    return false;
  };
  std::set<std::size_t> targets;
  for (std::size_t tau : min_weight(wt).argmin)
    if (coverable(tau)) targets.insert(tau);
  for (std::size_t tau = 0; tau < ts.types.size(); ++tau) {
    const int p = ts.types[tau].order;
    bool prime = p > 1;
    for (int d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (prime && coverable(tau)) targets.insert(tau);
  }
  return minimal_cover(ts, std::vector<std::size_t>(targets.begin(), targets.end()), candidates);
}

Rational tauberian_exponent(const Rational& sigma_a, const Rational& delta, const Rational& xi) {
  if (sgn(delta) <= 0) throw ContractViolation("the Tauberian exponent needs delta > 0");
  if (sgn(xi) < 0) throw ContractViolation("xi must be nonnegative");
  return sigma_a - delta / (xi + 1);
}

MalleReport analyze(const TypeSystem& ts, const WeightFunction& wt, const std::vector<ElementSet>& witnesses,
                    const SubconvexityProfile& profile) {
  const std::size_t n = ts.types.size();
  if (n == 0) throw ValidationError("the trivial group has no tame types");
  if (wt.values.size() != n) throw ValidationError("weight function does not cover every type");
  for (const auto& v : wt.values)
    if (sgn(v) <= 0) throw ValidationError("weights must be positive");
  if (profile.alpha.size() != n || profile.beta.size() != n) throw ValidationError("profile does not match the types");

  MalleReport r;
  r.group = ts.group.name();
  r.weight = wt.name;
  r.profile = profile.name;
  r.cyclotomic = ts.profile.name();
  r.weights = wt.values;
  r.alpha = profile.alpha;
  r.beta = profile.beta;

  const MinWeight mw = min_weight(wt);
  r.a_inv = mw.a;
  r.sigma_a = 1 / mw.a;

  std::vector<std::vector<std::size_t>> witness_types;
  for (std::size_t j = 0; j < witnesses.size(); ++j) {
    Witness w = make_witness(ts, witnesses[j]);
    r.regions.push_back(build_region(ts, w.subgroup, profile, "Omega" + w.name));
    witness_types.push_back(w.types);
    r.witnesses.push_back(std::move(w));
  }
  const std::vector<TubularRegion> hull_regions =
      r.regions.empty() ? std::vector<TubularRegion>{absolute_convergence_orthant(ts)} : r.regions;

  r.line = line_threshold(wt.values, hull_regions);
  r.threshold = r.line.threshold;
  r.delta = r.sigma_a - r.threshold;

  for (const auto& v : wt.values) r.pole_point.push_back(v * r.sigma_a);
  r.pole_membership = hull_membership(r.pole_point, hull_regions, HullMode::open);

  const bool nilpotent = is_nilpotent(ts.group);
  for (std::size_t tau = 0; tau < n; ++tau) r.pole_orders.push_back(pole_order_bound(ts, tau, nilpotent));
  std::tie(r.b_low, r.b_high) = b_bounds(wt, witness_types, r.pole_orders);

  r.pointwise = pointwise_variables(r.regions, witness_types);
  if (r.pointwise.empty()) r.pointwise.assign(n, false);
  if (profile.has_beta) r.xi = xi_exponent(r.regions, witness_types, profile.beta, wt, r.threshold);

  if (sgn(r.delta) <= 0) {
    r.verdict = Verdict::hull_too_small;
  } else if (r.xi) {
    r.verdict = Verdict::asymptotic_with_power_saving;
    r.power_saving_exponent = tauberian_exponent(r.sigma_a, r.delta, *r.xi);
  } else {
    r.verdict = Verdict::asymptotic_only;
  }
  return r;
}

bool gamma_secondary_visible(const Rational& gamma) { return 6 * gamma * gamma + 23 * gamma - 5 < 0; }

GammaFamilyPoint d4_gamma_family(const Rational& gamma) {
  if (gamma < 0 || gamma > Rational(11, 8)) throw ContractViolation("the inv-gamma family needs 0 <= gamma <= 11/8");
  const CatalogEntry d4 = resolve_entry("4T3");
  const TypeSystem ts = tame_types(d4.group, CyclotomicProfile::full_q());
  const WeightFunction wt = weight_inv_gamma(ts, gamma);
  const SubconvexityProfile profile = make_profile(ProfilePreset::burgess_yang, ts);
  const MalleReport r = analyze(ts, wt, auto_witnesses(ts, wt), profile);
  if (!r.power_saving_exponent) throw ContractViolation("the inv-gamma family lost its power saving");
  GammaFamilyPoint p;
  p.gamma = gamma;
  p.threshold = r.threshold;
  p.exponent = *r.power_saving_exponent;
  p.secondary_exponent = 1 / (1 + gamma);
  p.secondary_visible = gamma_secondary_visible(gamma);
  return p;
}

}  // namespace malle
