#include "malle/concentration.hpp"

#include <algorithm>
#include <functional>

#include "malle/errors.hpp"

namespace malle {

std::string to_string(ConcentrationStatus s) {
  switch (s) {
    case ConcentrationStatus::concentrated:
      return "concentrated";
    case ConcentrationStatus::properly_semiconcentrated:
      return "properly-semiconcentrated";
    case ConcentrationStatus::not_semiconcentrated:
      return "not-semiconcentrated";
  }
  return "?";
}

std::string to_string(FittingStatus s) {
  switch (s) {
    case FittingStatus::nilpotent:
      return "nilpotent";
    case FittingStatus::concentrated_in_fitting:
      return "concentrated-in-fitting";
    case FittingStatus::neither:
      return "neither";
  }
  return "?";
}

std::vector<ElementSet> abelian_normal_subgroups(const PermutationGroup& G) {
  std::vector<ElementSet> out;
  for (auto& N : normal_subgroups(G))
    if (N.size() > 1 && N.size() < G.order() && is_abelian(G, N)) out.push_back(std::move(N));
  return out;
}

std::vector<ElementSet> minimal_cover(const TypeSystem& ts, const std::vector<std::size_t>& targets,
                                      const std::vector<ElementSet>& candidates) {
  if (targets.empty()) return {};
  std::vector<const ElementSet*> useful;
  for (const auto& c : candidates)
    for (std::size_t t : targets)
      if (set_contains(c, ts.types[t].representative)) {
        useful.push_back(&c);
        break;
      }
  auto covers = [&](const std::vector<std::size_t>& pick) {
    for (std::size_t t : targets) {
      bool hit = false;
      for (std::size_t i : pick) hit = hit || set_contains(*useful[i], ts.types[t].representative);
      if (!hit) return false;
    }
    return true;
  };
  const std::size_t limit = std::min(targets.size(), useful.size());
  for (std::size_t k = 1; k <= limit; ++k) {
    std::vector<std::size_t> pick;
    std::vector<std::size_t> found;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) {
      if (pick.size() == k) {
        if (!covers(pick)) return false;
        found = pick;
        return true;
      }
      for (std::size_t i = start; i + (k - pick.size()) <= useful.size(); ++i) {
        pick.push_back(i);
        if (rec(i + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (rec(0)) {
      std::vector<ElementSet> out;
      for (std::size_t i : found) out.push_back(*useful[i]);
      return out;
    }
  }
  return {};
}

ConcentrationVerdict classify(const TypeSystem& ts, const WeightFunction& wt) {
  if (wt.values.size() != ts.types.size()) throw ValidationError("weight function does not match the type list");
  const PermutationGroup& G = ts.group;
  const MinWeight mw = min_weight(wt);
  ElementSet min_elems;
  for (std::size_t t : mw.argmin) min_elems = set_union(min_elems, ts.types[t].members);

  ConcentrationVerdict v;
  const auto normals = normal_subgroups(G);
  for (const auto& N : normals)
    if (N.size() < G.order() && set_includes(N, min_elems)) {
      v.status = ConcentrationStatus::concentrated;
      v.container = N;
      break;
    }
  if (v.status != ConcentrationStatus::concentrated) {
    bool each_proper = true;
    for (std::size_t t : mw.argmin)
      if (normal_closure(G, {ts.types[t].representative}).size() == G.order()) each_proper = false;
    v.status = each_proper ? ConcentrationStatus::properly_semiconcentrated
                           : ConcentrationStatus::not_semiconcentrated;
  }
  if (v.status != ConcentrationStatus::not_semiconcentrated)
    v.witnesses = minimal_cover(ts, mw.argmin, abelian_normal_subgroups(G));

  if (is_nilpotent(G)) {
    v.fitting_status = FittingStatus::nilpotent;
  } else {
    const ElementSet fit = fitting_subgroup(G);
    v.fitting_status = set_includes(fit, min_elems) ? FittingStatus::concentrated_in_fitting : FittingStatus::neither;
  }
  return v;
}

std::vector<H1urLayer> h1ur_chain(const PermutationGroup& G, const ElementSet& N, const ElementSet& T) {
  if (!is_normal(G, N)) throw ContractViolation("N is not normal in G");
  if (!is_normal(G, T) || !is_abelian(G, T)) throw ContractViolation("T must be an abelian normal subgroup");
  const PermutationGroup H = subgroup_as_group(G, N);
  std::vector<ElementSet> series;
  for (const auto& z : upper_central_series(H)) {
    ElementSet s;
    for (std::size_t i : z) s.push_back(G.locate(H.element(i)));
    std::sort(s.begin(), s.end());
    series.push_back(std::move(s));
  }
  if (!set_includes(series.back(), T)) throw ContractViolation("T is not contained in the hypercenter of N");
  std::vector<H1urLayer> layers;
  for (std::size_t i = 1; i < series.size(); ++i) {
    const ElementSet hi = set_intersection(T, series[i]);
    const ElementSet lo = set_intersection(T, series[i - 1]);
    std::size_t exponent = 1;
    for (std::size_t x : hi) {
      std::size_t k = 1, y = x;
      while (!set_contains(lo, y)) {
        y = G.mul(y, x);
        ++k;
      }
      exponent = std::max(exponent, k);
    }
    layers.push_back({hi.size() / lo.size(), exponent});
  }
  return layers;
}

namespace {
int exact_log2(std::size_t v) {
  int k = 0;
  while ((std::size_t{1} << k) < v) ++k;
  if ((std::size_t{1} << k) != v) return -1;
  return k;
}
}  // namespace

Rational wreath_theta_from_parameters(int n, const Rational& a_N, std::size_t t_order, int m, int k_degree) {
  if (n < 1 || m < 1 || k_degree < 1 || a_N <= 0) throw ValidationError("wreath parameters must be positive");
  const int l = exact_log2(t_order);
  if (l < 0) throw UnsupportedHypothesis("witness order " + std::to_string(t_order) + " is not a power of 2");
  Rational value = Rational(n) / a_N - Rational(l, 2) + Rational(l, 2 * m * k_degree);
  value.canonicalize();
  return value;
}

Rational wreath_theta_bound(const PermutationGroup& N, const std::vector<ElementSet>& witnesses, int m,
                            int k_degree) {
  if (exact_log2(N.order()) < 0) throw UnsupportedHypothesis("the wreath bound is proved only for 2-groups");
  if (witnesses.empty()) throw ValidationError("at least one witness is required");
  int a = N.degree();
  for (std::size_t x = 1; x < N.order(); ++x) a = std::min(a, index_of(N.element(x), N.degree()));
  Rational best;
  bool first = true;
  for (const auto& T : witnesses) {
    if (!is_normal(N, T) || !is_abelian(N, T)) throw ContractViolation("witness is not abelian normal in N");
    Rational v = wreath_theta_from_parameters(N.degree(), Rational(a), T.size(), m, k_degree);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

DirectProductCondition direct_product_condition(int n, int m, const Rational& a_N, const Rational& a_B) {
  if (n < 1 || m < 1 || a_N <= 0 || a_B <= 0) throw ValidationError("direct product parameters must be positive");
  Rational lhs = a_B / m, rhs = a_N / n, cap = Rational(n) / (m * a_N);
  lhs.canonicalize();
  rhs.canonicalize();
  cap.canonicalize();
  return {lhs > rhs, cap};
}

}  // namespace malle
