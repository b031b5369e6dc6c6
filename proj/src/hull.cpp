#include "malle/hull.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "malle/errors.hpp"
#include "malle/lp.hpp"

namespace malle {

namespace {

void check_regions(const std::vector<TubularRegion>& regions, std::size_t dim) {
  for (const auto& r : regions) {
    if (r.variables != regions.front().variables) throw ValidationError("regions use different variable indices");
    r.assert_orthant_recession();
  }
  if (!regions.empty() && regions.front().variables.size() != dim)
    throw ValidationError("point dimension does not match the regions");
}

// Variables: lambda_j, then y_{j,v} (free), then optionally s (free).
struct Balas {
  LPProblem lp;
  std::vector<std::size_t> lambda;
  std::vector<std::vector<std::size_t>> y;
  std::size_t s = SIZE_MAX;
};

Balas build_balas(const std::vector<TubularRegion>& regions, const std::vector<Rational>* point,
                  const std::vector<Rational>* line, const Rational& margin) {
  Balas b;
  const std::size_t dim = regions.front().variables.size();
  for (std::size_t j = 0; j < regions.size(); ++j) b.lambda.push_back(b.lp.add_variable("lambda" + std::to_string(j)));
  for (std::size_t j = 0; j < regions.size(); ++j) {
    b.y.emplace_back();
    for (std::size_t v = 0; v < dim; ++v)
      b.y[j].push_back(b.lp.add_variable("y" + std::to_string(j) + "_" + regions[j].variables[v], true));
  }
  if (line) b.s = b.lp.add_variable("s", true);
  const std::size_t nv = b.lp.variables.size();

  std::vector<Rational> row(nv, Rational(0));
  for (std::size_t j : b.lambda) row[j] = 1;
  b.lp.add_row(row, Relation::eq, 1);
  for (std::size_t j = 0; j < regions.size(); ++j)
    for (const auto& c : regions[j].constraints) {
      std::vector<Rational> r(nv, Rational(0));
      for (std::size_t v = 0; v < dim; ++v) r[b.y[j][v]] = c.coeffs[v];
      r[b.lambda[j]] = -(c.bound + margin);
      b.lp.add_row(std::move(r), Relation::ge, 0);
    }
  for (std::size_t v = 0; v < dim; ++v) {
    std::vector<Rational> r(nv, Rational(0));
    for (std::size_t j = 0; j < regions.size(); ++j) r[b.y[j][v]] = 1;
    if (line) {
      r[b.s] = -(*line)[v];
      b.lp.add_row(std::move(r), Relation::eq, 0);
    } else {
      b.lp.add_row(std::move(r), Relation::eq, (*point)[v]);
    }
  }
  if (line) {
    b.lp.objective.assign(nv, Rational(0));
    b.lp.objective[b.s] = 1;
  }
  return b;
}

// Converts an LP solution into a certificate. Inactive regions contribute recession
// directions (nonnegative vectors), which are folded into the first active point.
HullCertificate extract(const Balas& b, const LPResult& res, std::size_t regions, std::size_t dim,
                        const Rational& margin) {
  HullCertificate cert;
  cert.epsilon = margin;
  cert.points.assign(regions, {});
  std::optional<std::size_t> first_active;
  for (std::size_t j = 0; j < regions; ++j) {
    cert.lambdas.push_back(res.assignment[b.lambda[j]]);
    if (sgn(cert.lambdas[j]) > 0) {
      if (!first_active) first_active = j;
      for (std::size_t v = 0; v < dim; ++v) cert.points[j].push_back(res.assignment[b.y[j][v]] / cert.lambdas[j]);
    }
  }
  for (std::size_t j = 0; j < regions; ++j) {
    if (sgn(cert.lambdas[j]) > 0) continue;
    for (std::size_t v = 0; v < dim; ++v)
      cert.points[*first_active][v] += res.assignment[b.y[j][v]] / cert.lambdas[*first_active];
  }
  return cert;
}

std::optional<HullCertificate> closed_member(const std::vector<Rational>& point, const std::vector<TubularRegion>& regions,
                                             const Rational& margin) {
  Balas b = build_balas(regions, &point, nullptr, margin);
  LPResult res = lp_solve(b.lp);
  if (res.status != LPStatus::optimal) return std::nullopt;
  return extract(b, res, regions.size(), point.size(), margin);
}

}  // namespace

HullResult hull_membership(const std::vector<Rational>& point, const std::vector<TubularRegion>& regions, HullMode mode,
                           int shrink_floor) {
  HullResult out;
  if (regions.empty()) return out;
  check_regions(regions, point.size());
  if (shrink_floor < 1) throw ValidationError("shrink floor must be at least 1");
  auto closed = closed_member(point, regions, Rational(0));
  if (!closed) return out;
  if (mode == HullMode::closed) {
    out.member = true;
    out.certificate = std::move(*closed);
    return out;
  }
  Rational eps(1, 2);
  for (int k = 1; k <= shrink_floor; ++k, eps /= 2) {
    if (auto cert = closed_member(point, regions, eps)) {
      out.member = true;
      out.certificate = std::move(*cert);
      return out;
    }
  }
  return out;
}

bool verify_certificate(const std::vector<Rational>& point, const std::vector<TubularRegion>& regions,
                        const HullCertificate& cert, std::string* why) {
  auto fail = [why](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (cert.lambdas.size() != regions.size() || cert.points.size() != regions.size())
    return fail("certificate size does not match the regions");
  if (sgn(cert.epsilon) < 0) return fail("negative epsilon");
  Rational total = 0;
  std::vector<Rational> combo(point.size(), Rational(0));
  for (std::size_t j = 0; j < regions.size(); ++j) {
    if (sgn(cert.lambdas[j]) < 0) return fail("negative lambda");
    total += cert.lambdas[j];
    if (sgn(cert.lambdas[j]) == 0) continue;
    if (cert.points[j].size() != point.size()) return fail("active point has the wrong dimension");
    if (!regions[j].satisfies(cert.points[j], cert.epsilon)) return fail("active point violates " + regions[j].name);
    if (sgn(cert.epsilon) == 0 && !regions[j].satisfies(cert.points[j], 0)) return fail("closed check failed");
    for (std::size_t v = 0; v < point.size(); ++v) combo[v] += cert.lambdas[j] * cert.points[j][v];
  }
  if (total != 1) return fail("lambdas do not sum to 1");
  if (combo != point) return fail("convex combination does not reproduce the point");
  return true;
}

LineThreshold line_threshold(const std::vector<Rational>& weights, const std::vector<TubularRegion>& regions) {
  if (regions.empty()) throw ValidationError("line threshold needs at least one region");
  check_regions(regions, weights.size());
  for (const auto& w : weights)
    if (sgn(w) <= 0) throw ValidationError("line weights must be positive");
  Balas b = build_balas(regions, nullptr, &weights, Rational(0));
  LPResult res = lp_solve(b.lp);
  if (res.status != LPStatus::optimal)
    throw ContractViolation("line threshold LP is " + to_string(res.status) + "; regions are malformed");
  LineThreshold out;
  out.threshold = res.value;
  out.certificate = extract(b, res, regions.size(), weights.size(), Rational(0));
  return out;
}

ShortcutResult shortcut_2d(const TypeSystem& ts, const ElementSet& T1, const ElementSet& T2, const WeightFunction& wt,
                           const SubconvexityProfile& profile) {
  ShortcutResult out;
  for (const ElementSet* T : {&T1, &T2})
    if (!is_normal(ts.group, *T) || !is_abelian(ts.group, *T))
      throw ContractViolation("shortcut subgroups must be abelian normal");
  const MinWeight mw = min_weight(wt);
  const auto in1 = ts.types_in(T1), in2 = ts.types_in(T2);
  auto inside = [](const std::vector<std::size_t>& s, std::size_t t) { return std::find(s.begin(), s.end(), t) != s.end(); };
  for (std::size_t tau : mw.argmin)
    for (std::size_t kappa : mw.argmin) {
      if (tau == kappa) continue;
      bool ok = true;
      for (std::size_t m : mw.argmin) {
        if (m != kappa && !inside(in1, m)) ok = false;
        if (m != tau && !inside(in2, m)) ok = false;
      }
      if (!ok) continue;
      const RationalMatrix M = subconvexity_matrix(ts, profile);
      out.applicable = true;
      out.tau = ts.types[tau].label;
      out.kappa = ts.types[kappa].label;
      out.product = M[tau][kappa] * M[kappa][tau];
      out.passes = out.product < 1;
      out.explanation = "minimum types split at " + out.tau + " and " + out.kappa;
      return out;
    }
  out.explanation = "minimum-weight types do not split between the two subgroups with one exception each";
  return out;
}

bool conditional_hull_point_check(const std::vector<Rational>& point,
                                  const std::vector<std::vector<std::size_t>>& witness_types, const Rational& gamma) {
  if (gamma < 0 || gamma >= 1) throw ValidationError("gamma must lie in [0, 1)");
  std::set<std::size_t> covered;
  for (const auto& w : witness_types)
    for (std::size_t t : w) {
      if (t >= point.size()) throw ValidationError("witness type index out of range");
      covered.insert(t);
    }
  const Rational edge = covered.empty() ? Rational(1) : Rational(1) - (1 - gamma) / static_cast<unsigned long>(covered.size());
  for (std::size_t v = 0; v < point.size(); ++v)
    if (!(point[v] > (covered.count(v) ? edge : Rational(1)))) return false;
  return true;
}

}  // namespace malle
