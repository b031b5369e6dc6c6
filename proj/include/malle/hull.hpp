#pragma once

#include <string>
#include <vector>

#include "malle/rational.hpp"
#include "malle/regions.hpp"

namespace malle {

enum class HullMode { open, closed };

// Constructive witness: point = sum_j lambdas[j] * points[j] over the active regions
// (lambdas[j] > 0); inactive regions carry an empty point. Every active point satisfies its
// region with slack at least epsilon.
struct HullCertificate {
  std::vector<Rational> lambdas;
  std::vector<std::vector<Rational>> points;
  Rational epsilon;
};

struct HullResult {
  bool member = false;
  HullCertificate certificate;  // meaningful only for members
};

inline constexpr int kDefaultShrinkFloor = 20;

// Closed mode: membership in the hull of the closed regions (extended formulation).
// Open mode: closed mode on regions shrunk by eps = 2^-1, ..., 2^-floor; the certificate
// records the largest eps that works.
HullResult hull_membership(const std::vector<Rational>& point, const std::vector<TubularRegion>& regions,
                           HullMode mode, int shrink_floor = kDefaultShrinkFloor);

// Recomputes the convex combination and every slack from scratch.
bool verify_certificate(const std::vector<Rational>& point, const std::vector<TubularRegion>& regions,
                        const HullCertificate& cert, std::string* why = nullptr);

struct LineThreshold {
  Rational threshold;           // infimum s with s * weights in the closed hull
  HullCertificate certificate;  // closed-mode witness at the threshold point
};

LineThreshold line_threshold(const std::vector<Rational>& weights, const std::vector<TubularRegion>& regions);

struct ShortcutResult {
  bool applicable = false;
  std::string explanation;
  std::string tau, kappa;  // the split minimum types
  Rational product;
  bool passes = false;
};

// Two-dimensional shortcut: product M[tau][kappa] * M[kappa][tau] for minimum types tau, kappa with
// min \ {kappa} inside T1 and min \ {tau} inside T2. Passes when the product is below 1.
ShortcutResult shortcut_2d(const TypeSystem& ts, const ElementSet& T1, const ElementSet& T2, const WeightFunction& wt,
                           const SubconvexityProfile& profile);

// Covered coordinates must exceed 1 - (1 - gamma)/n (n = number of covered coordinates), the rest 1.
bool conditional_hull_point_check(const std::vector<Rational>& point,
                                  const std::vector<std::vector<std::size_t>>& witness_types, const Rational& gamma);

}  // namespace malle
