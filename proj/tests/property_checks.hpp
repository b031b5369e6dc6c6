#pragma once
// Randomized and exhaustive property suites shared by the unit tests and the acceptance binary.
// Each suite returns how many instances it checked and how many disagreed with the oracle.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "malle/catalog.hpp"
#include "malle/concentration.hpp"
#include "malle/group.hpp"
#include "malle/hull.hpp"
#include "malle/ramtypes.hpp"
#include "oracles.hpp"

namespace props {

using malle::Rational;

// mpq_class(a, b) is not reduced automatically, and equality assumes reduced operands.
inline Rational ratio(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

struct Tally {
  int instances = 0;
  int failures = 0;
  std::vector<std::string> notes;  // first few disagreements

  void fail(const std::string& why) {
    ++failures;
    if (notes.size() < 5) notes.push_back(why);
  }
};

struct NamedGroup {
  std::string name;
  int degree;
  std::vector<std::string> gens;
};

// Small groups for exhaustive checks, each of order at most 200.
inline std::vector<NamedGroup> small_groups() {
  return {
      {"C1", 1, {"()"}},
      {"C2", 2, {"(1,2)"}},
      {"C5", 5, {"(1,2,3,4,5)"}},
      {"C6", 6, {"(1,2,3,4,5,6)"}},
      {"C8", 8, {"(1,2,3,4,5,6,7,8)"}},
      {"C12", 12, {"(1,2,3,4,5,6,7,8,9,10,11,12)"}},
      {"V4", 4, {"(1,2)(3,4)", "(1,3)(2,4)"}},
      {"S3", 3, {"(1,2,3)", "(1,2)"}},
      {"S3reg", 6, {"(1,2,3)(4,5,6)", "(1,4)(2,6)(3,5)"}},
      {"D4", 4, {"(1,2,3,4)", "(2,4)"}},
      {"D5", 5, {"(1,2,3,4,5)", "(2,5)(3,4)"}},
      {"D6", 6, {"(1,2,3,4,5,6)", "(2,6)(3,5)"}},
      {"Q8", 8, {"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"}},
      {"A4", 4, {"(1,2,3)", "(2,3,4)"}},
      {"S4", 4, {"(1,2,3,4)", "(1,2)"}},
      {"F20", 5, {"(1,2,3,4,5)", "(2,3,5,4)"}},
      {"A5", 5, {"(1,2,3,4,5)", "(1,2,3)"}},
      {"S5", 5, {"(1,2,3,4,5)", "(1,2)"}},
      {"Q8C2", 8, {"(1,3,5,7)(2,4,6,8)", "(1,8,5,4)(2,7,6,3)", "(1,5)(3,7)"}},
      {"C2wrC2", 4, {"(1,2)", "(1,3)(2,4)"}},
      {"C3wrC2", 6, {"(1,2,3)", "(1,4)(2,5)(3,6)"}},
      {"C2wrS3", 6, {"(1,2)", "(1,3,5)(2,4,6)", "(1,3)(2,4)"}},
      {"S3wrC2", 6, {"(1,2,3)", "(1,2)", "(1,4)(2,5)(3,6)"}},
      {"C4wrC2", 8, {"(1,2,3,4)", "(1,5)(2,6)(3,7)(4,8)"}},
      {"F21", 7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}},
  };
}

inline malle::PermutationGroup build(const NamedGroup& g) {
  std::vector<malle::Permutation> gens;
  for (const auto& s : g.gens) gens.push_back(malle::parse_permutation(s, g.degree));
  return malle::PermutationGroup(g.degree, gens, g.name);
}

inline std::set<oracle::Perm> brute(const NamedGroup& g) {
  std::vector<oracle::Perm> gens;
  for (const auto& s : g.gens) gens.push_back(oracle::cycles(s, g.degree));
  return oracle::closure(gens, g.degree);
}

inline oracle::PermSet to_perms(const malle::PermutationGroup& G, const malle::ElementSet& s) {
  oracle::PermSet out;
  for (std::size_t x : s) out.insert(G.element(x).images());
  return out;
}

// Class partition, rational-class partition and index invariance against the brute-force closure.
inline Tally class_partition_suite() {
  Tally t;
  for (const auto& ng : small_groups()) {
    ++t.instances;
    const auto G = build(ng);
    const auto B = brute(ng);
    if (G.order() != B.size()) {
      t.fail(ng.name + ": order " + std::to_string(G.order()) + " vs " + std::to_string(B.size()));
      continue;
    }
    std::set<oracle::PermSet> classes;
    for (const auto& c : malle::conjugacy_classes(G)) {
      classes.insert(to_perms(G, c.members));
      int ind = -1;
      for (std::size_t x : c.members) {
        const int i = malle::index_of(G.element(x), G.degree());
        const int expect = ng.degree - oracle::orbit_count(G.element(x).images());
        if (i != expect || (ind >= 0 && i != ind)) t.fail(ng.name + ": index not constant on a class");
        ind = i;
      }
    }
    if (classes != oracle::conjugacy_classes(B)) t.fail(ng.name + ": conjugacy classes differ");
    if (G.order() > 1) {
      const auto ts = malle::tame_types_unchecked(G, malle::CyclotomicProfile::full_q());
      std::set<oracle::PermSet> types;
      std::size_t total = 1;
      for (const auto& ty : ts.types) {
        types.insert(to_perms(G, ty.members));
        total += ty.size;
      }
      auto expected = oracle::rational_classes(B);
      expected.erase(oracle::PermSet{oracle::identity(ng.degree)});
      if (types != expected) t.fail(ng.name + ": rational classes differ");
      if (total != G.order()) t.fail(ng.name + ": types do not partition G minus 1");
    }
  }
  return t;
}

// normal_subgroups (join closure) against a scan over unions of conjugacy classes, |G| <= 100.
inline Tally normal_subgroup_suite() {
  Tally t;
  for (const auto& ng : small_groups()) {
    const auto G = build(ng);
    if (G.order() > 100) continue;
    ++t.instances;
    std::set<oracle::PermSet> got;
    for (const auto& N : malle::normal_subgroups(G)) got.insert(to_perms(G, N));
    if (got != oracle::normal_subgroups_by_class_scan(brute(ng)))
      t.fail(ng.name + ": normal subgroups differ (" + std::to_string(got.size()) + " found)");
  }
  return t;
}

// ---- hull geometry ---------------------------------------------------------------------------

struct RandomRegions {
  std::vector<malle::TubularRegion> regions;
  std::vector<oracle::Poly> polys;
};

inline RandomRegions random_regions(std::mt19937& rng, std::size_t d) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  RandomRegions out;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < d; ++i) vars.push_back("x" + std::to_string(i));
  const int count = pick(1, 3);
  for (int j = 0; j < count; ++j) {
    malle::TubularRegion r;
    r.name = "R" + std::to_string(j);
    r.variables = vars;
    oracle::Poly P;
    std::vector<Rational> low;
    for (std::size_t i = 0; i < d; ++i) {
      low.push_back(ratio(pick(0, 8), 8));
      malle::LinearConstraint c{std::vector<Rational>(d, Rational(0)), low.back(), true};
      c.coeffs[i] = 1;
      r.constraints.push_back(c);
      oracle::Vec a(d, oracle::Q(0));
      a[i] = 1;
      P.a.push_back(a);
      P.b.push_back(low.back());
    }
    if (pick(0, 3) > 0) {
      malle::LinearConstraint c{std::vector<Rational>(d, Rational(0)), Rational(0), true};
      int nonzero = 0;
      for (std::size_t i = 0; i < d; ++i) {
        c.coeffs[i] = ratio(pick(0, 3), 2);
        if (c.coeffs[i] != 0) ++nonzero;
      }
      if (nonzero < 2) {
        c.coeffs[0] = 1;
        c.coeffs[1] = Rational(1, 2);
      }
      for (std::size_t i = 0; i < d; ++i) c.bound += c.coeffs[i] * low[i];
      c.bound += ratio(pick(1, 8), 8);
      r.constraints.push_back(c);
      P.a.push_back(oracle::Vec(c.coeffs.begin(), c.coeffs.end()));
      P.b.push_back(c.bound);
    }
    out.regions.push_back(r);
    out.polys.push_back(P);
  }
  return out;
}

// Closed-mode LP membership and line thresholds against vertex enumeration plus Caratheodory.
inline Tally lp_caratheodory_suite(int instances, unsigned seed = 20240601u) {
  Tally t;
  std::mt19937 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int k = 0; k < instances; ++k) {
    ++t.instances;
    const std::size_t d = k % 2 == 0 ? 2 : 3;
    const RandomRegions rr = random_regions(rng, d);
    std::vector<oracle::Vec> verts;
    for (const auto& P : rr.polys)
      for (auto& v : oracle::vertices(P, d)) verts.push_back(v);

    std::vector<std::vector<Rational>> probes;
    for (int p = 0; p < 3; ++p) {
      std::vector<Rational> x;
      for (std::size_t i = 0; i < d; ++i) x.push_back(ratio(pick(0, 24), 8));
      probes.push_back(x);
    }
    // A convex combination of two vertices, pushed slightly inward and slightly outward.
    const auto& v1 = verts[static_cast<std::size_t>(pick(0, static_cast<int>(verts.size()) - 1))];
    const auto& v2 = verts[static_cast<std::size_t>(pick(0, static_cast<int>(verts.size()) - 1))];
    for (const Rational shift : {Rational(1, 64), Rational(-1, 64)}) {
      std::vector<Rational> x;
      for (std::size_t i = 0; i < d; ++i) x.push_back((v1[i] + v2[i]) / 2 + shift);
      probes.push_back(x);
    }

    std::ostringstream tag;
    tag << "instance " << k << " (d=" << d << ", regions=" << rr.regions.size() << ")";
    for (const auto& x : probes) {
      const oracle::Vec ox(x.begin(), x.end());
      const bool expect = oracle::orthant_hull_member(verts, ox);
      const auto got = malle::hull_membership(x, rr.regions, malle::HullMode::closed);
      if (got.member != expect) t.fail(tag.str() + ": membership disagrees");
      if (got.member && !malle::verify_certificate(x, rr.regions, got.certificate))
        t.fail(tag.str() + ": certificate does not verify");
      // Open mode: a point pushed inward by 1/8 from a closed member is an open member.
      if (expect) {
        std::vector<Rational> inner;
        for (const auto& c : x) inner.push_back(c + Rational(1, 8));
        const auto open = malle::hull_membership(inner, rr.regions, malle::HullMode::open);
        if (!open.member) t.fail(tag.str() + ": open mode misses an interior point");
        if (open.member && sgn(open.certificate.epsilon) <= 0) t.fail(tag.str() + ": open certificate has no slack");
      }
      const auto open_x = malle::hull_membership(x, rr.regions, malle::HullMode::open);
      if (open_x.member && !expect) t.fail(tag.str() + ": open member outside the closed hull");
    }

    std::vector<Rational> w;
    for (std::size_t i = 0; i < d; ++i) w.emplace_back(pick(1, 4));
    const auto line = malle::line_threshold(w, rr.regions);
    oracle::Vec at, below;
    for (std::size_t i = 0; i < d; ++i) {
      at.push_back(w[i] * line.threshold);
      below.push_back(w[i] * (line.threshold - Rational(1, 256)));
    }
    if (!oracle::orthant_hull_member(verts, at)) t.fail(tag.str() + ": threshold point outside the hull");
    if (oracle::orthant_hull_member(verts, below)) t.fail(tag.str() + ": threshold is not minimal");
  }
  return t;
}

// Points passing the conditional-hull check are open-mode members of the hull of product
// regions {x_i > gamma on S_j, x_i > 1 elsewhere}.
inline Tally conditional_hull_suite(int draws, unsigned seed = 8101u) {
  Tally t;
  std::mt19937 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int k = 0; k < draws; ++k) {
    const std::size_t d = static_cast<std::size_t>(pick(2, 5));
    const Rational gamma = ratio(pick(0, 7), 8);
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < d; ++i) vars.push_back("x" + std::to_string(i));
    const int count = pick(1, 3);
    std::vector<std::vector<std::size_t>> sets;
    std::vector<malle::TubularRegion> regions;
    for (int j = 0; j < count; ++j) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < d; ++i)
        if (pick(0, 2) == 0) s.push_back(i);
      if (s.empty()) s.push_back(static_cast<std::size_t>(pick(0, static_cast<int>(d) - 1)));
      malle::TubularRegion r;
      r.name = "S" + std::to_string(j);
      r.variables = vars;
      for (std::size_t i = 0; i < d; ++i) {
        const bool in = std::find(s.begin(), s.end(), i) != s.end();
        malle::LinearConstraint c{std::vector<Rational>(d, Rational(0)), in ? gamma : Rational(1), true};
        c.coeffs[i] = 1;
        r.constraints.push_back(c);
      }
      sets.push_back(s);
      regions.push_back(r);
    }
    std::set<std::size_t> covered;
    for (const auto& s : sets) covered.insert(s.begin(), s.end());
    const Rational edge = 1 - (1 - gamma) / static_cast<unsigned long>(covered.size());
    std::vector<Rational> x;
    for (std::size_t i = 0; i < d; ++i) {
      const Rational base = covered.count(i) ? edge : Rational(1);
      x.push_back(base + ratio(pick(1, 16), 32));
    }
    if (!malle::conditional_hull_point_check(x, sets, gamma)) continue;
    ++t.instances;
    const auto r = malle::hull_membership(x, regions, malle::HullMode::open);
    if (!r.member) {
      t.fail("draw " + std::to_string(k) + ": edge point not in the hull");
    } else if (!malle::verify_certificate(x, regions, r.certificate)) {
      t.fail("draw " + std::to_string(k) + ": certificate does not verify");
    }
  }
  return t;
}

// Base elements of N wr B have index equal to the sum over blocks, and the minimum index of the
// wreath product equals a(N).
inline Tally wreath_suite() {
  Tally t;
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"C2", "C2"}, {"C3", "C2"}, {"S3", "C2"}, {"4T3", "C2"}, {"C2", "S3"}, {"C2", "C3"}, {"4T3", "C3"}};
  for (const auto& [n_spec, b_spec] : pairs) {
    ++t.instances;
    const auto N = malle::resolve_entry(n_spec).group;
    const auto B = malle::resolve_entry(b_spec).group;
    const auto W = malle::wreath_product(N, B);
    const int n = N.degree(), m = B.degree();
    std::size_t expected_order = B.order();
    for (int i = 0; i < m; ++i) expected_order *= N.order();
    if (W.order() != expected_order) {
      t.fail(n_spec + " wr " + b_spec + ": order");
      continue;
    }
    int aN = n;
    for (std::size_t x = 1; x < N.order(); ++x) aN = std::min(aN, malle::index_of(N.element(x), n));
    int aW = n * m;
    for (std::size_t x = 1; x < W.order(); ++x) {
      const auto& g = W.element(x);
      aW = std::min(aW, malle::index_of(g, n * m));
      bool base = true;
      for (int p = 0; p < n * m && base; ++p) base = g(p) / n == p / n;
      if (!base) continue;
      int sum = 0;
      for (int blk = 0; blk < m; ++blk) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = g(blk * n + i) - blk * n;
        sum += malle::index_of(malle::Permutation(img), n);
      }
      if (sum != malle::index_of(g, n * m)) t.fail(n_spec + " wr " + b_spec + ": index not additive");
    }
    if (aW != aN) t.fail(n_spec + " wr " + b_spec + ": a(W) != a(N)");
  }
  return t;
}

}  // namespace props
