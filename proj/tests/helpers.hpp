#pragma once
// Small conveniences shared by the unit-test translation units.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "malle/catalog.hpp"
#include "malle/group.hpp"
#include "malle/perm.hpp"
#include "malle/ramtypes.hpp"
#include "malle/rational.hpp"
#include "malle/regions.hpp"

namespace th {

using malle::Rational;

inline Rational q(const char* s) { return malle::parse_rational(s); }

inline Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

inline malle::PermutationGroup group(int degree, std::initializer_list<const char*> gens, const char* name = "") {
  std::vector<malle::Permutation> ps;
  for (const char* g : gens) ps.push_back(malle::parse_permutation(g, degree));
  return malle::PermutationGroup(degree, ps, name);
}

inline std::size_t elt(const malle::PermutationGroup& G, const char* cycles) {
  return G.locate(malle::parse_permutation(cycles, G.degree()));
}

inline malle::ElementSet span(const malle::PermutationGroup& G, std::initializer_list<const char*> gens) {
  malle::ElementSet s;
  for (const char* g : gens) s.push_back(elt(G, g));
  std::sort(s.begin(), s.end());
  return malle::generate_subgroup(G, s);
}

inline malle::TypeSystem types(const std::string& entry) {
  return malle::tame_types(malle::resolve_entry(entry).group, malle::CyclotomicProfile::full_q());
}

// Values keyed by type label.
inline std::map<std::string, Rational> by_label(const malle::TypeSystem& ts, const std::vector<Rational>& v) {
  std::map<std::string, Rational> out;
  for (std::size_t i = 0; i < ts.types.size(); ++i) out[ts.types[i].label] = v.at(i);
  return out;
}

inline std::vector<Rational> point(const malle::TypeSystem& ts, const std::map<std::string, Rational>& m) {
  std::vector<Rational> out(ts.types.size());
  for (const auto& [k, v] : m) out.at(ts.index(k)) = v;
  return out;
}

inline std::set<std::string> labels_of(const malle::TypeSystem& ts, const std::vector<std::size_t>& idx) {
  std::set<std::string> out;
  for (std::size_t i : idx) out.insert(ts.types[i].label);
  return out;
}

// Order-independent rendering of a constraint: terms sorted by variable name.
inline std::string canonical(const malle::LinearConstraint& c, const std::vector<std::string>& vars) {
  std::map<std::string, Rational> terms;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (c.coeffs[i] != 0) terms[vars[i]] = c.coeffs[i];
  std::string s;
  for (const auto& [k, v] : terms) s += malle::to_display(v) + "*" + k + " ";
  return s + (c.strict ? "> " : ">= ") + malle::to_display(c.bound);
}

inline std::set<std::string> canonical_region(const malle::TubularRegion& r) {
  std::set<std::string> out;
  for (const auto& c : r.constraints) out.insert(canonical(c, r.variables));
  return out;
}

}  // namespace th
