#include "malle/ramtypes.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "malle/errors.hpp"

namespace malle {

namespace {

std::vector<int> unit_group(int e) {
  std::vector<int> out;
  if (e == 1) return {0};
  for (int u = 1; u < e; ++u)
    if (std::gcd(u, e) == 1) out.push_back(u);
  return out;
}

std::vector<int> generated_units(int e, const std::vector<int>& gens) {
  std::set<int> s{1 % e};
  std::vector<int> stack{1 % e};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int g : gens) {
      int y = static_cast<int>((static_cast<long long>(x) * g) % e);
      if (s.insert(y).second) stack.push_back(y);
    }
  }
  return {s.begin(), s.end()};
}

std::string letters(std::size_t k) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('A' + k % 26));
    k /= 26;
  } while (k-- > 0);
  return s;
}

// "4A1" and "4A-1" share the stem "4A".
std::string label_stem(const std::string& label) {
  std::size_t i = 0;
  while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
  while (i < label.size() && std::isalpha(static_cast<unsigned char>(label[i]))) ++i;
  return label.substr(0, i);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t root(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = root(a);
    b = root(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

CyclotomicProfile CyclotomicProfile::full_q(int field_degree) {
  if (field_degree < 1) throw ValidationError("field degree must be positive");
  CyclotomicProfile p;
  p.field_degree_ = field_degree;
  p.name_ = field_degree == 1 ? "Q" : "full:" + std::to_string(field_degree);
  return p;
}

CyclotomicProfile CyclotomicProfile::restricted(std::map<int, std::vector<int>> generators, int field_degree,
                                                std::string name) {
  if (field_degree < 1) throw ValidationError("field degree must be positive");
  CyclotomicProfile p;
  p.mode_ = Mode::restricted;
  p.field_degree_ = field_degree;
  p.name_ = std::move(name);
  for (auto& [e, gens] : generators) {
    if (e < 1) throw ValidationError("modulus must be positive, got " + std::to_string(e));
    for (int& u : gens) {
      u = ((u % e) + e) % e;
      if (std::gcd(u, e) != 1 && e > 1)
        throw ValidationError("residue " + std::to_string(u) + " is not a unit modulo " + std::to_string(e));
    }
    p.listed_[e] = generated_units(e, gens);
  }
  for (const auto& [e, ue] : p.listed_)
    for (const auto& [d, ud] : p.listed_) {
      if (d == e || e % d != 0) continue;
      for (int u : ue)
        if (!std::binary_search(ud.begin(), ud.end(), u % d))
          throw ValidationError("U_" + std::to_string(e) + " does not reduce into U_" + std::to_string(d));
    }
  return p;
}

CyclotomicProfile CyclotomicProfile::trivial() {
  CyclotomicProfile p;
  p.mode_ = Mode::trivial;
  p.name_ = "conjugacy";
  return p;
}

std::vector<int> CyclotomicProfile::units(int e) const {
  if (e < 1) throw ValidationError("modulus must be positive");
  switch (mode_) {
    case Mode::full:
      return unit_group(e);
    case Mode::trivial:
      return {1 % e};
    case Mode::restricted:
      break;
  }
  if (auto it = listed_.find(e); it != listed_.end()) return it->second;
  std::vector<int> out;
  for (int u : unit_group(e)) {
    bool ok = true;
    for (const auto& [d, ud] : listed_)
      if (e % d == 0 && !std::binary_search(ud.begin(), ud.end(), u % d)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(u);
  }
  return out;
}

std::size_t TypeSystem::index(const std::string& label) const {
  auto i = find(label);
  if (!i) throw ValidationError("unknown type label '" + label + "'");
  return *i;
}

std::optional<std::size_t> TypeSystem::find(const std::string& label) const {
  for (std::size_t i = 0; i < types.size(); ++i)
    if (types[i].label == label) return i;
  return std::nullopt;
}

std::vector<std::string> TypeSystem::labels() const {
  std::vector<std::string> out;
  for (const auto& t : types) out.push_back(t.label);
  return out;
}

std::vector<std::size_t> TypeSystem::types_in(const ElementSet& subgroup) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < types.size(); ++i)
    if (set_contains(subgroup, types[i].representative)) out.push_back(i);
  return out;
}

TypeSystem tame_types(const PermutationGroup& G, const CyclotomicProfile& profile) {
  if (!G.is_transitive()) throw ContractViolation("tame types require a transitive group");
  return tame_types_unchecked(G, profile);
}

TypeSystem tame_types_unchecked(const PermutationGroup& G, const CyclotomicProfile& profile) {
  const auto classes = conjugacy_classes(G);
  std::vector<std::size_t> class_of(G.order());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t x : classes[c].members) class_of[x] = c;

  UnionFind uf(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const std::size_t x = classes[c].representative;
    const int e = G.element_order(x);
    if (e == 1) continue;
    for (int u : profile.units(e)) uf.join(c, class_of[G.locate(G.element(x).pow(u))]);
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (G.element_order(classes[c].representative) > 1) groups[uf.root(c)].push_back(c);

  TypeSystem ts{G, profile, {}, std::vector<int>(G.order(), -1)};
  for (const auto& [root, cls] : groups) {
    TameType t;
    for (std::size_t c : cls) t.members = set_union(t.members, classes[c].members);
    t.representative = t.members.front();
    t.order = G.element_order(t.representative);
    t.size = t.members.size();
    t.orbit = classes[class_of[t.representative]].members;
    t.zeta_degree = static_cast<int>(t.size / t.orbit.size());
    ts.types.push_back(std::move(t));
  }
  std::sort(ts.types.begin(), ts.types.end(), [](const TameType& a, const TameType& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.size != b.size) return a.size < b.size;
    return a.representative < b.representative;
  });

  // Pinned labels first, then order + letter for the rest, skipping letters already taken.
  std::vector<std::vector<std::string>> pinned(ts.types.size());
  for (std::size_t i = 0; i < ts.types.size(); ++i)
    for (std::size_t x : ts.types[i].members) ts.type_of[x] = static_cast<int>(i);
  for (const auto& [label, rep] : G.labels()) {
    auto idx = G.find(rep);
    if (!idx) throw ContractViolation("label representative " + rep.to_string() + " is not in the group");
    int t = ts.type_of[*idx];
    if (t >= 0) pinned[static_cast<std::size_t>(t)].push_back(label);
  }
  std::set<std::string> used;
  for (std::size_t i = 0; i < ts.types.size(); ++i) {
    if (pinned[i].empty()) continue;
    ts.types[i].label = pinned[i].size() == 1 ? pinned[i].front() : label_stem(pinned[i].front());
    used.insert(ts.types[i].label);
  }
  std::map<int, std::size_t> next_letter;
  for (auto& t : ts.types) {
    if (!t.label.empty()) continue;
    std::string candidate;
    do {
      candidate = std::to_string(t.order) + letters(next_letter[t.order]++);
    } while (used.count(candidate));
    t.label = candidate;
    used.insert(candidate);
  }
  return ts;
}

int zeta_degree(const TypeSystem& ts, std::size_t tau) { return ts.types.at(tau).zeta_degree; }

WeightFunction weight_discriminant(const TypeSystem& ts, int n) {
  WeightFunction wt{"disc", {}};
  for (const auto& t : ts.types) wt.values.emplace_back(index_of(ts.group.element(t.representative), n));
  return wt;
}

WeightFunction weight_discriminant(const TypeSystem& ts) { return weight_discriminant(ts, ts.group.degree()); }

bool is_d4(const PermutationGroup& G) {
  if (G.order() != 8 || is_abelian(G, whole_group(G))) return false;
  int involutions = 0;
  for (std::size_t x = 0; x < G.order(); ++x)
    if (G.element_order(x) == 2) ++involutions;
  return involutions == 5;
}

WeightFunction weight_conductor_d4(const TypeSystem& ts) {
  if (!is_d4(ts.group)) throw ContractViolation("the conductor weight is defined only for D4");
  const ElementSet z = center(ts.group);
  WeightFunction wt{"cond-d4", {}};
  for (const auto& t : ts.types) {
    bool central = set_contains(z, t.representative);
    wt.values.emplace_back(t.order == 4 || central ? 2 : 1);
  }
  return wt;
}

WeightFunction weight_product_ramified(const TypeSystem& ts) {
  return WeightFunction{"prodram", std::vector<Rational>(ts.types.size(), Rational(1))};
}

WeightFunction weight_custom(const TypeSystem& ts, const std::map<std::string, Rational>& table, std::string name) {
  for (const auto& [label, value] : table) {
    if (!ts.find(label)) throw ValidationError("weight given for unknown type '" + label + "'");
    if (value <= 0) throw ValidationError("weight of " + label + " must be positive");
  }
  WeightFunction wt{std::move(name), {}};
  for (const auto& t : ts.types) {
    auto it = table.find(t.label);
    if (it == table.end()) throw ValidationError("missing weight for type " + t.label);
    wt.values.push_back(it->second);
  }
  return wt;
}

WeightFunction weight_inv_gamma(const TypeSystem& ts, const Rational& gamma) {
  if (!is_d4(ts.group)) throw ContractViolation("the inv-gamma weight is defined only for D4");
  if (gamma < 0) throw ValidationError("gamma must be nonnegative");
  std::map<std::string, Rational> table{{"2A", 2}, {"2B", 1 + gamma}, {"2C", 1}, {"4A", 2 + gamma}};
  for (const auto& [label, v] : table)
    if (!ts.find(label)) throw ContractViolation("inv-gamma needs the pinned D4 labels; missing " + label);
  return weight_custom(ts, table, "inv-gamma:" + to_display(gamma));
}

MinWeight min_weight(const WeightFunction& wt) {
  if (wt.values.empty()) throw ValidationError("weight function has no types");
  MinWeight m{wt.values.front(), {}};
  for (const auto& v : wt.values) m.a = rational_min(m.a, v);
  for (std::size_t i = 0; i < wt.values.size(); ++i)
    if (wt.values[i] == m.a) m.argmin.push_back(i);
  return m;
}

std::optional<std::size_t> pushforward_type(const TypeSystem& parent, std::size_t tau, const QuotientGroup& q,
                                            const TypeSystem& quotient_types) {
  const auto& t = parent.types.at(tau);
  std::optional<std::size_t> image;
  bool trivial = false;
  for (std::size_t x : t.members) {
    std::size_t y = q.projection[x];
    int k = quotient_types.type_of.at(y);
    if (k < 0) {
      trivial = true;
    } else if (!image) {
      image = static_cast<std::size_t>(k);
    } else if (*image != static_cast<std::size_t>(k)) {
      throw ContractViolation("type " + t.label + " does not push forward to a single type");
    }
  }
  if (trivial && image) throw ContractViolation("type " + t.label + " maps partly to the identity");
  return image;
}

namespace {
bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace

int pole_order_bound(const TypeSystem& ts, std::size_t tau, bool group_is_nilpotent) {
  const auto& t = ts.types.at(tau);
  if (group_is_nilpotent && is_prime(t.order)) return 1;
  return t.zeta_degree;
}

int pole_order_bound(const TypeSystem& ts, std::size_t tau) {
  return pole_order_bound(ts, tau, is_nilpotent(ts.group));
}

}  // namespace malle
