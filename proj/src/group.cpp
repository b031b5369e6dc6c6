#include "malle/group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <unordered_map>

#include "malle/errors.hpp"

namespace malle {

namespace {

constexpr std::size_t kTableLimit = 1024;

struct Enumerated {
  std::vector<Permutation> elems;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  std::vector<std::size_t> inverses;
  mutable std::once_flag table_once;
  mutable std::vector<std::uint32_t> table;
};

std::shared_ptr<Enumerated> index_elements(std::vector<Permutation> elems) {
  auto e = std::make_shared<Enumerated>();
  std::sort(elems.begin(), elems.end());
  e->elems = std::move(elems);
  e->index.reserve(e->elems.size() * 2);
  for (std::size_t i = 0; i < e->elems.size(); ++i) e->index.emplace(e->elems[i], i);
  e->inverses.resize(e->elems.size());
  for (std::size_t i = 0; i < e->elems.size(); ++i) {
    auto it = e->index.find(e->elems[i].inverse());
    if (it == e->index.end()) throw ContractViolation("element list is not closed under inverses");
    e->inverses[i] = it->second;
  }
  return e;
}

}  // namespace

struct PermutationGroup::State {
  int degree = 0;
  std::vector<Permutation> gens;
  std::string name;
  std::vector<ClassLabel> labels;
  std::size_t cap = kDefaultElementCap;
  std::once_flag once;
  std::shared_ptr<Enumerated> data;
};

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators, std::string name,
                                   std::size_t cap)
    : st_(std::make_shared<State>()) {
  if (degree <= 0) throw ValidationError("groups of degree 0 are not supported");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw ValidationError("generator " + g.to_string() + " has degree " + std::to_string(g.degree()) +
                            ", expected " + std::to_string(degree));
  st_->degree = degree;
  st_->gens = std::move(generators);
  st_->name = std::move(name);
  st_->cap = cap;
}

PermutationGroup PermutationGroup::from_elements(int degree, std::vector<Permutation> elements, std::string name) {
  if (degree <= 0) throw ValidationError("groups of degree 0 are not supported");
  auto data = index_elements(std::move(elements));
  if (data->elems.empty() || !data->elems.front().is_identity())
    throw ContractViolation("element list lacks the identity");
  // Greedy generating set: add any element outside the subgroup generated so far.
  std::vector<Permutation> gens;
  std::set<Permutation> reached{data->elems.front()};
  for (const auto& x : data->elems) {
    if (reached.count(x)) continue;
    gens.push_back(x);
    std::deque<Permutation> queue(reached.begin(), reached.end());
    while (!queue.empty()) {
      Permutation y = queue.front();
      queue.pop_front();
      for (const auto& g : gens) {
        Permutation z = g * y;
        if (reached.insert(z).second) queue.push_back(z);
      }
    }
  }
  if (reached.size() != data->elems.size()) throw ContractViolation("element list is not closed");
  PermutationGroup G(degree, std::move(gens), std::move(name), std::max(kDefaultElementCap, data->elems.size()));
  std::call_once(G.st_->once, [&] { G.st_->data = data; });
  return G;
}

PermutationGroup PermutationGroup::with_labels(std::vector<ClassLabel> labels) const {
  materialize();
  auto st = std::make_shared<State>();
  st->degree = st_->degree;
  st->gens = st_->gens;
  st->name = st_->name;
  st->cap = st_->cap;
  st->labels = std::move(labels);
  std::call_once(st->once, [&] { st->data = st_->data; });
  return PermutationGroup(st);
}

PermutationGroup PermutationGroup::with_name(std::string name) const {
  materialize();
  auto st = std::make_shared<State>();
  st->degree = st_->degree;
  st->gens = st_->gens;
  st->name = std::move(name);
  st->cap = st_->cap;
  st->labels = st_->labels;
  std::call_once(st->once, [&] { st->data = st_->data; });
  return PermutationGroup(st);
}

int PermutationGroup::degree() const { return st_->degree; }
const std::string& PermutationGroup::name() const { return st_->name; }
const std::vector<Permutation>& PermutationGroup::generators() const { return st_->gens; }
const std::vector<ClassLabel>& PermutationGroup::labels() const { return st_->labels; }
std::size_t PermutationGroup::cap() const { return st_->cap; }

void PermutationGroup::materialize() const {
  std::call_once(st_->once, [this] {
    const Permutation id = Permutation::identity(st_->degree);
    std::vector<Permutation> elems{id};
    std::unordered_map<Permutation, std::size_t, PermutationHash> seen{{id, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (const auto& g : st_->gens) {
        Permutation y = g * elems[head];
        if (seen.emplace(y, elems.size()).second) {
          elems.push_back(std::move(y));
          if (elems.size() > st_->cap)
            throw ResourceCapError("group order exceeds the element cap of " + std::to_string(st_->cap));
        }
      }
    }
    st_->data = index_elements(std::move(elems));
  });
}

const std::vector<Permutation>& PermutationGroup::elements() const {
  materialize();
  return st_->data->elems;
}

std::optional<std::size_t> PermutationGroup::find(const Permutation& p) const {
  materialize();
  if (p.degree() != st_->degree) return std::nullopt;
  auto it = st_->data->index.find(p);
  if (it == st_->data->index.end()) return std::nullopt;
  return it->second;
}

std::size_t PermutationGroup::locate(const Permutation& p) const {
  auto i = find(p);
  if (!i) throw ContractViolation("permutation " + p.to_string() + " is not an element of the group");
  return *i;
}

std::size_t PermutationGroup::mul(std::size_t a, std::size_t b) const {
  materialize();
  const Enumerated& d = *st_->data;
  const std::size_t n = d.elems.size();
  if (n <= kTableLimit) {
    std::call_once(d.table_once, [&d, n] {
      d.table.resize(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          d.table[i * n + j] = static_cast<std::uint32_t>(d.index.at(d.elems[i] * d.elems[j]));
    });
    return d.table[a * n + b];
  }
  return d.index.at(d.elems[a] * d.elems[b]);
}

std::size_t PermutationGroup::inv(std::size_t a) const {
  materialize();
  return st_->data->inverses[a];
}

bool PermutationGroup::is_transitive() const {
  const int n = degree();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& g : st_->gens) {
      int y = g(x);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

const std::vector<Permutation>& enumerate_elements(const PermutationGroup& G) { return G.elements(); }

bool set_contains(const ElementSet& s, std::size_t x) { return std::binary_search(s.begin(), s.end(), x); }

bool set_includes(const ElementSet& big, const ElementSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet whole_group(const PermutationGroup& G) {
  ElementSet s(G.order());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = i;
  return s;
}

ElementSet trivial_subgroup() { return {0}; }

ElementSet generate_subgroup(const PermutationGroup& G, const ElementSet& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<std::size_t> list{0};
  in[0] = 1;
  for (std::size_t head = 0; head < list.size(); ++head)
    for (std::size_t g : gens) {
      std::size_t y = G.mul(g, list[head]);
      if (!in[y]) {
        in[y] = 1;
        list.push_back(y);
      }
    }
  std::sort(list.begin(), list.end());
  return list;
}

ElementSet normal_closure(const PermutationGroup& G, const ElementSet& gens) {
  std::vector<std::size_t> conjugates;
  for (std::size_t x : gens)
    for (std::size_t g = 0; g < G.order(); ++g) conjugates.push_back(G.conj(g, x));
  std::sort(conjugates.begin(), conjugates.end());
  conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
  return generate_subgroup(G, conjugates);
}

std::vector<ConjugacyClass> conjugacy_classes(const PermutationGroup& G) {
  const std::size_t n = G.order();
  std::vector<char> done(n, 0);
  std::vector<ConjugacyClass> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    ElementSet members;
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t y = G.conj(g, x);
      if (!done[y]) {
        done[y] = 1;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back({members.front(), std::move(members)});
  }
  std::stable_sort(out.begin(), out.end(), [&G](const ConjugacyClass& a, const ConjugacyClass& b) {
    int oa = G.element_order(a.representative), ob = G.element_order(b.representative);
    if (oa != ob) return oa < ob;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.representative < b.representative;
  });
  return out;
}

ElementSet centralizer(const PermutationGroup& G, std::size_t x) {
  ElementSet out;
  for (std::size_t g = 0; g < G.order(); ++g)
    if (G.mul(g, x) == G.mul(x, g)) out.push_back(g);
  return out;
}

ElementSet pointwise_class_centralizer(const PermutationGroup& G, const ElementSet& c) {
  ElementSet out = whole_group(G);
  for (std::size_t x : c) out = set_intersection(out, centralizer(G, x));
  return out;
}

namespace {

ElementSet generator_indices(const PermutationGroup& G) {
  ElementSet gens;
  for (const auto& g : G.generators()) gens.push_back(G.locate(g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

ElementSet product_set(const PermutationGroup& G, const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  out.reserve(a.size() * b.size());
  for (std::size_t x : a)
    for (std::size_t y : b) out.push_back(G.mul(x, y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ElementSet center(const PermutationGroup& G) {
  const ElementSet gens = generator_indices(G);
  ElementSet out;
  for (std::size_t x = 0; x < G.order(); ++x) {
    bool central = true;
    for (std::size_t g : gens)
      if (G.mul(g, x) != G.mul(x, g)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return out;
}

bool is_subgroup(const PermutationGroup& G, const ElementSet& s) {
  if (s.empty() || s.front() != 0) return false;
  for (std::size_t a : s)
    for (std::size_t b : s)
      if (!set_contains(s, G.mul(a, b))) return false;
  return true;
}

bool is_normal(const PermutationGroup& G, const ElementSet& s) {
  if (!is_subgroup(G, s)) return false;
  for (std::size_t g : generator_indices(G))
    for (std::size_t x : s)
      if (!set_contains(s, G.conj(g, x))) return false;
  return true;
}

bool is_abelian(const PermutationGroup& G, const ElementSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (G.mul(s[i], s[j]) != G.mul(s[j], s[i])) return false;
  return true;
}

std::vector<ElementSet> normal_subgroups(const PermutationGroup& G) {
  std::set<ElementSet> closures;
  for (const auto& c : conjugacy_classes(G)) closures.insert(normal_closure(G, {c.representative}));
  std::set<ElementSet> found(closures.begin(), closures.end());
  found.insert(trivial_subgroup());
  std::deque<ElementSet> queue(found.begin(), found.end());
  while (!queue.empty()) {
    ElementSet a = queue.front();
    queue.pop_front();
    for (const auto& c : closures) {
      if (set_includes(a, c)) continue;
      ElementSet j = product_set(G, a, c);  // product of normal subgroups is their join
      if (found.insert(j).second) queue.push_back(std::move(j));
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const ElementSet& a, const ElementSet& b) { return a.size() < b.size(); });
  return out;
}

PermutationGroup subgroup_as_group(const PermutationGroup& G, const ElementSet& s, std::string name) {
  std::vector<Permutation> elems;
  elems.reserve(s.size());
  for (std::size_t i : s) elems.push_back(G.element(i));
  return PermutationGroup::from_elements(G.degree(), std::move(elems), std::move(name));
}

QuotientGroup quotient(const PermutationGroup& G, const ElementSet& N) {
  if (!is_normal(G, N)) throw ContractViolation("quotient requested by a subgroup that is not normal");
  const std::size_t n = G.order();
  std::vector<std::size_t> coset_of(n, SIZE_MAX);
  std::vector<std::size_t> coset_rep;
  for (std::size_t g = 0; g < n; ++g) {
    if (coset_of[g] != SIZE_MAX) continue;
    for (std::size_t k : N) coset_of[G.mul(g, k)] = coset_rep.size();
    coset_rep.push_back(g);
  }
  const int k = static_cast<int>(coset_rep.size());
  auto action = [&](std::size_t g) {
    std::vector<int> img(coset_rep.size());
    for (std::size_t c = 0; c < coset_rep.size(); ++c)
      img[c] = static_cast<int>(coset_of[G.mul(g, coset_rep[c])]);
    return Permutation(std::move(img));
  };
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) gens.push_back(action(G.locate(g)));
  std::string name = G.name().empty() ? std::string() : G.name() + "/N";
  PermutationGroup carrier(k, std::move(gens), name, G.cap());
  std::vector<std::size_t> projection(n);
  for (std::size_t g = 0; g < n; ++g) projection[g] = carrier.locate(action(g));
  return QuotientGroup{N, carrier, std::move(projection), std::move(coset_of)};
}

std::vector<ElementSet> upper_central_series(const PermutationGroup& G) {
  const ElementSet gens = generator_indices(G);
  std::vector<ElementSet> series{trivial_subgroup()};
  while (true) {
    const ElementSet& z = series.back();
    ElementSet next;
    for (std::size_t x = 0; x < G.order(); ++x) {
      bool ok = true;
      for (std::size_t g : gens) {
        // [x, g] = x g x^-1 g^-1 must lie in the previous term.
        std::size_t comm = G.mul(G.mul(x, g), G.mul(G.inv(x), G.inv(g)));
        if (!set_contains(z, comm)) {
          ok = false;
          break;
        }
      }
      if (ok) next.push_back(x);
    }
    if (next == z) break;
    series.push_back(std::move(next));
  }
  return series;
}

ElementSet hypercenter(const PermutationGroup& G) { return upper_central_series(G).back(); }

bool is_nilpotent(const PermutationGroup& G) { return hypercenter(G).size() == G.order(); }

ElementSet fitting_subgroup(const PermutationGroup& G) {
  ElementSet fit = trivial_subgroup();
  for (const auto& N : normal_subgroups(G)) {
    if (set_includes(fit, N)) continue;
    if (is_nilpotent(subgroup_as_group(G, N))) fit = generate_subgroup(G, set_union(fit, N));
  }
  return fit;
}

PermutationGroup direct_product(const PermutationGroup& G, const PermutationGroup& H) {
  const int n = G.degree(), m = H.degree();
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) {
    std::vector<int> img(static_cast<std::size_t>(n + m));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = g(i);
    for (int j = 0; j < m; ++j) img[static_cast<std::size_t>(n + j)] = n + j;
    gens.emplace_back(std::move(img));
  }
  for (const auto& h : H.generators()) {
    std::vector<int> img(static_cast<std::size_t>(n + m));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    for (int j = 0; j < m; ++j) img[static_cast<std::size_t>(n + j)] = n + h(j);
    gens.emplace_back(std::move(img));
  }
  return PermutationGroup(n + m, std::move(gens), G.name() + "x" + H.name(), std::max(G.cap(), H.cap()));
}

PermutationGroup direct_product_transitive(const PermutationGroup& G, const PermutationGroup& H) {
  const int n = G.degree(), m = H.degree();
  if (static_cast<long long>(n) * m > 1000000) throw ResourceCapError("product degree too large");
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) {
    std::vector<int> img(static_cast<std::size_t>(n * m));
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i + n * j)] = g(i) + n * j;
    gens.emplace_back(std::move(img));
  }
  for (const auto& h : H.generators()) {
    std::vector<int> img(static_cast<std::size_t>(n * m));
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i + n * j)] = i + n * h(j);
    gens.emplace_back(std::move(img));
  }
  return PermutationGroup(n * m, std::move(gens), G.name() + "x" + H.name(), std::max(G.cap(), H.cap()));
}

PermutationGroup wreath_product(const PermutationGroup& N, const PermutationGroup& B) {
  const int n = N.degree(), m = B.degree();
  if (static_cast<long long>(n) * m > 1000000) throw ResourceCapError("wreath product degree too large");
  std::vector<Permutation> gens;
  for (int b = 0; b < m; ++b)
    for (const auto& g : N.generators()) {
      std::vector<int> img(static_cast<std::size_t>(n * m));
      for (int p = 0; p < n * m; ++p) img[static_cast<std::size_t>(p)] = p;
      for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(b * n + i)] = b * n + g(i);
      gens.emplace_back(std::move(img));
    }
  for (const auto& beta : B.generators()) {
    std::vector<int> img(static_cast<std::size_t>(n * m));
    for (int b = 0; b < m; ++b)
      for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(b * n + i)] = beta(b) * n + i;
    gens.emplace_back(std::move(img));
  }
  return PermutationGroup(n * m, std::move(gens), N.name() + "wr" + B.name(), std::max(N.cap(), B.cap()));
}

PermutationGroup regular_representation(const PermutationGroup& G) {
  const std::size_t n = G.order();
  if (n > 100000) throw ResourceCapError("regular representation degree exceeds 100000");
  auto left = [&](std::size_t g) {
    std::vector<int> img(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<int>(G.mul(g, x));
    return Permutation(std::move(img));
  };
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) gens.push_back(left(G.locate(g)));
  PermutationGroup R(static_cast<int>(n), std::move(gens), G.name(), G.cap());
  if (G.labels().empty()) return R;
  std::vector<ClassLabel> labels;
  for (const auto& [label, rep] : G.labels()) labels.emplace_back(label, left(G.locate(rep)));
  return R.with_labels(std::move(labels));
}

}  // namespace malle
