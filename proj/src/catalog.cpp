#include "malle/catalog.hpp"

#include <filesystem>
#include <map>
#include <tuple>

#include "malle/errors.hpp"
#include "malle/io.hpp"

namespace malle {

namespace {

Permutation cyc(const char* text, int degree) { return parse_permutation(text, degree); }

PermutationGroup d4_quartic() {
  PermutationGroup G(4, {cyc("(1,2,3,4)", 4), cyc("(2,4)", 4)}, "4T3");
  return G.with_labels({{"2A", cyc("(1,3)(2,4)", 4)},
                        {"2B", cyc("(1,2)(3,4)", 4)},
                        {"2C", cyc("(2,4)", 4)},
                        {"4A", cyc("(1,2,3,4)", 4)}});
}

PermutationGroup q8c2_octic() {
  PermutationGroup G(8, {cyc("(1,3,5,7)(2,4,6,8)", 8), cyc("(1,8,5,4)(2,7,6,3)", 8), cyc("(1,5)(3,7)", 8)}, "8T11");
  return G.with_labels({{"2A", cyc("(1,5)(2,6)(3,7)(4,8)", 8)},
                        {"2B", cyc("(1,6)(2,5)(3,8)(4,7)", 8)},
                        {"2C", cyc("(1,5)(3,7)", 8)},
                        {"2D", cyc("(1,4)(2,7)(3,6)(5,8)", 8)},
                        {"4A1", cyc("(1,3,5,7)(2,4,6,8)", 8)},
                        {"4A-1", cyc("(1,7,5,3)(2,8,6,4)", 8)},
                        {"4B", cyc("(1,8,5,4)(2,7,6,3)", 8)},
                        {"4C", cyc("(1,3,5,7)(2,8,6,4)", 8)},
                        {"4D", cyc("(1,6,5,2)(3,8,7,4)", 8)}});
}

PermutationGroup cyclic(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % n;
  return PermutationGroup(n, {Permutation(images)}, "C" + std::to_string(n));
}

// Splits "a,b" at the comma that sits outside every parenthesis.
std::pair<std::string, std::string> split_pair(const std::string& inner, const std::string& spec) {
  int depth = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    if (inner[i] == ')') --depth;
    if (inner[i] == ',' && depth == 0) return {inner.substr(0, i), inner.substr(i + 1)};
  }
  throw ParseError("expected two comma-separated entries in '" + spec + "'");
}

}  // namespace

std::vector<std::string> builtin_entries() { return {"4T3", "8T4", "8T11", "16T11", "S3"}; }

CatalogEntry resolve_entry(const std::string& spec, const std::string& base_dir) {
  if (spec == "4T3") return {d4_quartic(), "built-in: D4 from a=(1,2,3,4), b=(2,4)", std::nullopt};
  if (spec == "8T4") return {regular_representation(d4_quartic()).with_name("8T4"), "built-in: regular D4", d4_quartic()};
  if (spec == "8T11") return {q8c2_octic(), "built-in: Q8:C2 in degree 8", std::nullopt};
  if (spec == "16T11")
    return {regular_representation(q8c2_octic()).with_name("16T11"), "built-in: regular Q8:C2", q8c2_octic()};
  if (spec == "S3") return {PermutationGroup(3, {cyc("(1,2,3)", 3), cyc("(1,2)", 3)}, "S3"), "built-in", std::nullopt};
  if (spec.size() > 1 && spec[0] == 'C' && spec.find_first_not_of("0123456789", 1) == std::string::npos) {
    if (spec.size() > 6) throw ValidationError("cyclic degree too large in '" + spec + "'");
    const int n = std::stoi(spec.substr(1));
    if (n < 1) throw ValidationError("cyclic degree must be positive");
    return {cyclic(n), "built-in", std::nullopt};
  }
  if (spec.rfind("file:", 0) == 0) {
    std::filesystem::path p(spec.substr(5));
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    GroupFile f = read_group_file(p.string());
    return {f.group, f.provenance.empty() ? "user" : f.provenance, std::nullopt};
  }
  for (const char* op : {"prod", "wr"}) {
    const std::string head = std::string(op) + "(";
    if (spec.rfind(head, 0) == 0 && spec.back() == ')') {
      auto [a, b] = split_pair(spec.substr(head.size(), spec.size() - head.size() - 1), spec);
      const CatalogEntry x = resolve_entry(a, base_dir), y = resolve_entry(b, base_dir);
      PermutationGroup G = std::string(op) == "prod" ? direct_product_transitive(x.group, y.group)
                                                     : wreath_product(x.group, y.group);
      return {G.with_name(spec), "built-in " + std::string(op), std::nullopt};
    }
  }
  throw ValidationError("unknown catalog entry '" + spec + "'");
}

std::optional<Rational> reference_exponent(const std::string& entry, const std::string& weight,
                                           const std::string& profile) {
  static const std::map<std::tuple<std::string, std::string, std::string>, Rational> table = {
      {{"4T3", "disc", "ref-d4"}, Rational(15, 22)},
      {{"4T3", "cond-d4", "ref-d4"}, Rational(39, 44)},
      {{"8T4", "disc", "ref-d4"}, Rational(61, 274)},
      {{"8T11", "disc", "ref-16t11"}, Rational(19, 55)},
      {{"16T11", "disc", "ref-16t11"}, Rational(97, 800)},
  };
  if (auto it = table.find({entry, weight, profile}); it != table.end()) return it->second;
  return std::nullopt;
}

}  // namespace malle
