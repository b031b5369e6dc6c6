#include "malle/pipeline.hpp"

#include <atomic>
#include <filesystem>
#include <sstream>
#include <thread>

#include "malle/errors.hpp"

namespace malle {

namespace {

std::string resolve_path(const std::string& path, const std::string& base_dir) {
  std::filesystem::path p(path);
  if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
  return p.string();
}

// "head:arg" -> (head, arg); arg empty when absent.
std::pair<std::string, std::string> split_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, {}};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(rational_json(r));
  return a;
}

Json certificate_json(const HullCertificate& c, const std::vector<TubularRegion>& regions) {
  Json parts = Json::array();
  for (std::size_t j = 0; j < c.lambdas.size(); ++j) {
    if (sgn(c.lambdas[j]) == 0) continue;
    parts.push_back({{"region", regions.at(j).name}, {"lambda", rational_json(c.lambdas[j])},
                     {"point", rationals_json(c.points[j])}});
  }
  return {{"epsilon", rational_json(c.epsilon)}, {"active", parts}};
}

std::string element_string(const PermutationGroup& G, std::size_t x) { return G.element(x).to_string(); }

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

CyclotomicProfile resolve_cyclotomic(const std::string& spec, const std::string& base_dir) {
  if (spec == "Q") return CyclotomicProfile::full_q();
  if (spec == "trivial") return CyclotomicProfile::trivial();
  auto [head, arg] = split_spec(spec);
  if (head == "file" && !arg.empty()) return parse_cyclotomic_file(read_text_file(resolve_path(arg, base_dir)));
  throw ValidationError("unknown cyclotomic spec '" + spec + "' (expected Q, trivial or file:<path>)");
}

WeightFunction resolve_weight(const TypeSystem& ts, const std::string& spec, const std::string& base_dir) {
  if (spec == "disc") return weight_discriminant(ts);
  if (spec == "cond-d4") return weight_conductor_d4(ts);
  if (spec == "prodram") return weight_product_ramified(ts);
  auto [head, arg] = split_spec(spec);
  if (head == "inv-gamma" && !arg.empty()) return weight_inv_gamma(ts, parse_rational(arg));
  if (head == "file" && !arg.empty()) {
    WeightTable t = parse_weight_file(read_text_file(resolve_path(arg, base_dir)));
    return weight_custom(ts, t.values, t.name);
  }
  throw ValidationError("unknown weight spec '" + spec + "'");
}

SubconvexityProfile resolve_profile(const TypeSystem& ts, const std::string& spec, const std::string& base_dir) {
  if (spec == "ref-d4") return make_profile(ProfilePreset::ref_d4, ts);
  if (spec == "ref-16t11") return make_profile(ProfilePreset::ref_16t11, ts);
  auto [head, arg] = split_spec(spec);
  if (head == "file" && !arg.empty()) {
    ProfileTable t = parse_profile_file(read_text_file(resolve_path(arg, base_dir)));
    return make_custom_profile(ts, t.gamma, t.alpha, t.beta, t.has_beta, t.name);
  }
  const Rational gamma = arg.empty() ? Rational(1, 2) : parse_rational(arg);
  if (head == "burgess-yang") return make_profile(ProfilePreset::burgess_yang, ts, gamma);
  if (head == "lindelof") return make_profile(ProfilePreset::lindelof, ts, gamma);
  if (head == "convexity") return make_profile(ProfilePreset::convexity, ts, gamma);
  throw ValidationError("unknown profile spec '" + spec + "'");
}

std::vector<ElementSet> resolve_witnesses(const TypeSystem& ts, const std::string& spec, const WeightFunction& wt) {
  if (spec == "auto") return auto_witnesses(ts, wt);
  if (spec == "none") return {};
  std::vector<ElementSet> out;
  for (const std::string& w : split(spec, ';')) {
    if (w.empty()) throw ParseError("empty witness in '" + spec + "'");
    ElementSet gens;
    for (const std::string& g : split(w, '+')) {
      if (g.empty()) throw ParseError("empty generator in witness '" + w + "'");
      if (g[0] == '(') {
        gens.push_back(ts.group.locate(parse_permutation(g, ts.group.degree())));
      } else {
        const auto& members = ts.types[ts.index(g)].members;
        gens.insert(gens.end(), members.begin(), members.end());
      }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    out.push_back(generate_subgroup(ts.group, gens));
  }
  return out;
}

Json report_to_json(const MalleReport& r, const TypeSystem& ts, const AnalysisRequest& request,
                    const CatalogEntry& entry) {
  Json j;
  j["schema_version"] = kReportSchema;
  j["request"] = {{"entry", request.entry},
                  {"weight", request.weight},
                  {"profile", request.profile},
                  {"cyc", request.cyc},
                  {"witnesses", request.witnesses}};
  j["group"] = {{"label", r.group},
                {"degree", ts.group.degree()},
                {"order", ts.group.order()},
                {"provenance", entry.provenance}};
  j["weight"] = r.weight;
  j["profile"] = r.profile;
  j["cyclotomic"] = r.cyclotomic;
  j["a_inv"] = rational_json(r.a_inv);
  j["sigma_a"] = rational_json(r.sigma_a);
  j["threshold"] = rational_json(r.threshold);
  j["delta"] = rational_json(r.delta);
  j["b_low"] = r.b_low;
  j["b_high"] = r.b_high;
  j["xi"] = r.xi ? Json(rational_json(*r.xi)) : Json(nullptr);
  if (r.power_saving_exponent) j["power_saving_exponent"] = rational_json(*r.power_saving_exponent);
  j["verdict"] = to_string(r.verdict);

  Json types = Json::array();
  for (std::size_t t = 0; t < ts.types.size(); ++t) {
    const TameType& tt = ts.types[t];
    types.push_back({{"label", tt.label},
                     {"order", tt.order},
                     {"size", tt.size},
                     {"zeta_degree", tt.zeta_degree},
                     {"representative", element_string(ts.group, tt.representative)},
                     {"weight", rational_json(r.weights[t])},
                     {"alpha", rational_json(r.alpha[t])},
                     {"beta", rational_json(r.beta[t])},
                     {"pole_order", r.pole_orders[t]},
                     {"pointwise", static_cast<bool>(r.pointwise[t])}});
  }
  j["types"] = types;

  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json labels = Json::array();
    for (std::size_t t : w.types) labels.push_back(ts.types[t].label);
    witnesses.push_back({{"name", w.name}, {"order", w.subgroup.size()}, {"types", labels}});
  }
  j["witnesses"] = witnesses;

  Json regions = Json::array();
  for (const auto& reg : r.regions) {
    Json cons = Json::array();
    for (const auto& c : reg.constraints) cons.push_back(c.to_string(reg.variables));
    regions.push_back({{"name", reg.name}, {"constraints", cons}});
  }
  j["regions"] = regions;

  const std::vector<TubularRegion> hull_regions =
      r.regions.empty() ? std::vector<TubularRegion>{absolute_convergence_orthant(ts)} : r.regions;
  Json pole = {{"point", rationals_json(r.pole_point)}, {"member", r.pole_membership.member}};
  if (r.pole_membership.member) pole["certificate"] = certificate_json(r.pole_membership.certificate, hull_regions);
  Json line = {{"point", Json::array()}, {"certificate", certificate_json(r.line.certificate, hull_regions)}};
  for (const auto& w : r.weights) line["point"].push_back(rational_json(w * r.threshold));
  j["certificate"] = {{"pole", pole}, {"threshold", line}};

  if (auto ref = reference_exponent(request.entry, request.weight, request.profile)) {
    std::string cmp = "no-power-saving";
    if (r.power_saving_exponent)
      cmp = *r.power_saving_exponent == *ref  ? "matches-reference"
            : *r.power_saving_exponent < *ref ? "exceeds-reference"
                                              : "below-reference";
    j["reference"] = {{"exponent", rational_json(*ref)}, {"comparison", cmp}};
  }

  if (r.weight.rfind("inv-gamma:", 0) == 0) {
    const Rational gamma = parse_rational(r.weight.substr(10));
    const Rational secondary = 1 / (1 + gamma);
    j["secondary_term"] = {{"gamma", rational_json(gamma)},
                           {"exponent", rational_json(secondary)},
                           {"visible", gamma_secondary_visible(gamma)}};
  }
  return j;
}

Json run_analysis(const AnalysisRequest& request) {
  const CatalogEntry entry = resolve_entry(request.entry, request.base_dir);
  const CyclotomicProfile cyc = resolve_cyclotomic(request.cyc, request.base_dir);
  const TypeSystem ts = tame_types(entry.group, cyc);
  const WeightFunction wt = resolve_weight(ts, request.weight, request.base_dir);
  const SubconvexityProfile profile = resolve_profile(ts, request.profile, request.base_dir);
  const std::vector<ElementSet> witnesses = resolve_witnesses(ts, request.witnesses, wt);
  const MalleReport report = analyze(ts, wt, witnesses, profile);
  return report_to_json(report, ts, request, entry);
}

Json classes_table(const CatalogEntry& entry) {
  const PermutationGroup& G = entry.group;
  const TypeSystem ts = tame_types(G, CyclotomicProfile::trivial());
  const bool d4 = is_d4(G);
  std::vector<Rational> conductor;
  if (d4) conductor = weight_conductor_d4(ts).values;

  // Index of an element in every representation we can name: its own action, the base
  // action for regular entries, and otherwise the regular action (n/ord cycles).
  auto indices = [&](const Permutation& g, int ord) {
    Json idx = Json::object();
    idx[std::to_string(G.degree())] = index_of(g, G.degree());
    if (entry.base) {
      const Permutation& b = entry.base->element(static_cast<std::size_t>(g(0)));
      idx[std::to_string(entry.base->degree())] = index_of(b, entry.base->degree());
    } else if (static_cast<std::size_t>(G.degree()) != G.order()) {
      const int n = static_cast<int>(G.order());
      idx[std::to_string(n)] = n - n / ord;
    }
    return idx;
  };

  Json rows = Json::array();
  Json one = {{"label", "1A"}, {"representative", "()"}, {"size", 1}, {"order", 1},
              {"indices", indices(G.element(0), 1)}};
  if (d4) one["conductor"] = rational_json(0);
  rows.push_back(one);
  for (std::size_t t = 0; t < ts.types.size(); ++t) {
    const TameType& tt = ts.types[t];
    const Permutation& g = G.element(tt.representative);
    Json row = {{"label", tt.label}, {"representative", g.to_string()}, {"size", tt.size}, {"order", tt.order},
                {"indices", indices(g, tt.order)}};
    if (d4) row["conductor"] = rational_json(conductor[t]);
    rows.push_back(row);
  }
  return {{"group", G.name()}, {"degree", G.degree()}, {"order", G.order()}, {"classes", rows}};
}

std::string classes_tsv(const Json& table) {
  std::ostringstream out;
  const Json& rows = table.at("classes");
  std::vector<std::string> degrees;
  for (const auto& kv : rows.front().at("indices").items()) degrees.push_back(kv.key());
  std::sort(degrees.begin(), degrees.end(), [](const std::string& a, const std::string& b) {
    return std::stoi(a) < std::stoi(b);
  });
  const bool conductor = rows.front().contains("conductor");
  out << "label\trepresentative\tsize\torder";
  for (const auto& d : degrees) out << "\tind_" << d;
  if (conductor) out << "\tconductor";
  out << "\n";
  for (const auto& row : rows) {
    out << row["label"].get<std::string>() << "\t" << row["representative"].get<std::string>() << "\t"
        << row["size"].get<std::size_t>() << "\t" << row["order"].get<int>();
    for (const auto& d : degrees) out << "\t" << row["indices"].value(d, 0);
    if (conductor) out << "\t" << to_display(parse_rational(row["conductor"].get<std::string>()));
    out << "\n";
  }
  return out.str();
}

Json classify_json(const CatalogEntry& entry, const std::string& weight_spec, const std::string& cyc_spec,
                   const std::string& base_dir) {
  const TypeSystem ts = tame_types(entry.group, resolve_cyclotomic(cyc_spec, base_dir));
  const WeightFunction wt = resolve_weight(ts, weight_spec, base_dir);
  const ConcentrationVerdict v = classify(ts, wt);
  Json minimum = Json::array();
  for (std::size_t t : min_weight(wt).argmin) minimum.push_back(ts.types[t].label);
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) witnesses.push_back(make_witness(ts, w).name);
  Json j = {{"group", entry.group.name()},
            {"weight", wt.name},
            {"a_inv", rational_json(min_weight(wt).a)},
            {"minimum_types", minimum},
            {"status", to_string(v.status)},
            {"fitting", to_string(v.fitting_status)},
            {"witnesses", witnesses}};
  if (v.status == ConcentrationStatus::concentrated) j["container"] = make_witness(ts, v.container).name;
  return j;
}

std::string analysis_tsv(const Json& r) {
  std::ostringstream out;
  out << "group\tweight\tprofile\tthreshold\tdelta\txi\tb_low\tb_high\texponent\tverdict\n";
  out << r["group"]["label"].get<std::string>() << "\t" << r["weight"].get<std::string>() << "\t"
      << r["profile"].get<std::string>() << "\t" << r["threshold"].get<std::string>() << "\t"
      << r["delta"].get<std::string>() << "\t" << (r["xi"].is_null() ? "-" : r["xi"].get<std::string>()) << "\t"
      << r["b_low"].get<int>() << "\t" << r["b_high"].get<int>() << "\t"
      << r.value("power_saving_exponent", std::string("-")) << "\t" << r["verdict"].get<std::string>() << "\n";
  return out.str();
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ResourceCapError*>(&e)) return 3;
  if (dynamic_cast<const ContractViolation*>(&e)) return 2;
  return 1;
}

std::vector<BatchItem> run_batch(const std::vector<ManifestLine>& lines, const std::string& base_dir, int jobs) {
  std::vector<BatchItem> items(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      const ManifestLine& m = lines[i];
      BatchItem& item = items[i];
      item.line = m.line;
      item.label = std::to_string(m.line) + "-" + m.entry;
      for (char& c : item.label)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
      try {
        item.report = run_analysis({m.entry, m.weight, m.profile, m.cyc, m.witnesses, base_dir});
      } catch (const std::exception& e) {
        item.code = exit_code_for(e);
        item.error = "line " + std::to_string(m.line) + ": " + e.what();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(lines.size(), 1))));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return items;
}

Json batch_summary(const std::vector<BatchItem>& items) {
  Json rows = Json::array();
  std::size_t failed = 0;
  for (const auto& it : items) {
    Json row = {{"line", it.line}, {"label", it.label}};
    if (it.error.empty()) {
      row["verdict"] = it.report["verdict"];
      row["threshold"] = it.report["threshold"];
      row["power_saving_exponent"] = it.report.value("power_saving_exponent", Json(nullptr));
    } else {
      ++failed;
      row["error"] = it.error;
      row["exit_code"] = it.code;
    }
    rows.push_back(row);
  }
  return {{"schema_version", kReportSchema}, {"requests", items.size()}, {"failed", failed}, {"results", rows}};
}

}  // namespace malle
