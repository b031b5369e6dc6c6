#include "malle/io.hpp"

#include <fstream>
#include <sstream>

#include "malle/errors.hpp"

namespace malle {

namespace {

struct Line {
  int number;
  std::string keyword;
  std::string rest;  // trimmed remainder after the keyword
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits into non-blank, non-comment lines with their first whitespace-delimited word separated.
std::vector<Line> directives(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    const auto sp = s.find_first_of(" \t");
    if (sp == std::string::npos) {
      out.push_back({number, s, {}});
    } else {
      out.push_back({number, s.substr(0, sp), trim(s.substr(sp))});
    }
  }
  return out;
}

Rational rational_at(const std::string& text, int line) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

int integer_at(const std::string& text, int line, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 9)
    throw ParseError(std::string("expected a positive integer ") + what + ", got '" + text + "'", line);
  return std::stoi(text);
}

void require_words(const Line& l, std::size_t count, const char* usage) {
  std::istringstream in(l.rest);
  std::string w;
  std::size_t n = 0;
  while (in >> w) ++n;
  if (n != count) throw ParseError(std::string("expected '") + usage + "'", l.number);
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupFile parse_group_file(const std::string& text) {
  const auto lines = directives(text);
  if (lines.empty() || lines[0].keyword != "name" || lines[0].rest.empty())
    throw ParseError("first directive must be 'name <label>'", lines.empty() ? 1 : lines[0].number);
  if (lines.size() < 2 || lines[1].keyword != "degree")
    throw ParseError("second directive must be 'degree <n>'", lines.size() < 2 ? lines[0].number + 1 : lines[1].number);
  const int degree = integer_at(lines[1].rest, lines[1].number, "degree");
  if (degree < 1) throw ParseError("degree must be positive", lines[1].number);

  std::string provenance;
  std::vector<Permutation> gens;
  std::vector<ClassLabel> labels;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& l = lines[i];
    try {
      if (l.keyword == "provenance") {
        provenance = l.rest;
      } else if (l.keyword == "label") {
        const auto sp = l.rest.find_first_of(" \t");
        if (sp == std::string::npos) throw ParseError("expected 'label <name> <cycles>'");
        labels.emplace_back(l.rest.substr(0, sp), parse_permutation(trim(l.rest.substr(sp)), degree));
      } else if (l.keyword[0] == '(') {
        gens.push_back(parse_permutation(l.keyword + l.rest, degree));
      } else {
        throw ParseError("unknown directive '" + l.keyword + "'");
      }
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), l.number);
    }
  }
  if (gens.empty()) throw ParseError("group file lists no generators", lines.back().number);
  PermutationGroup G(degree, std::move(gens), lines[0].rest);
  if (!labels.empty()) G = G.with_labels(std::move(labels));
  return {G, provenance};
}

GroupFile read_group_file(const std::string& path) { return parse_group_file(read_text_file(path)); }

std::string format_group_file(const PermutationGroup& G, const std::string& provenance) {
  std::ostringstream out;
  out << "name " << G.name() << "\n";
  out << "degree " << G.degree() << "\n";
  if (!provenance.empty()) out << "provenance " << provenance << "\n";
  for (const auto& [label, rep] : G.labels()) out << "label " << label << " " << rep.to_string() << "\n";
  for (const auto& g : G.generators()) out << g.to_string() << "\n";
  return out.str();
}

WeightTable parse_weight_file(const std::string& text) {
  WeightTable t;
  for (const Line& l : directives(text)) {
    if (l.keyword == "name") {
      t.name = l.rest;
      continue;
    }
    require_words(l, 1, "<label> <rational>");
    if (!t.values.emplace(l.keyword, rational_at(l.rest, l.number)).second)
      throw ParseError("duplicate weight for " + l.keyword, l.number);
  }
  if (t.values.empty()) throw ParseError("weight file lists no weights");
  return t;
}

CyclotomicProfile parse_cyclotomic_file(const std::string& text) {
  int field_degree = 1;
  std::string name = "custom";
  std::map<int, std::vector<int>> gens;
  for (const Line& l : directives(text)) {
    if (l.keyword == "degree") {
      field_degree = integer_at(l.rest, l.number, "field degree");
      if (field_degree < 1) throw ParseError("field degree must be positive", l.number);
    } else if (l.keyword == "name") {
      name = l.rest;
    } else {
      const int e = integer_at(l.keyword, l.number, "modulus");
      std::vector<int> units;
      std::istringstream in(l.rest);
      std::string tok;
      while (std::getline(in, tok, ',')) units.push_back(integer_at(trim(tok), l.number, "residue"));
      if (units.empty()) throw ParseError("modulus " + l.keyword + " lists no generators", l.number);
      if (!gens.emplace(e, std::move(units)).second) throw ParseError("duplicate modulus " + l.keyword, l.number);
    }
  }
  return CyclotomicProfile::restricted(std::move(gens), field_degree, name);
}

ProfileTable parse_profile_file(const std::string& text) {
  ProfileTable t;
  bool have_gamma = false;
  for (const Line& l : directives(text)) {
    if (l.keyword == "gamma") {
      require_words(l, 1, "gamma <rational>");
      t.gamma = rational_at(l.rest, l.number);
      have_gamma = true;
    } else if (l.keyword == "name") {
      t.name = l.rest;
    } else if (l.keyword == "beta" && l.rest == "none") {
      t.has_beta = false;
    } else if (l.keyword == "alpha" || l.keyword == "beta") {
      require_words(l, 2, "alpha|beta <label> <rational>");
      const auto sp = l.rest.find_first_of(" \t");
      const std::string label = l.rest.substr(0, sp);
      auto& table = l.keyword == "alpha" ? t.alpha : t.beta;
      if (!table.emplace(label, rational_at(trim(l.rest.substr(sp)), l.number)).second)
        throw ParseError("duplicate " + l.keyword + " for " + label, l.number);
    } else {
      throw ParseError("unknown directive '" + l.keyword + "'", l.number);
    }
  }
  if (!have_gamma) throw ParseError("profile file needs a 'gamma' line");
  if (!t.has_beta && !t.beta.empty()) throw ParseError("'beta none' conflicts with explicit beta values");
  return t;
}

std::vector<ManifestLine> parse_manifest(const std::string& text) {
  std::vector<ManifestLine> out;
  for (const Line& l : directives(text)) {
    std::istringstream in(l.rest);
    ManifestLine m;
    m.line = l.number;
    m.entry = l.keyword;
    if (!(in >> m.weight >> m.profile >> m.cyc))
      throw ParseError("expected 'label weight profile cyc [witnesses]'", l.number);
    std::string w;
    if (in >> w) m.witnesses = w;
    if (in >> w) throw ParseError("unexpected trailing text '" + w + "'", l.number);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace malle
