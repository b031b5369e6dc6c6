#pragma once

#include <map>
#include <string>
#include <vector>

#include "malle/group.hpp"
#include "malle/ramtypes.hpp"
#include "malle/rational.hpp"
#include "malle/regions.hpp"

namespace malle {

// Group file grammar (one directive per line, '#' starts a comment line, blank lines ignored):
//   name <label>                  first directive
//   degree <n>                    second directive
//   provenance <free text>        optional, kept verbatim
//   label <class-label> <cycles>  optional, pins a class label to the class of <cycles>
//   <cycles>                      one generator per line, e.g. (1,2,3)(4,5)
// At least one generator is required. Errors carry the 1-based line number.
struct GroupFile {
  PermutationGroup group;
  std::string provenance;
};

GroupFile parse_group_file(const std::string& text);
GroupFile read_group_file(const std::string& path);
std::string format_group_file(const PermutationGroup& G, const std::string& provenance = {});

// Weight file: "name <text>" (optional) and "<label> <rational>" lines.
struct WeightTable {
  std::string name = "custom";
  std::map<std::string, Rational> values;
};
WeightTable parse_weight_file(const std::string& text);

// Cyclotomic file: "degree <d>" (optional, default 1), "name <text>" (optional) and
// "<modulus> <u1>,<u2>,..." lines listing generators of U_e.
CyclotomicProfile parse_cyclotomic_file(const std::string& text);

// Profile file: "gamma <r>" (required), "name <text>", "alpha <label|*> <r>",
// "beta <label|*> <r>" and "beta none" (no t-aspect data).
struct ProfileTable {
  std::string name = "custom";
  Rational gamma;
  std::map<std::string, Rational> alpha;
  std::map<std::string, Rational> beta;
  bool has_beta = true;
};
ProfileTable parse_profile_file(const std::string& text);

// Manifest: one request per line, "label weight profile cyc [witnesses]".
struct ManifestLine {
  int line = 0;
  std::string entry;
  std::string weight;
  std::string profile;
  std::string cyc;
  std::string witnesses = "auto";
};
std::vector<ManifestLine> parse_manifest(const std::string& text);

std::string read_text_file(const std::string& path);

}  // namespace malle
