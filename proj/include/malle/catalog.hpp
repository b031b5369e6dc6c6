#pragma once

#include <optional>
#include <string>
#include <vector>

#include "malle/group.hpp"
#include "malle/rational.hpp"

namespace malle {

struct CatalogEntry {
  PermutationGroup group;
  std::string provenance;
  // For regular entries: the group whose regular representation this is. Point 0 of the
  // regular action is the identity of base, so element g corresponds to base element g(0).
  std::optional<PermutationGroup> base;
};

// Entry grammar:
//   4T3 | 8T4 | 8T11 | 16T11 | S3 | C<n>
//   prod(<entry>,<entry>)   direct product in the product action
//   wr(<entry>,<entry>)     imprimitive wreath product N wr B
//   file:<path>             group file; relative paths resolve against base_dir
CatalogEntry resolve_entry(const std::string& spec, const std::string& base_dir = {});

// Names of the fixed built-in entries, in catalog order.
std::vector<std::string> builtin_entries();

// Reference power-saving exponents for the built-in analyses, keyed by the request triple.
std::optional<Rational> reference_exponent(const std::string& entry, const std::string& weight,
                                           const std::string& profile);

}  // namespace malle
