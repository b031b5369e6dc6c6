#pragma once
// Fixed class data for D4 and Q8:C2, kept independent of the library.

#include <map>
#include <string>

namespace reference {

struct TableRow {
  int size, order, small_index, conductor, large_index;
};

// Class data for D4 in the quartic and octic actions, keyed by label.
inline const std::map<std::string, TableRow> kD4Table = {
    {"1A", {1, 1, 0, 0, 0}}, {"2A", {1, 2, 2, 2, 4}}, {"2B", {2, 2, 2, 1, 4}},
    {"2C", {2, 2, 1, 1, 4}}, {"4A", {2, 4, 3, 2, 6}}};

struct Q8Row {
  int size, order, ind8, ind16;
  const char* rep8;
};

// Class data for Q8:C2 with a degree-8 representative of each class.
inline const std::map<std::string, Q8Row> kQ8Table = {
    {"1A", {1, 1, 0, 0, "()"}},
    {"2A", {1, 2, 4, 8, "(1,5)(2,6)(3,7)(4,8)"}},
    {"2B", {2, 2, 4, 8, "(1,6)(2,5)(3,8)(4,7)"}},
    {"2C", {2, 2, 2, 8, "(1,5)(3,7)"}},
    {"2D", {2, 2, 4, 8, "(1,4)(2,7)(3,6)(5,8)"}},
    {"4A1", {1, 4, 6, 12, "(1,3,5,7)(2,4,6,8)"}},
    {"4A-1", {1, 4, 6, 12, "(1,7,5,3)(2,8,6,4)"}},
    {"4B", {2, 4, 6, 12, "(1,8,5,4)(2,7,6,3)"}},
    {"4C", {2, 4, 6, 12, "(1,3,5,7)(2,8,6,4)"}},
    {"4D", {2, 4, 6, 12, "(1,6,5,2)(3,8,7,4)"}},
};

}  // namespace reference
