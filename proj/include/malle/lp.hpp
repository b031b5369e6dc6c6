#pragma once

#include <string>
#include <vector>

#include "malle/rational.hpp"

namespace malle {

enum class Relation { ge, eq };

struct LPRow {
  std::vector<Rational> coeffs;
  Relation rel = Relation::ge;
  Rational rhs;
};

// Variables are nonnegative unless marked free. The objective, when present, is minimized.
struct LPProblem {
  std::vector<std::string> variables;
  std::vector<bool> free;
  std::vector<LPRow> rows;
  std::vector<Rational> objective;  // empty: pure feasibility

  std::size_t add_variable(std::string name, bool is_free = false);
  void add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs);
};

enum class LPStatus { optimal, infeasible, unbounded };
std::string to_string(LPStatus s);

struct LPResult {
  LPStatus status = LPStatus::infeasible;
  Rational value;                    // objective at the optimum (0 for feasibility problems)
  std::vector<Rational> assignment;  // one entry per variable
};

// Exact two-phase tableau simplex with Bland's rule. Deterministic.
LPResult lp_solve(const LPProblem& p);

}  // namespace malle
