#include "malle/lp.hpp"

#include "malle/errors.hpp"

namespace malle {

std::size_t LPProblem::add_variable(std::string name, bool is_free) {
  variables.push_back(std::move(name));
  free.push_back(is_free);
  return variables.size() - 1;
}

void LPProblem::add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  rows.push_back({std::move(coeffs), rel, std::move(rhs)});
}

std::string to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal:
      return "optimal";
    case LPStatus::infeasible:
      return "infeasible";
    case LPStatus::unbounded:
      return "unbounded";
  }
  return "?";
}

namespace {

using Row = std::vector<Rational>;

class Tableau {
 public:
  Tableau(std::vector<Row> rows, std::vector<std::size_t> basis, std::size_t cols)
      : rows_(std::move(rows)), basis_(std::move(basis)), cols_(cols) {}

  // Reduced-cost row for cost vector c (length cols_): d_j = c_j - sum_i c_{B_i} T_ij; last entry -z.
  Row reduced_costs(const std::vector<Rational>& c) const {
    Row d(cols_ + 1);
    for (std::size_t j = 0; j < cols_; ++j) d[j] = c[j];
    d[cols_] = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (rows_[i][j] != 0) d[j] -= cb * rows_[i][j];
    }
    return d;
  }

  void pivot(std::size_t r, std::size_t col, Row& d) {
    Row& pr = rows_[r];
    const Rational piv = pr[col];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= cols_; ++j)
      if (pr[j] != 0) {
        pr[j] /= piv;
        nz.push_back(j);
      }
    auto eliminate = [&](Row& row) {
      if (row[col] == 0) return;
      const Rational f = row[col];
      for (std::size_t j : nz) row[j] -= f * pr[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r) eliminate(rows_[i]);
    eliminate(d);
    basis_[r] = col;
  }

  // Bland's rule on the allowed columns. Returns false when unbounded.
  bool optimize(Row& d, const std::vector<char>& allowed) {
    while (true) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (allowed[j] && sgn(d[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == cols_) return true;
      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter, d);
    }
  }

  std::vector<Row>& rows() { return rows_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::size_t cols() const { return cols_; }

 private:
  std::vector<Row> rows_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace

LPResult lp_solve(const LPProblem& p) {
  const std::size_t nv = p.variables.size();
  if (p.free.size() != nv) throw ValidationError("free-variable flags do not match the variables");
  if (!p.objective.empty() && p.objective.size() != nv) throw ValidationError("objective arity mismatch");
  for (const auto& r : p.rows)
    if (r.coeffs.size() != nv) throw ValidationError("constraint row arity mismatch");

  // Column layout: x+ for every variable, x- for free ones, one surplus per >= row, one artificial per row.
  std::vector<std::size_t> pos(nv), neg(nv, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < nv; ++j) pos[j] = cols++;
  for (std::size_t j = 0; j < nv; ++j)
    if (p.free[j]) neg[j] = cols++;
  std::vector<std::size_t> surplus(p.rows.size(), SIZE_MAX);
  for (std::size_t i = 0; i < p.rows.size(); ++i)
    if (p.rows[i].rel == Relation::ge) surplus[i] = cols++;
  const std::size_t first_art = cols;
  const std::size_t m = p.rows.size();
  cols += m;

  std::vector<Row> rows(m, Row(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    Row& row = rows[i];
    for (auto& v : row) v = 0;
    const LPRow& src = p.rows[i];
    for (std::size_t j = 0; j < nv; ++j) {
      if (src.coeffs[j] == 0) continue;
      row[pos[j]] = src.coeffs[j];
      if (neg[j] != SIZE_MAX) row[neg[j]] = -src.coeffs[j];
    }
    if (surplus[i] != SIZE_MAX) row[surplus[i]] = -1;
    row[cols] = src.rhs;
    if (sgn(src.rhs) < 0)
      for (std::size_t j = 0; j <= cols; ++j)
        if (row[j] != 0) row[j] = -row[j];
    row[first_art + i] = 1;
    basis[i] = first_art + i;
  }

  Tableau tab(std::move(rows), std::move(basis), cols);
  std::vector<Rational> phase1_cost(cols, Rational(0));
  for (std::size_t j = first_art; j < cols; ++j) phase1_cost[j] = 1;
  Row d = tab.reduced_costs(phase1_cost);
  std::vector<char> allowed(cols, 1);
  tab.optimize(d, allowed);  // phase 1 is bounded below by 0
  LPResult result;
  if (d[cols] != 0) {
    result.status = LPStatus::infeasible;
    return result;
  }

  // Drive remaining artificials out of the basis; rows where that is impossible are redundant.
  for (std::size_t i = 0; i < tab.rows().size();) {
    if (tab.basis()[i] < first_art) {
      ++i;
      continue;
    }
    std::size_t col = first_art;
    for (std::size_t j = 0; j < first_art; ++j)
      if (tab.rows()[i][j] != 0) {
        col = j;
        break;
      }
    if (col == first_art) {
      tab.rows().erase(tab.rows().begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis().erase(tab.basis().begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    tab.pivot(i, col, d);
    ++i;
  }

  for (std::size_t j = first_art; j < cols; ++j) allowed[j] = 0;
  std::vector<Rational> cost(cols, Rational(0));
  for (std::size_t j = 0; j < nv && !p.objective.empty(); ++j) {
    cost[pos[j]] = p.objective[j];
    if (neg[j] != SIZE_MAX) cost[neg[j]] = -p.objective[j];
  }
  Row d2 = tab.reduced_costs(cost);
  if (!p.objective.empty() && !tab.optimize(d2, allowed)) {
    result.status = LPStatus::unbounded;
    return result;
  }

  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < tab.rows().size(); ++i) x[tab.basis()[i]] = tab.rows()[i][cols];
  result.status = LPStatus::optimal;
  result.assignment.resize(nv);
  result.value = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    result.assignment[j] = x[pos[j]] - (neg[j] != SIZE_MAX ? x[neg[j]] : Rational(0));
    if (!p.objective.empty()) result.value += p.objective[j] * result.assignment[j];
  }
  return result;
}

}  // namespace malle
