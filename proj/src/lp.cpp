#include "ivol/lp.hpp"

#include <optional>
#include <stdexcept>

namespace ivol {

namespace {

class Tableau {
 public:
  // rows[r] = [coefficients..., rhs]; objective holds reduced costs and -value
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> objective;
  std::vector<std::size_t> basis;
  std::size_t columns = 0;

  void pivot(std::size_t r, std::size_t col) {
    const Rational p = rows[r][col];
    for (auto& x : rows[r]) x /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j <= columns; ++j) {
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
      }
    }
    if (objective[col] != 0) {
      const Rational f = objective[col];
      for (std::size_t j = 0; j <= columns; ++j) {
        if (rows[r][j] != 0) objective[j] -= f * rows[r][j];
      }
    }
    basis[r] = col;
  }

  // Returns false when unbounded.
  bool optimize(std::size_t usable_columns) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < usable_columns; ++j) {
        if (objective[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][*entering] <= 0) continue;
        Rational ratio = rows[r][columns] / rows[r][*entering];
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[*leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *entering);
    }
  }

  void load_objective(const std::vector<Rational>& cost) {
    objective.assign(columns + 1, Rational(0));
    for (std::size_t j = 0; j < cost.size(); ++j) objective[j] = cost[j];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational cb = basis[r] < cost.size() ? cost[basis[r]] : Rational(0);
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= columns; ++j) objective[j] -= cb * rows[r][j];
    }
  }
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.A.size();
  const std::size_t n = lp.c.size();
  if (lp.b.size() != m) throw std::invalid_argument("solve_lp: b has wrong length");
  for (const auto& row : lp.A) {
    if (row.size() != n) throw std::invalid_argument("solve_lp: ragged constraint matrix");
  }

  // Phase 1 with one artificial per row.
  Tableau t;
  t.columns = n + m;
  t.rows.assign(m, std::vector<Rational>(n + m + 1));
  t.basis.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = lp.b[r] < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[r][j] = flip ? Rational(-lp.A[r][j]) : lp.A[r][j];
    t.rows[r][n + r] = 1;
    t.rows[r][n + m] = flip ? Rational(-lp.b[r]) : lp.b[r];
    t.basis[r] = n + r;
  }
  std::vector<Rational> phase1(n + m);
  for (std::size_t r = 0; r < m; ++r) phase1[n + r] = 1;
  t.load_objective(phase1);
  t.optimize(n + m);

  LpSolution sol;
  if (-t.objective[n + m] != 0) {
    sol.status = LpStatus::infeasible;
    return sol;
  }

  // Drive remaining artificials out of the basis; drop redundant rows.
  for (std::size_t r = 0; r < t.rows.size();) {
    if (t.basis[r] < n) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.rows[r][j] != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      t.pivot(r, *col);
      ++r;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
    }
  }

  t.load_objective(lp.c);
  if (!t.optimize(n)) {
    sol.status = LpStatus::unbounded;
    return sol;
  }
  sol.status = LpStatus::optimal;
  sol.value = -t.objective[n + m];
  sol.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < t.rows.size(); ++r) sol.x[t.basis[r]] = t.rows[r][n + m];
  return sol;
}

}  // namespace ivol
