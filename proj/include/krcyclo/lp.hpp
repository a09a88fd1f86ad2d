#pragma once

#include "krcyclo/vec.hpp"

namespace krcyclo {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  QQ objective;
  QVec x;         // primal solution, original variable order
  QVec row_duals; // one multiplier per constraint row
};

// min c.x subject to A x = b, x >= 0. Dense tableau simplex with Bland's
// rule, exact rational pivots. Duals are read off the artificial columns of
// the final tableau, so every answer carries its own certificate.
LpResult lp_solve_standard(QMat a, QVec b, QVec c);

// General form: optionally maximize, equality and <= rows, free or
// nonnegative variables. Internally reduced to standard form.
struct GeneralLp {
  int num_vars = 0;
  bool maximize = false;
  QVec objective;            // empty means feasibility problem (c = 0)
  QMat eq_lhs;
  QVec eq_rhs;
  QMat le_lhs;
  QVec le_rhs;
  std::vector<bool> nonneg;  // empty means all variables free
};

struct GeneralLpResult {
  LpStatus status = LpStatus::Infeasible;
  QQ objective;
  QVec x;
  QVec eq_duals;
  QVec le_duals;
};

GeneralLpResult lp_solve(const GeneralLp& lp);

bool lp_feasible(const GeneralLp& lp);

} // namespace krcyclo
