#include "krcyclo/lp.hpp"

#include <stdexcept>

namespace krcyclo {

namespace {

// Full-tableau simplex core. Columns: [0, n) true variables, [n, n+m)
// artificials, plus rhs. Bland's rule (lowest eligible index) on both the
// entering and the leaving choice, which rules out cycling.
class Tableau {
public:
  Tableau(QMat a, QVec b) : m_(a.size()), n_(a.empty() ? 0 : a[0].size()) {
    rows_.resize(m_, QVec(n_ + m_ + 1, QQ(0)));
    basis_.resize(m_);
    for (size_t i = 0; i < m_; ++i) {
      const bool flip = b[i] < 0;
      for (size_t j = 0; j < n_; ++j) rows_[i][j] = flip ? -a[i][j] : a[i][j];
      rows_[i][n_ + i] = 1;
      rows_[i].back() = flip ? -b[i] : b[i];
      basis_[i] = n_ + i;
    }
  }

  // Minimizes cost.x over the current feasible region. allow_artificial
  // controls whether artificial columns may enter. Returns false when
  // unbounded.
  bool optimize(const QVec& cost, bool allow_artificial) {
    compute_reduced_row(cost);
    const size_t limit = allow_artificial ? n_ + m_ : n_;
    for (;;) {
      size_t enter = limit;
      for (size_t j = 0; j < limit; ++j)
        if (z_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == limit) return true;
      size_t leave = m_;
      QQ best_ratio;
      for (size_t i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        const QQ ratio = rows_[i].back() / rows_[i][enter];
        if (leave == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  QQ objective_value(const QVec& cost) const {
    QQ v = 0;
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] < cost.size()) v += cost[basis_[i]] * rows_[i].back();
    return v;
  }

  // Drives zero-level artificial variables out of the basis where the row
  // has support on true columns; rows without such support are redundant
  // constraints and their artificial stays pinned at zero.
  void expel_artificials() {
    for (size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (size_t j = 0; j < n_; ++j) {
        if (rows_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  QVec primal(size_t num_true) const {
    QVec x(num_true, QQ(0));
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] < num_true) x[basis_[i]] = rows_[i].back();
    return x;
  }

  // Row multipliers y with y.A <= c on true columns (complementary on the
  // basis): y_i = -reduced_cost(artificial i) since artificials cost zero.
  QVec duals() const {
    QVec y(m_);
    for (size_t i = 0; i < m_; ++i) y[i] = -z_[n_ + i];
    return y;
  }

  size_t num_true() const { return n_; }

private:
  void compute_reduced_row(const QVec& cost) {
    z_.assign(n_ + m_ + 1, QQ(0));
    for (size_t j = 0; j < cost.size(); ++j) z_[j] = cost[j];
    for (size_t i = 0; i < m_; ++i) {
      const QQ cb = basis_[i] < cost.size() ? cost[basis_[i]] : QQ(0);
      if (cb == 0) continue;
      for (size_t j = 0; j <= n_ + m_; ++j) z_[j] -= cb * rows_[i][j];
    }
  }

  void pivot(size_t row, size_t col) {
    const QQ d = rows_[row][col];
    for (auto& v : rows_[row]) v /= d;
    for (size_t i = 0; i < m_; ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      const QQ f = rows_[i][col];
      for (size_t j = 0; j <= n_ + m_; ++j) rows_[i][j] -= f * rows_[row][j];
    }
    if (!z_.empty() && z_[col] != 0) {
      const QQ f = z_[col];
      for (size_t j = 0; j <= n_ + m_; ++j) z_[j] -= f * rows_[row][j];
    }
    basis_[row] = col;
  }

  size_t m_, n_;
  QMat rows_;
  QVec z_;
  std::vector<size_t> basis_;
};

} // namespace

LpResult lp_solve_standard(QMat a, QVec b, QVec c) {
  const size_t m = a.size();
  const size_t n = m == 0 ? c.size() : a[0].size();
  if (b.size() != m || c.size() != n) throw std::invalid_argument("lp: size mismatch");

  std::vector<bool> flipped(m);
  for (size_t i = 0; i < m; ++i) flipped[i] = b[i] < 0;

  Tableau t(std::move(a), std::move(b));

  // Phase 1: feasibility via artificial costs.
  QVec phase1_cost(n + m, QQ(0));
  for (size_t i = 0; i < m; ++i) phase1_cost[n + i] = 1;
  t.optimize(phase1_cost, true);
  if (t.objective_value(phase1_cost) != 0) {
    LpResult r;
    r.status = LpStatus::Infeasible;
    return r;
  }
  t.expel_artificials();

  // Phase 2.
  LpResult r;
  if (!t.optimize(c, false)) {
    r.status = LpStatus::Unbounded;
    return r;
  }
  r.status = LpStatus::Optimal;
  r.x = t.primal(n);
  r.objective = vec_dot(c, r.x);
  r.row_duals = t.duals();
  for (size_t i = 0; i < m; ++i)
    if (flipped[i]) r.row_duals[i] = -r.row_duals[i];
  return r;
}

GeneralLpResult lp_solve(const GeneralLp& lp) {
  const int nv = lp.num_vars;
  const auto var_is_nonneg = [&](int j) {
    return !lp.nonneg.empty() && lp.nonneg[static_cast<size_t>(j)];
  };

  // Column layout: for each variable either one column (x >= 0) or a
  // (positive, negative) pair; then one slack per <= row.
  std::vector<int> col_of(nv);
  int cols = 0;
  for (int j = 0; j < nv; ++j) {
    col_of[j] = cols;
    cols += var_is_nonneg(j) ? 1 : 2;
  }
  const int slack_base = cols;
  cols += static_cast<int>(lp.le_lhs.size());

  const size_t rows = lp.eq_lhs.size() + lp.le_lhs.size();
  QMat a(rows, QVec(cols, QQ(0)));
  QVec b(rows);
  auto emit_row = [&](size_t r, const QVec& coeffs, const QQ& rhs) {
    for (int j = 0; j < nv; ++j) {
      if (coeffs[j] == 0) continue;
      a[r][col_of[j]] = coeffs[j];
      if (!var_is_nonneg(j)) a[r][col_of[j] + 1] = -coeffs[j];
    }
    b[r] = rhs;
  };
  for (size_t i = 0; i < lp.eq_lhs.size(); ++i) emit_row(i, lp.eq_lhs[i], lp.eq_rhs[i]);
  for (size_t i = 0; i < lp.le_lhs.size(); ++i) {
    const size_t r = lp.eq_lhs.size() + i;
    emit_row(r, lp.le_lhs[i], lp.le_rhs[i]);
    a[r][slack_base + static_cast<int>(i)] = 1;
  }

  QVec c(cols, QQ(0));
  if (!lp.objective.empty()) {
    for (int j = 0; j < nv; ++j) {
      const QQ cj = lp.maximize ? -lp.objective[j] : lp.objective[j];
      c[col_of[j]] = cj;
      if (!var_is_nonneg(j)) c[col_of[j] + 1] = -cj;
    }
  }

  const LpResult inner = lp_solve_standard(std::move(a), std::move(b), std::move(c));
  GeneralLpResult r;
  r.status = inner.status;
  if (inner.status != LpStatus::Optimal) return r;

  r.x.resize(nv);
  for (int j = 0; j < nv; ++j) {
    r.x[j] = inner.x[col_of[j]];
    if (!var_is_nonneg(j)) r.x[j] -= inner.x[col_of[j] + 1];
  }
  r.objective = lp.objective.empty() ? QQ(0) : vec_dot(lp.objective, r.x);
  const QQ dual_sign = lp.maximize ? QQ(-1) : QQ(1);
  for (size_t i = 0; i < lp.eq_lhs.size(); ++i)
    r.eq_duals.push_back(dual_sign * inner.row_duals[i]);
  for (size_t i = 0; i < lp.le_lhs.size(); ++i)
    r.le_duals.push_back(dual_sign * inner.row_duals[lp.eq_lhs.size() + i]);
  return r;
}

bool lp_feasible(const GeneralLp& lp) {
  GeneralLp probe = lp;
  probe.objective.clear();
  probe.maximize = false;
  return lp_solve(probe).status == LpStatus::Optimal;
}

} // namespace krcyclo
