#include "krcyclo/vec.hpp"

#include <cassert>
#include <stdexcept>

namespace krcyclo {

namespace {

void check_same_size(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
}

} // namespace

QVec vec_add(const QVec& a, const QVec& b) {
  check_same_size(a, b);
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec vec_sub(const QVec& a, const QVec& b) {
  check_same_size(a, b);
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec vec_scaled(const QVec& a, const QQ& s) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

QVec vec_neg(const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

QQ vec_dot(const QVec& a, const QVec& b) {
  check_same_size(a, b);
  QQ r = 0;
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

QQ vec_sum(const QVec& a) {
  QQ r = 0;
  for (const QQ& x : a) r += x;
  return r;
}

bool vec_is_zero(const QVec& a) {
  for (const QQ& x : a)
    if (x != 0) return false;
  return true;
}

int mat_rank(QMat m) {
  if (m.empty()) return 0;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    for (size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const QQ f = m[r][col] / m[row][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  return static_cast<int>(row);
}

QQ mat_det(QMat m) {
  const size_t n = m.size();
  for (const auto& r : m)
    if (r.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  QQ det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return QQ(0);
    if (pivot != col) {
      std::swap(m[col], m[pivot]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const QQ f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::optional<QVec> mat_solve(QMat a, QVec b) {
  const size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve: size mismatch");
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const QQ f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  QVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::optional<QMat> mat_inverse(QMat a) {
  const size_t n = a.size();
  QMat inv(n, QVec(n, QQ(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const QQ d = a[col][col];
    for (size_t c = 0; c < n; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const QQ f = a[r][col];
      for (size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

QMat mat_transpose(const QMat& m) {
  if (m.empty()) return {};
  QMat t(m[0].size(), QVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

QMat mat_mul(const QMat& a, const QMat& b) {
  if (a.empty() || b.empty()) return {};
  QMat r(a.size(), QVec(b[0].size(), QQ(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

QVec mat_apply(const QMat& m, const QVec& v) {
  QVec r(m.size(), QQ(0));
  for (size_t i = 0; i < m.size(); ++i) r[i] = vec_dot(m[i], v);
  return r;
}

QMat rref(QMat m, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  if (m.empty()) return m;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const QQ d = m[row][col];
    for (size_t c = col; c < cols; ++c) m[row][c] /= d;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const QQ f = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    if (pivot_cols) pivot_cols->push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  return m;
}

QMat nullspace(const QMat& m, int num_cols) {
  std::vector<int> pivots;
  const QMat r = rref(m, &pivots);
  std::vector<bool> is_pivot(num_cols, false);
  for (int p : pivots) is_pivot[p] = true;
  QMat basis;
  for (int free_col = 0; free_col < num_cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVec v(num_cols, QQ(0));
    v[free_col] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r[k][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

QVec scale_to_coprime_integers(const QVec& v, bool fix_leading_sign) {
  ZZ den_lcm = 1;
  for (const QQ& x : v) den_lcm = lcm(den_lcm, denominator(x));
  ZZ num_gcd = 0;
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    r[i] = v[i] * QQ(den_lcm);
    num_gcd = gcd(num_gcd, numerator(r[i]));
  }
  if (num_gcd == 0) return r; // zero vector
  for (auto& x : r) x /= QQ(num_gcd);
  if (fix_leading_sign) {
    for (const QQ& x : r) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : r) y = -y;
      break;
    }
  }
  return r;
}

int affine_dim(const std::vector<QVec>& pts) {
  if (pts.empty()) return -1;
  QMat dirs;
  for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(vec_sub(pts[i], pts[0]));
  if (dirs.empty()) return 0;
  return mat_rank(std::move(dirs));
}

} // namespace krcyclo
