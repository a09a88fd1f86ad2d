#pragma once

#include "krcyclo/rational.hpp"

#include <optional>
#include <vector>

namespace krcyclo {

using QVec = std::vector<QQ>;
using QMat = std::vector<QVec>;

QVec vec_add(const QVec& a, const QVec& b);
QVec vec_sub(const QVec& a, const QVec& b);
QVec vec_scaled(const QVec& a, const QQ& s);
QVec vec_neg(const QVec& a);
QQ vec_dot(const QVec& a, const QVec& b);
QQ vec_sum(const QVec& a);
bool vec_is_zero(const QVec& a);

// Dense exact Gaussian elimination. Every matrix in this project is tiny
// (dimensions bounded by the n <= 9 caps), so no fraction-free tricks.
int mat_rank(QMat m);
QQ mat_det(QMat m);
std::optional<QVec> mat_solve(QMat a, QVec b);
std::optional<QMat> mat_inverse(QMat a);
QMat mat_transpose(const QMat& m);
QMat mat_mul(const QMat& a, const QMat& b);
QVec mat_apply(const QMat& m, const QVec& v);

// Reduced row echelon form; zero rows removed. Pivot columns reported in
// increasing order when requested.
QMat rref(QMat m, std::vector<int>* pivot_cols = nullptr);

// Basis of {x : m x = 0}, rows of the result are the basis vectors.
QMat nullspace(const QMat& m, int num_cols);

// Scales a nonzero vector by a positive rational so that the entries are
// coprime integers. When the orientation carries no meaning the sign is also
// fixed (first nonzero entry positive).
QVec scale_to_coprime_integers(const QVec& v, bool fix_leading_sign);

// Dimension of the affine hull: -1 for no points, 0 for a single point.
int affine_dim(const std::vector<QVec>& pts);

} // namespace krcyclo
