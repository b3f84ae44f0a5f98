#pragma once

#include <array>

#include "iqlat/ring.hpp"

// Small exact linear algebra over 4x4 rational matrices, shared by the form
// certificates and the enumeration oracle.

namespace iqlat {

using QMat4 = std::array<std::array<Rat, 4>, 4>;
using IMat4 = std::array<std::array<Int, 4>, 4>;
using IVec4 = std::array<Int, 4>;

QMat4 qmat_identity();
IMat4 imat_identity();

bool is_symmetric(const QMat4& m);

// Determinants of the k x k leading blocks, k = 1..4.
std::array<Rat, 4> leading_minors(const QMat4& m);

// Sylvester criterion: all leading principal minors strictly positive.
bool positive_definite(const QMat4& m);

// Exact inverse via Gauss-Jordan elimination; throws std::domain_error if
// the matrix is singular.
QMat4 qmat_inverse(const QMat4& m);

// c^T m c, exact.
Rat eval_quadratic(const QMat4& m, const IVec4& c);

Int imat_det(const IMat4& u);
IVec4 imat_apply(const IMat4& u, const IVec4& c);
IMat4 imat_mul(const IMat4& u, const IMat4& v);

}  // namespace iqlat
