#pragma once

#include <vector>

#include "iqlat/qmat.hpp"
#include "iqlat/ring.hpp"

// Rank-2 modules over Z[xi] sitting in C^n: inner products, Gram data, and the
// real rank-4 embedding used by the comparison oracle.

namespace iqlat {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroVector : std::invalid_argument {
    explicit ZeroVector(const std::string& what) : std::invalid_argument(what) {}
};

struct DependentBasis : std::invalid_argument {
    explicit DependentBasis(const std::string& what) : std::invalid_argument(what) {}
};

struct AlgVector {
    FieldDesc field;
    std::vector<RingElem> entries;
};

bool operator==(const AlgVector& u, const AlgVector& v);
bool is_zero(const AlgVector& v);

AlgVector add(const AlgVector& u, const AlgVector& v);
AlgVector sub(const AlgVector& u, const AlgVector& v);
AlgVector scale(const RingElem& c, const AlgVector& v);

// <u, v> = sum_i conj(u_i) * v_i: conjugate-linear in the FIRST argument.
RingElem inner_product(const AlgVector& u, const AlgVector& v);

// <v, v> = sum_i alg_norm(v_i), a nonnegative integer.
Int norm_sq(const AlgVector& v);

// <b1, b2> / norm_sq(b1) as an exact field element.
FieldElem mu_coefficient(const AlgVector& b1, const AlgVector& b2);

// norm_sq(u) * norm_sq(v) > alg_norm(<u,v>), i.e. strict Cauchy-Schwarz,
// holds exactly when u, v are linearly independent over K.
bool is_independent(const AlgVector& u, const AlgVector& v);

struct AlgBasis {
    FieldDesc field;
    AlgVector b1, b2;
};

// Validates lengths, matching fields, and K-independence.
AlgBasis make_basis(const AlgVector& b1, const AlgVector& b2);

// Gram matrix of the real generators [phi(b1), phi(xi b1), phi(b2), phi(xi b2)]
// where phi(x+iy) = (x, y) coordinate-wise.  Entries are Re<g_j, g_k>, exact
// rationals with denominator at most 2.
struct RealGram {
    QMat4 g;
};

RealGram embed_real_gram(const AlgBasis& basis);

}  // namespace iqlat
