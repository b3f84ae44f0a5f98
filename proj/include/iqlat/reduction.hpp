#pragma once

#include <vector>

#include "iqlat/lattice.hpp"

// Two-dimensional lattice basis reduction: the classical Lagrange-Gauss loop
// over Z, and its generalization over Z[xi] with the ring quantizer in place
// of nearest-integer rounding.

namespace iqlat {

enum class StepKind { Swap, Translate };

struct ReductionStep {
    StepKind kind;
    RingElem q;  // shift coefficient; meaningful for Translate only
};

// 2x2 matrix over Z[xi], column convention: output basis = input basis * U,
// with bases as column pairs [b1 b2].
struct RingMat2 {
    std::array<std::array<RingElem, 2>, 2> m;
};

RingMat2 ring_mat2_identity();
RingElem ring_mat2_det(const RingMat2& u, const FieldDesc& f);

struct ReductionReport {
    AlgBasis basis;
    RingMat2 transform;
    std::vector<ReductionStep> trace;
    int iterations = 0;
};

// Loop: swap when norm_sq(b2) < norm_sq(b1) strictly, size-reduce b2 against
// b1 by quantize(mu), stop once norm_sq(b2) >= norm_sq(b1) survives the
// size-reduction.  Output satisfies is_gauss_reduced.
ReductionReport gauss_reduce_algebraic(const AlgBasis& basis);

// norm_sq(b1) <= norm_sq(b2) and mu fully reduced, which is equivalent to
// ||b2|| <= ||b2 + p b1|| for every ring scalar p.
bool is_gauss_reduced(const AlgBasis& basis);

// Classical variant over Q^2 with integer shifts.
struct Vec2Q {
    Rat x, y;
};

bool operator==(const Vec2Q& u, const Vec2Q& v);
Rat norm_sq(const Vec2Q& v);

struct ClassicalStep {
    StepKind kind;
    Int q;
};

struct ClassicalReport {
    Vec2Q b1, b2;
    std::array<std::array<Int, 2>, 2> transform;
    std::vector<ClassicalStep> trace;
    int iterations = 0;
};

ClassicalReport gauss_reduce_classical(const Vec2Q& b1, const Vec2Q& b2);

}  // namespace iqlat
