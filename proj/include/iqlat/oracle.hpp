#pragma once

#include <optional>
#include <vector>

#include "iqlat/lattice.hpp"
#include "iqlat/reduction.hpp"

// Independent ground truth for the reduction algorithm: exact LLL on rank-4
// Gram matrices, certified-box enumeration of real and algebraic successive
// minima, and the audit that compares reduced norms against them.

namespace iqlat {

struct NotPositiveDefinite : std::domain_error {
    explicit NotPositiveDefinite(const std::string& what) : std::domain_error(what) {}
};

struct BadDelta : std::invalid_argument {
    explicit BadDelta(const std::string& what) : std::invalid_argument(what) {}
};

struct IterationLimit : std::runtime_error {
    explicit IterationLimit(const std::string& what) : std::runtime_error(what) {}
};

struct LllResult {
    RealGram gram;                // U^T G U for the accumulated transform U
    IMat4 transform;              // column convention, det +-1
    std::array<Rat, 4> norms;     // diagonal of the reduced Gram, in order
    long iterations = 0;
};

// Exact LLL on the Gram form: size-reduce with round-half-up mu, Lovasz swap
// condition with parameter delta in (1/4, 1].  Iterations are capped at 10^6
// and exceeding the cap raises IterationLimit rather than looping silently.
LllResult lll_reduce_real(const RealGram& g, const Rat& delta);

struct RealMinima {
    std::array<Rat, 4> minima;       // ascending; integers for integral Gram
    std::array<IVec4, 4> witnesses;  // coefficients in the ORIGINAL generator order
    long search_bound = 0;           // certified coefficient box radius actually used
};

// The four successive minima of the rank-4 real lattice given by its Gram
// matrix.  A vector of squared norm <= R has i-th coefficient bounded by
// sqrt(R * (G^-1)_ii), which certifies the enumeration box; the input is
// LLL(3/4)-pre-reduced to keep that box small.  box_override, when positive,
// replaces every certified radius (the CLI --box flag).
RealMinima real_minima(const RealGram& g, long box_override = 0);

struct AlgMinima {
    Int lambda1_sq, lambda2_sq;
    std::array<RingElem, 2> witness1, witness2;  // coefficient pairs (p1, p2)
    long search_bound = 0;
};

// lambda1, lambda2 of the rank-2 module: shortest nonzero vector, and the
// shortest vector with coefficient pair not K-proportional to the first
// witness (exact cross-determinant test p1*q2 - p2*q1 != 0).
AlgMinima algebraic_minima(const AlgBasis& basis, long box_override = 0);

struct AuditReport {
    ReductionReport reduction;
    AlgMinima minima;
    bool optimal = false;
};

// Reduce, then check the reduced squared norms against the enumerated
// (lambda1^2, lambda2^2).
AuditReport optimality_audit(const AlgBasis& basis, long box_override = 0);

}  // namespace iqlat
