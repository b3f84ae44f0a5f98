#pragma once

#include "iqlat/qmat.hpp"

// The two 4-variable quadratic forms certifying that a reduced basis attains
// the first minimum, one per ramification case, plus their closed-form
// eigenvalue evaluations and the exact positive-definiteness decision.

namespace iqlat {

struct WrongRamification : std::invalid_argument {
    explicit WrongRamification(const std::string& what) : std::invalid_argument(what) {}
};

enum class FormKind { Q1, Q2 };

struct QuadForm4 {
    long d = 0;
    FormKind kind = FormKind::Q1;
    QMat4 m;
};

// Ramified23 form (d = 1,2 mod 4).  Rejects non-square-free d.
QuadForm4 build_q1(long d);

// Ramified1 form (d = 3 mod 4), written with D = (1+d)/4.
QuadForm4 build_q2(long d);

// v^T m v, asserted integer-valued at integer points.
Int eval_form(const QuadForm4& form, const IVec4& v);

// x^2 + d y^2 + z^2 + d w^2 - |xz + d yw| - d|xw - yz|: the absolute-value
// variant whose codomain is contained in Q1's.
Int eval_q1_prime(const IVec4& v, long d);

// The same forms as explicit polynomials, kept as a transcription guard for
// the matrices.
Int eval_q1_poly(const IVec4& v, long d);
Int eval_q2_poly(const IVec4& v, long d);

// Exact Sylvester decision on the form matrix.
bool is_positive_definite(const QuadForm4& form);

// Closed-form eigenvalue expressions, evaluated in floating point, in the
// documented source order.  For Q2 the inner radicand can go negative away
// from d = 3, producing NaN entries; all_real reports whether every entry
// evaluated to a finite real.  PD verdicts never depend on these.
struct ClosedFormEigen {
    std::array<double, 4> values;
    bool all_real;
};

ClosedFormEigen q1_eigenvalues_closed_form(long d);
ClosedFormEigen q2_eigenvalues_closed_form(long d);

// Numeric eigenvalues of the form matrix (self-adjoint solver), ascending.
std::array<double, 4> numeric_eigenvalues(const QuadForm4& form);

}  // namespace iqlat
