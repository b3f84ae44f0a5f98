#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

// Arithmetic in imaginary quadratic fields K = Q(sqrt(-d)) and their rings of
// integers Z[xi].  Everything is exact: integers are GMP mpz, field scalars are
// GMP mpq.  No floating point enters any comparison.

namespace iqlat {

using Int = mpz_class;
using Rat = mpq_class;

struct NotSquareFree : std::invalid_argument {
    explicit NotSquareFree(long d)
        : std::invalid_argument("d = " + std::to_string(d) +
                                " is not a positive square-free integer") {}
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero field element") {}
};

// Which residue class -d falls in mod 4.  It decides the shape of the ring:
//   Ramified23: -d = 2,3 (mod 4), xi = sqrt(-d)
//   Ramified1:  -d = 1   (mod 4), xi = (1 + sqrt(-d))/2
enum class FieldCase { Ramified23, Ramified1 };

struct FieldDesc {
    long d = 0;
    FieldCase kind = FieldCase::Ramified23;
    long trace_xi = 0;  // xi + conj(xi): 0 or 1
    long norm_xi = 0;   // xi * conj(xi): d or (1+d)/4
};

inline bool operator==(const FieldDesc& f, const FieldDesc& g) { return f.d == g.d; }

// Validates that d is positive and square-free, then fills in the case split.
FieldDesc make_field(long d);

// Element a + b*xi of Z[xi].
struct RingElem {
    Int a, b;
};

inline bool operator==(const RingElem& x, const RingElem& y) {
    return x.a == y.a && x.b == y.b;
}
inline bool operator!=(const RingElem& x, const RingElem& y) { return !(x == y); }
inline bool is_zero(const RingElem& x) { return x.a == 0 && x.b == 0; }

RingElem add(const RingElem& x, const RingElem& y);
RingElem sub(const RingElem& x, const RingElem& y);
RingElem neg(const RingElem& x);
// xi^2 = trace_xi * xi - norm_xi, so
// (a + b xi)(c + e xi) = (ac - norm_xi * be) + (ae + bc + trace_xi * be) xi.
RingElem mul(const RingElem& x, const RingElem& y, const FieldDesc& f);
// conj(xi) = trace_xi - xi.
RingElem conj(const RingElem& x, const FieldDesc& f);
// x * conj(x), a nonnegative rational integer.
Int alg_norm(const RingElem& x, const FieldDesc& f);

std::string to_string(const RingElem& x);

// Element a + b*xi of K with rational coordinates.
struct FieldElem {
    Rat a, b;
};

inline bool operator==(const FieldElem& x, const FieldElem& y) {
    return x.a == y.a && x.b == y.b;
}
inline bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }
inline bool is_zero(const FieldElem& x) { return x.a == 0 && x.b == 0; }

inline FieldElem to_field(const RingElem& x) { return {Rat(x.a), Rat(x.b)}; }

FieldElem add(const FieldElem& x, const FieldElem& y);
FieldElem sub(const FieldElem& x, const FieldElem& y);
FieldElem neg(const FieldElem& x);
FieldElem mul(const FieldElem& x, const FieldElem& y, const FieldDesc& f);
FieldElem conj(const FieldElem& x, const FieldDesc& f);
FieldElem div(const FieldElem& x, const FieldElem& y, const FieldDesc& f);

// Coordinates of x in the form p + q*sqrt(-d):
//   p = a + b * trace_xi/2, q = b * im(xi)  with im(xi) = 1 or 1/2.
Rat real_part(const FieldElem& x, const FieldDesc& f);
Rat radical_coord(const FieldElem& x, const FieldDesc& f);

// |x|^2 = p^2 + d*q^2 as an exact rational.
Rat abs_sq(const FieldElem& x, const FieldDesc& f);

// Nearest ring integer to x by |.|^2, ties broken by the lexicographically
// smallest (a, b) coordinate pair among the minimizers.
RingElem quantize(const FieldElem& x, const FieldDesc& f);

// Worst-case quantization error M(K): (1+d)/4, resp. (1+d)^2/(16d).
Rat euclidean_minimum(const FieldDesc& f);

// M(K) < 1, i.e. d in {1, 2, 3, 7, 11}.
bool is_norm_euclidean(const FieldDesc& f);

// True iff |x| <= |x - q| for every ring integer q (closed Voronoi cell of 0).
// Decided by the exact region inequalities, boundary inclusive:
//   Ramified23: |p| <= 1/2 and |q| <= 1/2
//   Ramified1:  |p| <= 1/2 and d|q| <= -|p| + (1+d)/4
bool is_fully_reduced(const FieldElem& x, const FieldDesc& f);

// Exact floor/ceil of a rational, and floor(x + 1/2) rounding.
Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);
Int round_half_up(const Rat& x);

}  // namespace iqlat
