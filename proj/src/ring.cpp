#include "iqlat/ring.hpp"

#include <array>
#include <optional>

namespace iqlat {

FieldDesc make_field(long d) {
    if (d < 1) throw NotSquareFree(d);
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) throw NotSquareFree(d);
    FieldDesc f;
    f.d = d;
    if (d % 4 == 3) {
        f.kind = FieldCase::Ramified1;
        f.trace_xi = 1;
        f.norm_xi = (1 + d) / 4;
    } else {
        f.kind = FieldCase::Ramified23;
        f.trace_xi = 0;
        f.norm_xi = d;
    }
    return f;
}

RingElem add(const RingElem& x, const RingElem& y) { return {x.a + y.a, x.b + y.b}; }
RingElem sub(const RingElem& x, const RingElem& y) { return {x.a - y.a, x.b - y.b}; }
RingElem neg(const RingElem& x) { return {-x.a, -x.b}; }

RingElem mul(const RingElem& x, const RingElem& y, const FieldDesc& f) {
    Int cross = x.b * y.b;
    return {x.a * y.a - f.norm_xi * cross,
            x.a * y.b + x.b * y.a + f.trace_xi * cross};
}

RingElem conj(const RingElem& x, const FieldDesc& f) {
    return {x.a + f.trace_xi * x.b, -x.b};
}

Int alg_norm(const RingElem& x, const FieldDesc& f) {
    return x.a * x.a + f.trace_xi * x.a * x.b + f.norm_xi * x.b * x.b;
}

std::string to_string(const RingElem& x) {
    return x.a.get_str() + (sgn(x.b) < 0 ? "" : "+") + x.b.get_str() + "*xi";
}

FieldElem add(const FieldElem& x, const FieldElem& y) { return {x.a + y.a, x.b + y.b}; }
FieldElem sub(const FieldElem& x, const FieldElem& y) { return {x.a - y.a, x.b - y.b}; }
FieldElem neg(const FieldElem& x) { return {-x.a, -x.b}; }

FieldElem mul(const FieldElem& x, const FieldElem& y, const FieldDesc& f) {
    Rat cross = x.b * y.b;
    return {x.a * y.a - f.norm_xi * cross,
            x.a * y.b + x.b * y.a + f.trace_xi * cross};
}

FieldElem conj(const FieldElem& x, const FieldDesc& f) {
    return {x.a + f.trace_xi * x.b, -x.b};
}

FieldElem div(const FieldElem& x, const FieldElem& y, const FieldDesc& f) {
    if (is_zero(y)) throw DivisionByZero();
    FieldElem num = mul(x, conj(y, f), f);
    Rat den = abs_sq(y, f);
    return {num.a / den, num.b / den};
}

Rat real_part(const FieldElem& x, const FieldDesc& f) {
    return x.a + x.b * f.trace_xi / 2;
}

Rat radical_coord(const FieldElem& x, const FieldDesc& f) {
    return f.kind == FieldCase::Ramified23 ? x.b : x.b / 2;
}

Rat abs_sq(const FieldElem& x, const FieldDesc& f) {
    Rat p = real_part(x, f);
    Rat q = radical_coord(x, f);
    return p * p + f.d * q * q;
}

Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Int round_half_up(const Rat& x) { return floor_rat(x + Rat(1, 2)); }

RingElem quantize(const FieldElem& x, const FieldDesc& f) {
    // The xi-coordinate of any nearest point is floor(x.b) or ceil(x.b): one
    // more step costs at least d*im(xi)^2 > M(K).  For a fixed xi-coordinate
    // vb the residual real part is u* - va with u* = x.a + (x.b-vb)*tr/2, so
    // the first coordinate of a minimizer lies within 1 of u*.  Scanning
    // [floor(u*)-1, ceil(u*)+1] therefore covers every minimizer, which makes
    // the lexicographic tie-break exact.
    std::optional<RingElem> best;
    Rat best_val;
    auto consider = [&](RingElem v) {
        Rat val = abs_sq(sub(x, to_field(v)), f);
        if (!best || val < best_val ||
            (val == best_val &&
             (v.a < best->a || (v.a == best->a && v.b < best->b)))) {
            best = v;
            best_val = val;
        }
    };
    std::array<Int, 2> bs = {floor_rat(x.b), ceil_rat(x.b)};
    for (int i = 0; i < 2; ++i) {
        if (i == 1 && bs[1] == bs[0]) continue;
        Rat ustar = x.a + (x.b - bs[i]) * f.trace_xi / 2;
        Int lo = floor_rat(ustar) - 1, hi = ceil_rat(ustar) + 1;
        for (Int va = lo; va <= hi; ++va) consider({va, bs[i]});
    }
    return *best;
}

Rat euclidean_minimum(const FieldDesc& f) {
    Int dp1 = Int(f.d) + 1;
    Rat m = f.kind == FieldCase::Ramified23 ? Rat(dp1, Int(4))
                                            : Rat(dp1 * dp1, Int(16) * f.d);
    m.canonicalize();
    return m;
}

bool is_norm_euclidean(const FieldDesc& f) { return euclidean_minimum(f) < 1; }

bool is_fully_reduced(const FieldElem& x, const FieldDesc& f) {
    Rat p = abs(real_part(x, f));
    Rat q = abs(radical_coord(x, f));
    if (p > Rat(1, 2)) return false;
    if (f.kind == FieldCase::Ramified23) return q <= Rat(1, 2);
    return f.d * q <= (Rat(f.d) + 1) / 4 - p;
}

}  // namespace iqlat
