#include "iqlat/reduction.hpp"

namespace iqlat {

RingMat2 ring_mat2_identity() {
    RingMat2 u;
    u.m[0][0] = {1, 0};
    u.m[0][1] = {0, 0};
    u.m[1][0] = {0, 0};
    u.m[1][1] = {1, 0};
    return u;
}

RingElem ring_mat2_det(const RingMat2& u, const FieldDesc& f) {
    return sub(mul(u.m[0][0], u.m[1][1], f), mul(u.m[0][1], u.m[1][0], f));
}

namespace {

// U *= [[0,1],[1,0]]: swap columns.
void apply_swap(RingMat2& u) {
    std::swap(u.m[0][0], u.m[0][1]);
    std::swap(u.m[1][0], u.m[1][1]);
}

// U *= [[1,-q],[0,1]]: column 2 -= q * column 1.
void apply_translate(RingMat2& u, const RingElem& q, const FieldDesc& f) {
    u.m[0][1] = sub(u.m[0][1], mul(q, u.m[0][0], f));
    u.m[1][1] = sub(u.m[1][1], mul(q, u.m[1][0], f));
}

}  // namespace

ReductionReport gauss_reduce_algebraic(const AlgBasis& basis) {
    const FieldDesc& f = basis.field;
    AlgVector b1 = basis.b1, b2 = basis.b2;
    ReductionReport rep{basis, ring_mat2_identity(), {}, 0};
    while (true) {
        ++rep.iterations;
        if (norm_sq(b2) < norm_sq(b1)) {
            std::swap(b1, b2);
            apply_swap(rep.transform);
            rep.trace.push_back({StepKind::Swap, {0, 0}});
        }
        RingElem q = quantize(mu_coefficient(b1, b2), f);
        if (!is_zero(q)) {
            b2 = sub(b2, scale(q, b1));
            apply_translate(rep.transform, q, f);
            rep.trace.push_back({StepKind::Translate, q});
        }
        if (norm_sq(b2) >= norm_sq(b1)) break;
    }
    rep.basis = AlgBasis{f, b1, b2};
    return rep;
}

bool is_gauss_reduced(const AlgBasis& basis) {
    if (norm_sq(basis.b1) > norm_sq(basis.b2)) return false;
    return is_fully_reduced(mu_coefficient(basis.b1, basis.b2), basis.field);
}

bool operator==(const Vec2Q& u, const Vec2Q& v) { return u.x == v.x && u.y == v.y; }

Rat norm_sq(const Vec2Q& v) { return v.x * v.x + v.y * v.y; }

ClassicalReport gauss_reduce_classical(const Vec2Q& b1in, const Vec2Q& b2in) {
    if (b1in.x * b2in.y - b1in.y * b2in.x == 0)
        throw DependentBasis("classical basis vectors are parallel or zero");
    Vec2Q b1 = b1in, b2 = b2in;
    ClassicalReport rep{b1, b2, {{{Int(1), Int(0)}, {Int(0), Int(1)}}}, {}, 0};
    auto dot = [](const Vec2Q& u, const Vec2Q& v) -> Rat { return u.x * v.x + u.y * v.y; };
    while (true) {
        ++rep.iterations;
        if (norm_sq(b2) < norm_sq(b1)) {
            std::swap(b1, b2);
            std::swap(rep.transform[0][0], rep.transform[0][1]);
            std::swap(rep.transform[1][0], rep.transform[1][1]);
            rep.trace.push_back({StepKind::Swap, Int(0)});
        }
        Int q = round_half_up(dot(b1, b2) / norm_sq(b1));
        if (q != 0) {
            Rat qr(q);
            b2 = {b2.x - qr * b1.x, b2.y - qr * b1.y};
            rep.transform[0][1] -= q * rep.transform[0][0];
            rep.transform[1][1] -= q * rep.transform[1][0];
            rep.trace.push_back({StepKind::Translate, q});
        }
        if (norm_sq(b2) >= norm_sq(b1)) break;
    }
    rep.b1 = b1;
    rep.b2 = b2;
    return rep;
}

}  // namespace iqlat
