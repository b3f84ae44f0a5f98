#include <doctest.h>

#include <cmath>

#include "iqlat/oracle.hpp"
#include "iqlat/reduction.hpp"
#include "test_util.hpp"

using namespace iqlat;
using testutil::basis;
using testutil::vec;

namespace {

AlgVector apply_column(const AlgBasis& in, const RingMat2& u, int col) {
    return add(scale(u.m[0][col], in.b1), scale(u.m[1][col], in.b2));
}

}  // namespace

TEST_CASE("first worked example reduces with trace swap, translate, swap") {
    AlgBasis ex1 = testutil::example1();
    ReductionReport rep = gauss_reduce_algebraic(ex1);

    CHECK(norm_sq(rep.basis.b1) == 16);
    CHECK(norm_sq(rep.basis.b2) == 28);
    CHECK(rep.iterations == 2);
    REQUIRE(rep.trace.size() == 3);
    CHECK(rep.trace[0].kind == StepKind::Swap);
    CHECK(rep.trace[1].kind == StepKind::Translate);
    CHECK(rep.trace[1].q == RingElem{1, 0});
    CHECK(rep.trace[2].kind == StepKind::Swap);

    // The reduced first vector is the negation of the published one; the
    // second is untouched.
    CHECK(rep.basis.b1 == vec(ex1.field, {{3, -3}, {-2, 3}}));
    CHECK(rep.basis.b2 == vec(ex1.field, {{1, 4}, {1, 2}}));

    CHECK(rep.transform.m[0][0] == RingElem{1, 0});
    CHECK(rep.transform.m[0][1] == RingElem{0, 0});
    CHECK(rep.transform.m[1][0] == RingElem{-1, 0});
    CHECK(rep.transform.m[1][1] == RingElem{1, 0});

    CHECK(is_gauss_reduced(rep.basis));
    CHECK_FALSE(is_gauss_reduced(ex1));
}

TEST_CASE("second worked example reduces with a single translation") {
    AlgBasis ex2 = testutil::example2();
    ReductionReport rep = gauss_reduce_algebraic(ex2);

    CHECK(norm_sq(rep.basis.b1) == 58);
    CHECK(norm_sq(rep.basis.b2) == 61);
    CHECK(rep.iterations == 1);
    REQUIRE(rep.trace.size() == 1);
    CHECK(rep.trace[0].kind == StepKind::Translate);
    CHECK(rep.trace[0].q == RingElem{1, 0});
    CHECK(rep.basis.b1 == ex2.b1);
    CHECK(rep.basis.b2 == vec(ex2.field, {{6, -2}, {0, -1}}));
    CHECK(is_gauss_reduced(rep.basis));
}

TEST_CASE("transform reproduces the output basis by column action") {
    std::mt19937_64 rng(301);
    for (long d : {1L, 2L, 3L, 5L, 7L, 11L}) {
        FieldDesc f = make_field(d);
        for (int i = 0; i < 40; ++i) {
            AlgBasis in = testutil::random_basis(f, rng);
            ReductionReport rep = gauss_reduce_algebraic(in);
            CHECK(apply_column(in, rep.transform, 0) == rep.basis.b1);
            CHECK(apply_column(in, rep.transform, 1) == rep.basis.b2);
            CHECK(alg_norm(ring_mat2_det(rep.transform, f), f) == 1);
            CHECK(is_gauss_reduced(rep.basis));
            CHECK(norm_sq(rep.basis.b1) <= norm_sq(rep.basis.b2));
        }
    }
}

TEST_CASE("lattice is preserved: the inverse transform is integral") {
    std::mt19937_64 rng(302);
    for (long d : {2L, 3L, 11L}) {
        FieldDesc f = make_field(d);
        for (int i = 0; i < 30; ++i) {
            AlgBasis in = testutil::random_basis(f, rng);
            ReductionReport rep = gauss_reduce_algebraic(in);
            // U^-1 = adj(U) / det(U); det is a unit, so dividing by it keeps
            // ring entries.  Check B_in = B_out * U^-1 exactly.
            RingElem det = ring_mat2_det(rep.transform, f);
            RingElem det_conj = conj(det, f);
            Int det_norm = alg_norm(det, f);
            REQUIRE(det_norm == 1);
            // det^-1 = conj(det) when the norm is 1.
            RingMat2 inv;
            inv.m[0][0] = mul(det_conj, rep.transform.m[1][1], f);
            inv.m[0][1] = mul(det_conj, neg(rep.transform.m[0][1]), f);
            inv.m[1][0] = mul(det_conj, neg(rep.transform.m[1][0]), f);
            inv.m[1][1] = mul(det_conj, rep.transform.m[0][0], f);
            AlgBasis out = rep.basis;
            CHECK(add(scale(inv.m[0][0], out.b1), scale(inv.m[1][0], out.b2)) == in.b1);
            CHECK(add(scale(inv.m[0][1], out.b1), scale(inv.m[1][1], out.b2)) == in.b2);
        }
    }
}

TEST_CASE("reducing a reduced basis is a no-op") {
    std::mt19937_64 rng(303);
    for (long d : {1L, 3L, 5L, 7L}) {
        FieldDesc f = make_field(d);
        for (int i = 0; i < 25; ++i) {
            ReductionReport first = gauss_reduce_algebraic(testutil::random_basis(f, rng));
            ReductionReport again = gauss_reduce_algebraic(first.basis);
            CHECK(again.trace.empty());
            CHECK(again.iterations == 1);
            CHECK(again.basis.b1 == first.basis.b1);
            CHECK(again.basis.b2 == first.basis.b2);
        }
    }
}

TEST_CASE("orthogonal unit basis is already reduced") {
    FieldDesc f2 = make_field(2);
    AlgBasis b = basis(f2, {{1, 0}, {0, 0}}, {{0, 0}, {1, 0}});
    ReductionReport rep = gauss_reduce_algebraic(b);
    CHECK(rep.trace.empty());
    CHECK(rep.basis.b1 == b.b1);
    CHECK(rep.basis.b2 == b.b2);
    CHECK(rep.transform.m[0][0] == RingElem{1, 0});
    CHECK(rep.transform.m[1][1] == RingElem{1, 0});
}

TEST_CASE("iteration count stays within the logarithmic heuristic") {
    std::mt19937_64 rng(304);
    for (long d : {1L, 2L, 3L, 5L, 7L, 11L}) {
        FieldDesc f = make_field(d);
        for (int i = 0; i < 40; ++i) {
            AlgBasis in = testutil::random_basis(f, rng);
            double product = mpz_get_d(norm_sq(in.b1).get_mpz_t()) *
                             mpz_get_d(norm_sq(in.b2).get_mpz_t());
            ReductionReport rep = gauss_reduce_algebraic(in);
            CHECK(rep.iterations <= 2 + std::log2(product));
        }
    }
}

TEST_CASE("reduced norms equal the oracle minima over Euclidean fields") {
    std::mt19937_64 rng(305);
    for (long d : {1L, 2L, 3L, 7L, 11L}) {
        FieldDesc f = make_field(d);
        for (int i = 0; i < 10; ++i) {
            AlgBasis in = testutil::random_basis(f, rng);
            AuditReport audit = optimality_audit(in);
            CHECK(audit.optimal);
        }
    }
}

TEST_CASE("classical reduction fixed cases") {
    {
        ClassicalReport rep = gauss_reduce_classical({Rat(1), Rat(0)}, {Rat(0), Rat(1)});
        CHECK(rep.trace.empty());
        CHECK(rep.b1 == Vec2Q{Rat(1), Rat(0)});
        CHECK(rep.b2 == Vec2Q{Rat(0), Rat(1)});
    }
    {
        ClassicalReport rep = gauss_reduce_classical({Rat(1), Rat(0)}, {Rat(3), Rat(1)});
        CHECK(norm_sq(rep.b1) == 1);
        CHECK(norm_sq(rep.b2) == 1);
        REQUIRE(rep.trace.size() == 1);
        CHECK(rep.trace[0].kind == StepKind::Translate);
        CHECK(rep.trace[0].q == 3);
        CHECK(rep.b2 == Vec2Q{Rat(0), Rat(1)});
    }
    {
        ClassicalReport rep = gauss_reduce_classical({Rat(2), Rat(0)}, {Rat(1), Rat(1)});
        CHECK(norm_sq(rep.b1) == 2);
        CHECK(norm_sq(rep.b2) == 2);
    }
    CHECK_THROWS_AS(gauss_reduce_classical({Rat(2), Rat(1)}, {Rat(4), Rat(2)}),
                    DependentBasis);
    CHECK_THROWS_AS(gauss_reduce_classical({Rat(0), Rat(0)}, {Rat(1), Rat(1)}),
                    DependentBasis);
}

TEST_CASE("classical reduction matches brute-force real minima") {
    std::mt19937_64 rng(306);
    std::uniform_int_distribution<long> coord(-6, 6);
    for (int i = 0; i < 150; ++i) {
        Vec2Q b1{Rat(coord(rng)), Rat(coord(rng))};
        Vec2Q b2{Rat(coord(rng)), Rat(coord(rng))};
        if (b1.x * b2.y - b1.y * b2.x == 0) continue;
        ClassicalReport rep = gauss_reduce_classical(b1, b2);
        // Brute force over |p|, |q| <= 10.
        Rat best1(0), best2(0);
        bool have1 = false;
        Vec2Q w1{Rat(0), Rat(0)};
        for (long p = -10; p <= 10; ++p)
            for (long q = -10; q <= 10; ++q) {
                if (p == 0 && q == 0) continue;
                Vec2Q v{p * b1.x + q * b2.x, p * b1.y + q * b2.y};
                Rat n = norm_sq(v);
                if (!have1 || n < best1) {
                    best1 = n;
                    w1 = v;
                    have1 = true;
                }
            }
        bool have2 = false;
        for (long p = -10; p <= 10; ++p)
            for (long q = -10; q <= 10; ++q) {
                if (p == 0 && q == 0) continue;
                Vec2Q v{p * b1.x + q * b2.x, p * b1.y + q * b2.y};
                if (v.x * w1.y - v.y * w1.x == 0) continue;
                Rat n = norm_sq(v);
                if (!have2 || n < best2) {
                    best2 = n;
                    have2 = true;
                }
            }
        REQUIRE(have1);
        REQUIRE(have2);
        CHECK(norm_sq(rep.b1) == best1);
        CHECK(norm_sq(rep.b2) == best2);
        // Transform acts by columns on the input pair.
        Vec2Q c1{Rat(rep.transform[0][0]) * b1.x + Rat(rep.transform[1][0]) * b2.x,
                 Rat(rep.transform[0][0]) * b1.y + Rat(rep.transform[1][0]) * b2.y};
        Vec2Q c2{Rat(rep.transform[0][1]) * b1.x + Rat(rep.transform[1][1]) * b2.x,
                 Rat(rep.transform[0][1]) * b1.y + Rat(rep.transform[1][1]) * b2.y};
        CHECK(c1 == rep.b1);
        CHECK(c2 == rep.b2);
        Int det = rep.transform[0][0] * rep.transform[1][1] -
                  rep.transform[0][1] * rep.transform[1][0];
        CHECK((det == 1 || det == -1));
    }
}
