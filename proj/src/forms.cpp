#include "iqlat/forms.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace iqlat {

namespace {

void require_square_free(long d) {
    if (d < 1) throw NotSquareFree(d);
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) throw NotSquareFree(d);
}

Rat half(long num) {
    Rat r(num, 2);
    r.canonicalize();
    return r;
}

}  // namespace

QuadForm4 build_q1(long d) {
    require_square_free(d);
    if (d % 4 != 1 && d % 4 != 2)
        throw WrongRamification("Q1 requires d = 1,2 (mod 4), got d = " + std::to_string(d));
    QuadForm4 f{d, FormKind::Q1, {}};
    Rat dr(d);
    f.m = {{{Rat(1), Rat(0), half(-1), half(-d)},
            {Rat(0), dr, half(d), half(-d)},
            {half(-1), half(d), Rat(1), Rat(0)},
            {half(-d), half(-d), Rat(0), dr}}};
    return f;
}

QuadForm4 build_q2(long d) {
    require_square_free(d);
    if (d % 4 != 3)
        throw WrongRamification("Q2 requires d = 3 (mod 4), got d = " + std::to_string(d));
    long D = (1 + d) / 4;
    Rat Dr(D);
    Rat e(-(1 + d), 8);
    e.canonicalize();
    Rat dm1 = half(D - 1);
    QuadForm4 f{d, FormKind::Q2, {}};
    f.m = {{{Rat(1), half(1), half(-1), e},
            {half(1), Dr, dm1, e},
            {half(-1), dm1, Rat(1), half(1)},
            {e, e, half(1), Dr}}};
    return f;
}

Int eval_form(const QuadForm4& form, const IVec4& v) {
    Rat value = eval_quadratic(form.m, v);
    if (value.get_den() != 1)
        throw std::logic_error("form evaluated to a non-integer at an integer point");
    return value.get_num();
}

Int eval_q1_prime(const IVec4& v, long d) {
    const Int &x = v[0], &y = v[1], &z = v[2], &w = v[3];
    return x * x + d * y * y + z * z + d * w * w - abs(x * z + d * y * w) -
           d * abs(x * w - y * z);
}

Int eval_q1_poly(const IVec4& v, long d) {
    const Int &x = v[0], &y = v[1], &z = v[2], &w = v[3];
    return x * x + d * y * y + z * z + d * w * w - (x * z + d * y * w) -
           d * (x * w - y * z);
}

Int eval_q2_poly(const IVec4& v, long d) {
    long D = (1 + d) / 4;
    const Int &x = v[0], &y = v[1], &z = v[2], &w = v[3];
    return x * x + x * y + D * y * y + z * z + z * w + D * w * w - D * x * w +
           (D - 1) * y * z - x * z - D * y * w;
}

bool is_positive_definite(const QuadForm4& form) { return positive_definite(form.m); }

ClosedFormEigen q1_eigenvalues_closed_form(long d) {
    double dd = static_cast<double>(d);
    double s1 = std::sqrt(5 * dd * dd - 6 * dd + 9);
    double s2 = std::sqrt(13 * dd * dd - 6 * dd + 1);
    ClosedFormEigen out{{(dd - s1 + 3) / 4, (dd + s1 + 3) / 4, (3 * dd - s2 + 1) / 4,
                         (3 * dd + s2 + 1) / 4},
                        true};
    for (double v : out.values)
        if (!std::isfinite(v)) out.all_real = false;
    return out;
}

ClosedFormEigen q2_eigenvalues_closed_form(long d) {
    double D = (1 + static_cast<double>(d)) / 4;
    double c = std::sqrt(D * D - 2 * D + 2);
    double base = 9 * D * D - 10 * D * D * D + 10;
    double shift = 4 * (D * D * D - D * D + 2) / c;
    double rminus = std::sqrt(base - shift);
    double rplus = std::sqrt(base + shift);
    ClosedFormEigen out{{(2 * D + 2 - rminus - c) / 4, (2 * D + 2 + rminus - c) / 4,
                         (2 * D + 2 - rplus + c) / 4, (2 * D + 2 + rplus + c) / 4},
                        true};
    for (double v : out.values)
        if (!std::isfinite(v)) out.all_real = false;
    return out;
}

std::array<double, 4> numeric_eigenvalues(const QuadForm4& form) {
    Eigen::Matrix4d m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = form.m[i][j].get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(m);
    std::array<double, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = solver.eigenvalues()(i);
    return out;
}

}  // namespace iqlat
