#include "iqlat/qmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace iqlat {

QMat4 qmat_identity() {
    QMat4 m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = Rat(i == j ? 1 : 0);
    return m;
}

IMat4 imat_identity() {
    IMat4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    return m;
}

bool is_symmetric(const QMat4& m) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

namespace {

// Determinant of the k x k leading block by fraction-preserving elimination.
Rat leading_det(const QMat4& m, int k) {
    std::array<std::array<Rat, 4>, 4> a = m;
    Rat det(1);
    for (int c = 0; c < k; ++c) {
        int pivot = -1;
        for (int r = c; r < k; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < k; ++r) {
            if (a[r][c] == 0) continue;
            Rat factor = a[r][c] / a[c][c];
            for (int j = c; j < k; ++j) a[r][j] -= factor * a[c][j];
        }
    }
    return det;
}

}  // namespace

std::array<Rat, 4> leading_minors(const QMat4& m) {
    return {leading_det(m, 1), leading_det(m, 2), leading_det(m, 3), leading_det(m, 4)};
}

bool positive_definite(const QMat4& m) {
    for (const Rat& minor : leading_minors(m))
        if (minor <= 0) return false;
    return true;
}

QMat4 qmat_inverse(const QMat4& m) {
    std::array<std::array<Rat, 8>, 4> a{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) a[i][j] = m[i][j];
        a[i][4 + i] = 1;
    }
    for (int c = 0; c < 4; ++c) {
        int pivot = -1;
        for (int r = c; r < 4; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("singular matrix");
        if (pivot != c) std::swap(a[pivot], a[c]);
        Rat pv = a[c][c];
        for (int j = 0; j < 8; ++j) a[c][j] /= pv;
        for (int r = 0; r < 4; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat factor = a[r][c];
            for (int j = 0; j < 8; ++j) a[r][j] -= factor * a[c][j];
        }
    }
    QMat4 inv;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv[i][j] = a[i][4 + j];
    return inv;
}

Rat eval_quadratic(const QMat4& m, const IVec4& c) {
    Rat total(0);
    for (int i = 0; i < 4; ++i) {
        if (c[i] == 0) continue;
        Rat row(0);
        for (int j = 0; j < 4; ++j)
            if (c[j] != 0) row += m[i][j] * Rat(c[j]);
        total += Rat(c[i]) * row;
    }
    return total;
}

Int imat_det(const IMat4& u) {
    Int det(0);
    std::array<int, 4> p = {0, 1, 2, 3};
    // 4x4 permanent-style expansion over the 24 permutations.
    int perm[24][4];
    int n = 0;
    do {
        for (int i = 0; i < 4; ++i) perm[n][i] = p[i];
        ++n;
    } while (std::next_permutation(p.begin(), p.end()));
    for (int k = 0; k < 24; ++k) {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[k][i] > perm[k][j]) ++inv;
        Int term(1);
        for (int i = 0; i < 4; ++i) term *= u[i][perm[k][i]];
        det += (inv % 2 == 0) ? term : -term;
    }
    return det;
}

IVec4 imat_apply(const IMat4& u, const IVec4& c) {
    IVec4 out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] += u[i][j] * c[j];
    return out;
}

IMat4 imat_mul(const IMat4& u, const IMat4& v) {
    IMat4 out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) out[i][j] += u[i][k] * v[k][j];
    return out;
}

}  // namespace iqlat
