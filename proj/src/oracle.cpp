#include "iqlat/oracle.hpp"

#include <algorithm>

namespace iqlat {

namespace {

constexpr long kMaxLllIterations = 1000000;

struct Gso {
    QMat4 mu;                // mu[i][j] for j < i
    std::array<Rat, 4> bstar;  // squared norms of the orthogonalized generators
};

// Gram-Schmidt data recomputed from scratch on the Gram matrix; cheap at
// rank 4 and immune to update-order bugs.
Gso compute_gso(const QMat4& g) {
    Gso out{};
    QMat4 r{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j <= i; ++j) {
            Rat acc = g[i][j];
            for (int l = 0; l < j; ++l) acc -= out.mu[j][l] * r[i][l];
            r[i][j] = acc;
            if (j < i) out.mu[i][j] = r[i][j] / out.bstar[j];
        }
        out.bstar[i] = r[i][i];
    }
    return out;
}

// Generator k -= q * generator j, applied symmetrically to the Gram matrix
// and to column k of the transform.
void gram_translate(QMat4& g, IMat4& u, int k, int j, const Int& q) {
    Rat qr(q);
    for (int i = 0; i < 4; ++i) g[k][i] -= qr * g[j][i];
    for (int i = 0; i < 4; ++i) g[i][k] -= qr * g[i][j];
    for (int i = 0; i < 4; ++i) u[i][k] -= q * u[i][j];
}

void gram_swap(QMat4& g, IMat4& u, int k) {
    std::swap(g[k], g[k - 1]);
    for (int i = 0; i < 4; ++i) std::swap(g[i][k], g[i][k - 1]);
    for (int i = 0; i < 4; ++i) std::swap(u[i][k], u[i][k - 1]);
}

bool lex_less(const IVec4& a, const IVec4& b) {
    for (int i = 0; i < 4; ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

struct Candidate {
    Int norm_scaled;
    IVec4 coeff;  // in original generator coordinates
};

// All nonzero coefficient vectors c in the box with c^T G c <= bound.  The
// Gram matrix arrives denominator-cleared (entries scale * G integral), so the
// inner loop is pure mpz arithmetic; returned norms carry the same scale.
std::vector<Candidate> enumerate_box(const IMat4& gint, const std::array<long, 4>& box,
                                     const Int& bound_scaled, const IMat4& map_back) {
    std::vector<Candidate> out;
    IVec4 c{};
    for (long c0 = -box[0]; c0 <= box[0]; ++c0) {
        c[0] = c0;
        Int p0 = gint[0][0] * c[0] * c[0];
        for (long c1 = -box[1]; c1 <= box[1]; ++c1) {
            c[1] = c1;
            Int p1 = p0 + gint[1][1] * c[1] * c[1] + 2 * gint[1][0] * c[0] * c[1];
            for (long c2 = -box[2]; c2 <= box[2]; ++c2) {
                c[2] = c2;
                Int p2 = p1 + gint[2][2] * c[2] * c[2] +
                         2 * (gint[2][0] * c[0] + gint[2][1] * c[1]) * c[2];
                for (long c3 = -box[3]; c3 <= box[3]; ++c3) {
                    if (c0 == 0 && c1 == 0 && c2 == 0 && c3 == 0) continue;
                    c[3] = c3;
                    Int nv = p2 + gint[3][3] * c[3] * c[3] +
                             2 * (gint[3][0] * c[0] + gint[3][1] * c[1] +
                                  gint[3][2] * c[2]) * c[3];
                    if (nv <= bound_scaled) out.push_back({nv, imat_apply(map_back, c)});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        int c = cmp(a.norm_scaled, b.norm_scaled);
        if (c != 0) return c < 0;
        return lex_less(a.coeff, b.coeff);
    });
    return out;
}

// Shared setup: LLL(3/4) pre-reduction, certified per-coordinate radii for
// vectors of squared norm <= bound, denominator clearing.
struct EnumPlan {
    IMat4 gint;
    Int scale;
    std::array<long, 4> box;
    long bound_radius;  // max of the radii, reported as search_bound
    IMat4 transform;    // reduced generator -> original coordinates
    QMat4 gram_reduced;
};

long isqrt_floor(const Rat& x) {
    if (x < 0) return 0;
    Int fl = floor_rat(x);
    Int r;
    mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
    if (!r.fits_slong_p())
        throw std::overflow_error("enumeration box radius out of range");
    return r.get_si();
}

EnumPlan plan_enumeration(const LllResult& pre, const Rat& bound, long box_override) {
    EnumPlan plan;
    plan.transform = pre.transform;
    plan.gram_reduced = pre.gram.g;
    QMat4 ginv = qmat_inverse(pre.gram.g);
    plan.bound_radius = 0;
    for (int i = 0; i < 4; ++i) {
        long r = box_override > 0 ? box_override : isqrt_floor(bound * ginv[i][i]);
        plan.box[i] = r;
        plan.bound_radius = std::max(plan.bound_radius, r);
    }
    Int lcm(1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                    plan.gram_reduced[i][j].get_den_mpz_t());
    plan.scale = lcm;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rat scaled = plan.gram_reduced[i][j] * Rat(lcm);
            plan.gint[i][j] = scaled.get_num();
        }
    return plan;
}

int rank_of(const std::vector<IVec4>& vecs) {
    std::vector<std::array<Rat, 4>> rows;
    for (const IVec4& v : vecs) {
        std::array<Rat, 4> row = {Rat(v[0]), Rat(v[1]), Rat(v[2]), Rat(v[3])};
        rows.push_back(row);
    }
    int rank = 0;
    for (int col = 0; col < 4 && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[pivot], rows[rank]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][col] == 0) continue;
            Rat factor = rows[r][col] / rows[rank][col];
            for (int j = col; j < 4; ++j) rows[r][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

LllResult lll_reduce_real(const RealGram& g, const Rat& delta) {
    if (delta <= Rat(1, 4) || delta > 1)
        throw BadDelta("Lovasz parameter must lie in (1/4, 1], got " + delta.get_str());
    if (!is_symmetric(g.g)) throw NotPositiveDefinite("Gram matrix is not symmetric");
    if (!positive_definite(g.g))
        throw NotPositiveDefinite("Gram matrix is not positive definite");
    LllResult res{g, imat_identity(), {}, 0};
    QMat4& G = res.gram.g;
    int k = 1;
    while (k < 4) {
        if (++res.iterations > kMaxLllIterations)
            throw IterationLimit("LLL exceeded the iteration cap");
        Gso gso = compute_gso(G);
        for (int j = k - 1; j >= 0; --j) {
            Int q = round_half_up(gso.mu[k][j]);
            if (q != 0) {
                gram_translate(G, res.transform, k, j, q);
                gso = compute_gso(G);
            }
        }
        if (gso.bstar[k] >= (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) * gso.bstar[k - 1]) {
            ++k;
        } else {
            gram_swap(G, res.transform, k);
            k = std::max(k - 1, 1);
        }
    }
    for (int i = 0; i < 4; ++i) res.norms[i] = G[i][i];
    return res;
}

RealMinima real_minima(const RealGram& g, long box_override) {
    // Pre-reduction bound: the reduced generators are independent, so every
    // successive minimum is at most the largest diagonal entry.
    LllResult pre = lll_reduce_real(g, Rat(3, 4));
    Rat bound = pre.gram.g[0][0];
    for (int i = 1; i < 4; ++i) bound = std::max(bound, pre.gram.g[i][i]);
    EnumPlan plan = plan_enumeration(pre, bound, box_override);
    Int bound_scaled = floor_rat(bound * Rat(plan.scale));
    std::vector<Candidate> cands =
        enumerate_box(plan.gint, plan.box, bound_scaled, plan.transform);
    RealMinima out;
    out.search_bound = plan.bound_radius;
    std::vector<IVec4> chosen;
    for (const Candidate& c : cands) {
        std::vector<IVec4> trial = chosen;
        trial.push_back(c.coeff);
        if (rank_of(trial) != static_cast<int>(trial.size())) continue;
        Rat value = Rat(c.norm_scaled) / Rat(plan.scale);
        value.canonicalize();
        out.minima[chosen.size()] = value;
        out.witnesses[chosen.size()] = c.coeff;
        chosen.push_back(c.coeff);
        if (chosen.size() == 4) break;
    }
    if (chosen.size() < 4)
        throw std::runtime_error("enumeration box too small to span the lattice");
    return out;
}

AlgMinima algebraic_minima(const AlgBasis& basis, long box_override) {
    const FieldDesc& f = basis.field;
    RealGram g = embed_real_gram(basis);
    LllResult pre = lll_reduce_real(g, Rat(3, 4));
    Rat bound(std::max(norm_sq(basis.b1), norm_sq(basis.b2)));
    EnumPlan plan = plan_enumeration(pre, bound, box_override);
    Int bound_scaled = floor_rat(bound * Rat(plan.scale));
    std::vector<Candidate> cands =
        enumerate_box(plan.gint, plan.box, bound_scaled, plan.transform);
    if (cands.empty())
        throw std::runtime_error("enumeration box too small to span the lattice");
    auto unscale = [&](const Int& norm_scaled) {
        Rat v = Rat(norm_scaled) / Rat(plan.scale);
        v.canonicalize();
        if (v.get_den() != 1)
            throw std::logic_error("embedded lattice norm is not an integer");
        return v.get_num();
    };
    AlgMinima out;
    const Candidate& first = cands.front();
    out.lambda1_sq = unscale(first.norm_scaled);
    out.witness1 = {RingElem{first.coeff[0], first.coeff[1]},
                    RingElem{first.coeff[2], first.coeff[3]}};
    out.search_bound = plan.bound_radius;
    for (const Candidate& c : cands) {
        RingElem q1{c.coeff[0], c.coeff[1]}, q2{c.coeff[2], c.coeff[3]};
        RingElem cross = sub(mul(out.witness1[0], q2, f), mul(out.witness1[1], q1, f));
        if (!is_zero(cross)) {
            out.lambda2_sq = unscale(c.norm_scaled);
            out.witness2 = {q1, q2};
            return out;
        }
    }
    throw std::runtime_error("enumeration box too small for the second minimum");
}

AuditReport optimality_audit(const AlgBasis& basis, long box_override) {
    AuditReport rep{gauss_reduce_algebraic(basis), {}, false};
    rep.minima = algebraic_minima(rep.reduction.basis, box_override);
    rep.optimal = norm_sq(rep.reduction.basis.b1) == rep.minima.lambda1_sq &&
                  norm_sq(rep.reduction.basis.b2) == rep.minima.lambda2_sq;
    return rep;
}

}  // namespace iqlat
