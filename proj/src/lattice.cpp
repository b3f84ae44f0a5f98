#include "iqlat/lattice.hpp"

namespace iqlat {

namespace {

void require_compatible(const AlgVector& u, const AlgVector& v) {
    if (u.field.d != v.field.d)
        throw DimensionMismatch("vectors lie over different fields (d=" +
                                std::to_string(u.field.d) + " vs d=" +
                                std::to_string(v.field.d) + ")");
    if (u.entries.size() != v.entries.size())
        throw DimensionMismatch("vector lengths differ (" +
                                std::to_string(u.entries.size()) + " vs " +
                                std::to_string(v.entries.size()) + ")");
}

}  // namespace

bool operator==(const AlgVector& u, const AlgVector& v) {
    return u.field.d == v.field.d && u.entries == v.entries;
}

bool is_zero(const AlgVector& v) {
    for (const RingElem& e : v.entries)
        if (!is_zero(e)) return false;
    return true;
}

AlgVector add(const AlgVector& u, const AlgVector& v) {
    require_compatible(u, v);
    AlgVector out{u.field, {}};
    out.entries.reserve(u.entries.size());
    for (size_t i = 0; i < u.entries.size(); ++i)
        out.entries.push_back(add(u.entries[i], v.entries[i]));
    return out;
}

AlgVector sub(const AlgVector& u, const AlgVector& v) {
    require_compatible(u, v);
    AlgVector out{u.field, {}};
    out.entries.reserve(u.entries.size());
    for (size_t i = 0; i < u.entries.size(); ++i)
        out.entries.push_back(sub(u.entries[i], v.entries[i]));
    return out;
}

AlgVector scale(const RingElem& c, const AlgVector& v) {
    AlgVector out{v.field, {}};
    out.entries.reserve(v.entries.size());
    for (const RingElem& e : v.entries) out.entries.push_back(mul(c, e, v.field));
    return out;
}

RingElem inner_product(const AlgVector& u, const AlgVector& v) {
    require_compatible(u, v);
    RingElem total{0, 0};
    for (size_t i = 0; i < u.entries.size(); ++i)
        total = add(total, mul(conj(u.entries[i], u.field), v.entries[i], u.field));
    return total;
}

Int norm_sq(const AlgVector& v) {
    Int total(0);
    for (const RingElem& e : v.entries) total += alg_norm(e, v.field);
    return total;
}

FieldElem mu_coefficient(const AlgVector& b1, const AlgVector& b2) {
    if (is_zero(b1)) throw ZeroVector("mu coefficient of a zero vector");
    RingElem ip = inner_product(b1, b2);
    Rat n(norm_sq(b1));
    return {Rat(ip.a) / n, Rat(ip.b) / n};
}

bool is_independent(const AlgVector& u, const AlgVector& v) {
    require_compatible(u, v);
    Int cs = norm_sq(u) * norm_sq(v) - alg_norm(inner_product(u, v), u.field);
    return cs > 0;
}

AlgBasis make_basis(const AlgVector& b1, const AlgVector& b2) {
    require_compatible(b1, b2);
    if (b1.entries.empty()) throw DimensionMismatch("basis vectors must be nonempty");
    if (!is_independent(b1, b2))
        throw DependentBasis("basis vectors are linearly dependent over K");
    return {b1.field, b1, b2};
}

RealGram embed_real_gram(const AlgBasis& basis) {
    const FieldDesc& f = basis.field;
    RingElem xi{0, 1};
    std::array<AlgVector, 4> gens = {basis.b1, scale(xi, basis.b1), basis.b2,
                                     scale(xi, basis.b2)};
    RealGram gram;
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
            gram.g[j][k] = real_part(to_field(inner_product(gens[j], gens[k])), f);
    return gram;
}

}  // namespace iqlat
