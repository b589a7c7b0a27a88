#include "cubegeo/unfold.hpp"

#include <stdexcept>

namespace cubegeo {

AffineIso AffineIso::identity(std::size_t n) {
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = Rat(1);
    return AffineIso(std::move(a), Vec(n));
}

Vec AffineIso::apply(const Vec& p) const {
    const std::size_t n = dim();
    if (p.dim() != n) throw std::invalid_argument("AffineIso: dimension mismatch");
    Vec q(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat s = t_[i];
        for (std::size_t j = 0; j < n; ++j)
            if (!a_[i][j].is_zero()) s += a_[i][j] * p[j];
        q[i] = s;
    }
    return q;
}

AffineIso AffineIso::compose(const AffineIso& inner) const {
    const std::size_t n = dim();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat s;
            for (std::size_t k = 0; k < n; ++k)
                if (!a_[i][k].is_zero() && !inner.a_[k][j].is_zero()) s += a_[i][k] * inner.a_[k][j];
            a[i][j] = s;
        }
    return AffineIso(std::move(a), apply(inner.t_));
}

AffineIso AffineIso::inverse() const {
    // A is orthogonal with rational entries (signed permutation), so the
    // inverse linear part is the transpose; t' = -A^T t.
    const std::size_t n = dim();
    std::vector<std::vector<Rat>> at(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) at[i][j] = a_[j][i];
    Vec t2(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat s;
        for (std::size_t j = 0; j < n; ++j)
            if (!at[i][j].is_zero()) s += at[i][j] * t_[j];
        t2[i] = -s;
    }
    return AffineIso(std::move(at), std::move(t2));
}

AffineIso unfold_step(const Facet& target, const Facet& source, std::size_t n) {
    if (!adjacent(target, source))
        throw std::invalid_argument("unfold_step: facets " + facet_name(target) + "," +
                                    facet_name(source) + " not adjacent");
    const int i = target.axis, j = source.axis;
    const Rat vi(target.side), vj(source.side);
    // q_i = v_i ; q_j = v_j + eps (p_i - v_i) ; q_k = p_k, with eps chosen so
    // the image of the source facet lies outside the cube.
    const Rat eps(target.side == source.side ? -1 : 1);
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    Vec t(n);
    for (std::size_t k = 0; k < n; ++k) a[k][k] = Rat(1);
    for (std::size_t k = 0; k < n; ++k) a[i][k] = Rat(0);
    t[i] = vi;
    for (std::size_t k = 0; k < n; ++k) a[j][k] = Rat(0);
    a[j][i] = eps;
    t[j] = vj - eps * vi;
    return AffineIso(std::move(a), std::move(t));
}

UnfoldSeq::UnfoldSeq(std::vector<Facet> fs) : facets(std::move(fs)) {
    if (facets.empty()) throw std::invalid_argument("UnfoldSeq: empty sequence");
    for (std::size_t k = 0; k + 1 < facets.size(); ++k) {
        if (facets[k] == facets[k + 1])
            throw std::invalid_argument("UnfoldSeq: immediate repetition");
        if (!adjacent(facets[k], facets[k + 1]))
            throw std::invalid_argument("UnfoldSeq: non-adjacent consecutive facets");
    }
}

AffineIso unfold_seq(const UnfoldSeq& seq, std::size_t n) {
    // phi_L = phi_{F1,F2} o ... o phi_{F_{l-1},F_l}: the step nearest the end
    // of the sequence is applied first.
    AffineIso iso = AffineIso::identity(n);
    for (std::size_t k = 1; k < seq.facets.size(); ++k)
        iso = iso.compose(unfold_step(seq.facets[k - 1], seq.facets[k], n));
    return iso;
}

Box shared_face(const Facet& a, const Facet& b, std::size_t n) {
    if (!adjacent(a, b)) throw std::invalid_argument("shared_face: not adjacent");
    Box box;
    box.lo.assign(n, Rat(0));
    box.hi.assign(n, Rat(1));
    box.lo[a.axis] = box.hi[a.axis] = Rat(a.side);
    box.lo[b.axis] = box.hi[b.axis] = Rat(b.side);
    return box;
}

} // namespace cubegeo
