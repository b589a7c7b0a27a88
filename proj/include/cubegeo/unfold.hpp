#pragma once

#include <vector>

#include "cubegeo/facet.hpp"
#include "cubegeo/vec.hpp"

namespace cubegeo {

/// Exact affine isometry x -> A x + t. All maps arising from cube unfoldings
/// have signed-permutation linear parts, but A is stored as a full rational
/// matrix for uniform composition/inversion.
class AffineIso {
public:
    static AffineIso identity(std::size_t n);
    Vec apply(const Vec& p) const;
    AffineIso compose(const AffineIso& inner) const; // this after inner
    AffineIso inverse() const;
    std::size_t dim() const { return t_.dim(); }

    AffineIso(std::vector<std::vector<Rat>> a, Vec t) : a_(std::move(a)), t_(std::move(t)) {}

private:
    std::vector<std::vector<Rat>> a_;
    Vec t_;
};

/// Unfolding isometry aff(source) -> aff(target) for adjacent facets:
/// an isometry, the identity on target∩source, mapping source off target.
/// Throws on a non-adjacent pair.
AffineIso unfold_step(const Facet& target, const Facet& source, std::size_t n);

/// Ordered facet sequence with adjacent consecutive members and no immediate
/// repetition; unfold_seq composes the steps, mapping aff(back) -> aff(front).
struct UnfoldSeq {
    std::vector<Facet> facets;
    explicit UnfoldSeq(std::vector<Facet> fs);
};

AffineIso unfold_seq(const UnfoldSeq& seq, std::size_t n);

/// The axis-aligned (n-2)-box shared by two adjacent facets, as lo/hi bounds.
struct Box {
    std::vector<Rat> lo, hi;
};
Box shared_face(const Facet& a, const Facet& b, std::size_t n);

} // namespace cubegeo
