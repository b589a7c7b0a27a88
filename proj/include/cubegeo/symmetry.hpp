#pragma once

#include <string>
#include <vector>

#include "cubegeo/vec.hpp"

namespace cubegeo {

/// Hyperoctahedral symmetry of the unit cube [0,1]^n:
/// (g p)_i = flip[i] ? 1 - p[perm[i]] : p[perm[i]].
struct SignedPerm {
    std::vector<int> perm;
    std::vector<bool> flip;

    static SignedPerm identity(std::size_t n);
    Vec apply(const Vec& p) const;
    SignedPerm inverse() const;
    SignedPerm compose(const SignedPerm& inner) const; // this after inner
    bool is_identity() const;

    /// Lexicographic order on (perm, flip) for deterministic tie-breaking.
    friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
        if (a.perm != b.perm) return a.perm < b.perm;
        return a.flip < b.flip;
    }
    friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
        return a.perm == b.perm && a.flip == b.flip;
    }
    std::string to_string() const;
};

/// All 2^n n! elements, in lexicographic (perm, flip) order.
const std::vector<SignedPerm>& cube_symmetries(std::size_t n);

/// A source point in the fundamental domain of I^n's symmetries acting on
/// the boundary: coords = (a_0 >= a_1 >= ... >= a_{n-2}, 0) with all
/// a_i <= 1/2. For n = 4 this is the set Delta (0 <= c <= b <= a <= 1/2 on
/// facet S); for n = 3 the triangle 0 <= b <= a <= 1/2 on facet D.
/// witness maps the original surface point onto the reduced form.
struct DeltaPoint {
    std::vector<Rat> coords; // n-1 sorted coordinates
    SignedPerm witness;

    std::size_t n() const { return coords.size() + 1; }
    /// The reduced point as a surface point of I^n (last coordinate 0).
    Vec surface_point() const;
    const Rat& a() const { return coords.at(0); }
    const Rat& b() const { return coords.at(1); }
    const Rat& c() const { return coords.at(2); }
};

/// Construct a DeltaPoint directly from reduced coordinates (validated).
DeltaPoint make_delta(const std::vector<Rat>& coords);
inline DeltaPoint make_delta(const Rat& a, const Rat& b, const Rat& c) {
    return make_delta(std::vector<Rat>{a, b, c});
}

/// Reduce a boundary point to the fundamental domain; witness is the
/// lexicographically least group element achieving the reduction.
DeltaPoint reduce_to_fundamental(const Vec& p);

/// All group elements fixing p (used to close farthest sets under symmetry).
std::vector<SignedPerm> stabilizer(const Vec& p);

} // namespace cubegeo
