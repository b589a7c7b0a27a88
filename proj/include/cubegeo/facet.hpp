#pragma once

#include <string>
#include <vector>

#include "cubegeo/vec.hpp"

namespace cubegeo {

/// Facet of the n-cube I^n: {x_axis = side}. Rubik-style names:
/// axis 0 -> L/R, axis 1 -> F/B, axis 2 -> D/U, axis 3 -> S/G.
struct Facet {
    int axis = 0;
    int side = 0; // 0 or 1

    friend bool operator==(const Facet& a, const Facet& b) {
        return a.axis == b.axis && a.side == b.side;
    }
    friend bool operator!=(const Facet& a, const Facet& b) { return !(a == b); }
    friend bool operator<(const Facet& a, const Facet& b) {
        return a.axis != b.axis ? a.axis < b.axis : a.side < b.side;
    }
};

/// Adjacent iff not equal and not opposite.
inline bool adjacent(const Facet& a, const Facet& b) { return a.axis != b.axis; }

std::string facet_name(const Facet& f);
Facet facet_from_name(char ch);
Facet facet_from_name(const std::string& name);

/// All 2n facets of I^n.
std::vector<Facet> all_facets(std::size_t n);

/// All facets containing p (p must lie on the boundary of I^n: every
/// coordinate in [0,1], at least one of them 0 or 1). Throws otherwise.
std::vector<Facet> facets_of(const Vec& p);

inline bool on_boundary(const Vec& p) {
    bool extremal = false;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (p[i] < Rat(0) || p[i] > Rat(1)) return false;
        if (p[i] == Rat(0) || p[i] == Rat(1)) extremal = true;
    }
    return extremal;
}

/// Chart of aff(F): drop the fixed coordinate (the spec's fixed convention,
/// e.g. aff(G) ~ R^3 by dropping w).
Vec to_chart(const Facet& f, const Vec& p);
Vec from_chart(const Facet& f, const Vec& q);

} // namespace cubegeo
