#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubegeo/regions.hpp"

namespace cubegeo {

/// Sites sufficient for the farthest-point computation: the Voronoi domain
/// of p_U is probed only against these.
const std::vector<std::string>& backright_sites(); // 10 sites, U excluded

/// Triple of BackRight \ {U} labels naming the tetrahedron t(F1,F2,F3)
/// (with p_U implicit) whose circumcenter c(F1,F2,F3) is a candidate corner.
using SiteTriple = std::array<std::string, 3>;
std::string triple_name(const SiteTriple& t);

/// Circumcenter of {p_U, p_F1, p_F2, p_F3} in the chart of the goal facet.
/// Ten triples use the closed forms; the rest fall back to the generic
/// exact solver. `used_closed_form` reports which route was taken.
Vec closed_form_center(const SiteTriple& t, const DeltaPoint& p,
                       bool* used_closed_form = nullptr);

/// Generic route (always the exact solver).
Vec corner_center_generic(const SiteTriple& t, const DeltaPoint& p);

/// Corner lists v_k(U) per region.
const std::vector<SiteTriple>& corner_triples(Region r);

/// Corner set of p: the region's corner list; on boundary-flagged points the
/// union over all applicable regions, deduplicated by point.
struct CornerSet {
    RegionInfo region;
    std::vector<std::pair<SiteTriple, Vec>> corners;
};
CornerSet corner_set(const DeltaPoint& p);

/// Perpendicular-bisector height f_F(x,y) of p_U and p_F (graph z = f_F).
/// Throws on the degenerate configurations where the bisector is vertical
/// (a = c for UR/UBR, b = c for UB).
Rat bisector_height(const std::string& site, const Rat& x, const Rat& y, const DeltaPoint& p);

/// Whether the bisector of p_U and p_F is a graph over (x,y) at p.
bool bisector_is_graph(const std::string& site, const DeltaPoint& p);

/// Corner criterion: z0 equals the max of the bisector heights at (x0,y0),
/// i.e. the corner is a Voronoi vertex of the p_U domain. Evaluated via the
/// f_F where they are graphs and via exact squared-distance comparisons for
/// vertical bisectors; the two routes agree where both apply.
bool verify_corner(const DeltaPoint& p, const Vec& corner);

/// Exact f_max(x,y) over the sites with graph bisectors (throws if any
/// bisector is vertical at p; use verify_corner for the general route).
Rat f_max(const Rat& x, const Rat& y, const DeltaPoint& p);

} // namespace cubegeo
