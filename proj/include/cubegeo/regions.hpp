#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cubegeo/psi.hpp"
#include "cubegeo/symmetry.hpp"

namespace cubegeo {

enum class Region { D11, D12, D21, D22A, D22B, D31, D32A, D32B, D33 };
std::string region_name(Region r);

/// Planar band classification of (a,c) in Delta0 = {0 <= c <= a <= 1/2}:
/// zone 1 = {psi1 >= 0}, zone 2 = {psi1 <= 0 <= psi2}, zone 3 = {psi2 <= 0}.
/// `zones` lists every band whose (weak) condition holds; vanishing psis are
/// flagged. Throws outside Delta0.
struct PlanarClass {
    std::vector<int> zones;
    bool psi1_zero = false;
    bool psi2_zero = false;
    Rat psi1_val, psi2_val;
};
PlanarClass classify_planar_right(const Rat& a, const Rat& c);

/// Left-side chart D1L..D5L. The sqrt(7) thresholds are decided by exact
/// sign tests of the squared forms. Returns all memberships (boundaries give
/// several) in the order D1L..D5L.
struct LeftClass {
    std::vector<std::string> regions;
    std::vector<std::string> zero_flags;
};
LeftClass classify_planar_left(const Rat& a, const Rat& c);

/// Exact sign of a - (-1+sqrt(7))/4 and of c - (3-sqrt(7))/4.
int cmp_a_sqrt7(const Rat& a);
int cmp_c_sqrt7(const Rat& c);

/// Full region classification of p in Delta. `applicable` holds every region
/// consistent with the weak sign conditions (several on boundaries), in the
/// canonical order D11..D33; `tag` is the first. Throws std::logic_error if
/// the signs land in the provably empty D13/D23 patterns.
struct RegionInfo {
    Region tag;
    std::vector<Region> applicable;
    std::vector<std::string> flags;
    std::vector<std::pair<std::string, Rat>> psi_values;
};
RegionInfo classify_delta(const DeltaPoint& p);

/// Delaunay triangle lists. Right side of [qU,qD] on sites {U,D,UR,R,RD};
/// left side on {U,D,UL,L,LD}; zone/list names follow the chart.
using Tri = std::array<std::string, 3>;
const std::vector<Tri>& planar_delaunay_triangles(int zone);
const std::vector<Tri>& left_delaunay_triangles(const std::string& region);

/// Spatial wall triangles asserted Delaunay in aff(G): per band of (a,c)
/// (sites U,D,UR,R,RD; "yb" family) or of (b,c) (sites U,D,UB,B,BD; "xa").
/// alpha_bc selects the sheared empty-sphere center translate.
struct WallSphere {
    Tri tri;
    bool alpha_bc;
};
const std::vector<WallSphere>& wall_spheres_yb(int zone);
const std::vector<WallSphere>& wall_spheres_xa(int zone);

/// Empty-sphere center for a wall triangle: circumcenter of the three source
/// images within their common plane, with the free coordinate set by the
/// alpha_b / alpha_{b,c} rule (mirrored for the xa family).
Vec wall_sphere_center(const DeltaPoint& p, const WallSphere& w, bool family_yb);

/// Circumcenter abscissae of triangle(qU,qD,qF) in the plane of W_{y=b}: the
/// varphi_F values whose ordering "varphi_UL, varphi_L, varphi_LD <= 1-a <=
/// varphi_UR, varphi_R, varphi_RD" proves the wall lemma.
Rat varphi(const std::string& site, const Rat& a, const Rat& c);

} // namespace cubegeo
