#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubegeo/corners.hpp"

namespace cubegeo {

/// Farthest-point set with witnesses. Points are surface points of I^n in
/// ambient coordinates; sq_dist is the common exact squared intrinsic
/// distance from the source.
struct FarthestResult {
    std::vector<Vec> points;
    std::vector<SiteTriple> witnesses; // parallel to points (empty triple for 3-cube)
    Rat sq_dist;
    RegionInfo region; // classification of the (reduced) source, n = 4 only
};

/// Farthest points of p = (a,b,0) on the 3-cube (0 <= b <= a <= 1/2): the
/// closed-form circumcenter of p_F, p_R, p_B; at a = 1/2 the mirror point is
/// appended (the two coincide only at the facet center).
FarthestResult farthest_3cube(const Rat& a, const Rat& b);

/// Farthest points of p in Delta on the 4-cube: exact argmax of
/// |p_U - c|^2 over corner_set(p), verified against the piecewise-map
/// candidate table, with stabilizer copies appended for sources on the
/// a = 1/2 symmetry wall.
FarthestResult farthest_fundamental(const DeltaPoint& p);

/// Farthest points of an arbitrary boundary point (n = 3 or 4): reduce,
/// compute, transport back by the witness and close under the stabilizer.
FarthestResult farthest(const Vec& p);

/// The piecewise farthest-map candidate triples per region.
const std::vector<SiteTriple>& theorem_candidates(Region r);

/// iota: central symmetry (x -> 1-x per coordinate).
Vec iota(const Vec& p);

} // namespace cubegeo
