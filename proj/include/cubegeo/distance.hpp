#pragma once

#include <string>
#include <vector>

#include "cubegeo/source_images.hpp"
#include "cubegeo/symmetry.hpp"

namespace cubegeo {

struct DistResult {
    Rat sq_dist;
    std::vector<std::string> argmin_labels;
};

/// Intrinsic squared distance from p (in the fundamental domain) to q given
/// in the chart of the goal facet (q in [0,1]^3): min over the 26 source
/// images. Exact; also reports every label attaining the min.
DistResult dist_to_goal(const DeltaPoint& p, const Vec& q_chart);

/// Same via the facet containing q (any q on the boundary of I^4, ambient
/// coordinates). When q lies on several facets the values must agree; this
/// is asserted.
DistResult dist_on_surface(const DeltaPoint& p, const Vec& q);

/// Intrinsic squared distance between two arbitrary boundary points of I^n
/// (n = 3 or 4), via symmetry reduction of p.
Rat surface_distance_sq(const Vec& p, const Vec& q);

/// 3-cube: squared distance from reduced p=(a,b) to q in the chart of U.
DistResult dist_to_top_3cube(const Rat& a, const Rat& b, const Vec& q_chart);

} // namespace cubegeo
