#pragma once

#include <map>
#include <string>
#include <vector>

#include "cubegeo/facet.hpp"
#include "cubegeo/symmetry.hpp"
#include "cubegeo/unfold.hpp"

namespace cubegeo {

/// A source image: the source point carried into aff(goal facet) by the
/// composite unfolding named by `label` (facet letters between goal and
/// source, e.g. "BRD" for the sequence goal,B,R,D,source).
struct SourceImage {
    std::string label;
    Vec point; // ambient n-dim coordinates, in aff(target facet)
};

/// Label lists per facet. For n = 4 these are the fixed sets of the source
/// decomposition with sizes (S,D,F,L,R,B,U,G) = (1,1,2,4,4,6,9,26); for
/// n = 3 only the top facet U has a curated list (8 labels).
const std::vector<std::string>& src_labels(std::size_t n, const Facet& facet);

/// The 26 labels of the goal facet in their canonical order.
const std::vector<std::string>& goal_labels_4();

/// Facet sequence for a label: (target, letters..., source facet).
UnfoldSeq label_sequence(std::size_t n, const Facet& target, const std::string& label);

/// The 8 source images of p = (a,b) on the 3-cube, in aff(U), by closed form.
std::vector<SourceImage> source_images_3cube(const Rat& a, const Rat& b);

/// The 26 source images of p in Delta, in aff(G), by closed form.
std::vector<SourceImage> source_images_4cube(const DeltaPoint& p);

/// Source sets for every facet of I^4 (computed via composite unfoldings).
std::map<std::string, std::vector<SourceImage>> src_all_facets(const DeltaPoint& p);

/// Single source image computed through the unfolding machinery (any facet).
SourceImage source_image_via_unfolding(std::size_t n, const Facet& target,
                                       const std::string& label, const Vec& surface_point);

} // namespace cubegeo
