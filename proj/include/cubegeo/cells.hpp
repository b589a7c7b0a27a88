#pragma once

#include <string>
#include <vector>

#include "cubegeo/source_images.hpp"

namespace cubegeo {

/// Convex polytope in R^3 as exact vertices plus faces (each face a cyclic
/// vertex-index list). Built by exact halfspace intersection.
struct ConvexPoly3 {
    std::vector<Vec> verts;
    std::vector<std::vector<std::size_t>> faces;
    bool empty() const { return verts.size() < 4; }
};

struct HalfSpace {
    Vec normal; // {x : <normal,x> <= offset}
    Rat offset;
};

/// Intersect halfspaces with the unit cube [0,1]^3 by exact triple-plane
/// vertex enumeration; faces reconstructed per supporting plane.
ConvexPoly3 intersect_halfspaces(const std::vector<HalfSpace>& hs);

/// Exact volume (0 for empty/degenerate).
Rat poly_volume(const ConvexPoly3& poly);

/// One Voronoi cell of a source decomposition.
struct Cell {
    std::string facet;               // facet whose source set owns the cell
    std::vector<std::string> labels; // merged labels when sites coincide
    ConvexPoly3 poly;                // in the chart of `chart_facet`
    Rat volume;
};

struct CellComplex {
    std::string chart_facet; // facet whose affine hull hosts the complex
    std::vector<Cell> cells; // empty cells omitted
};

/// Voronoi cells of src(F) restricted to facet F, in F's chart.
CellComplex voronoi_cells_on_facet(const DeltaPoint& p, const Facet& facet);

/// Source unfolding of the 4-cube: every per-facet cell carried into aff(S)
/// by the inverse composite unfolding. Total volume 8.
CellComplex source_unfolding(const DeltaPoint& p);

/// Star unfolding polygon of the 3-cube in aff(U): the 8 source images
/// interleaved with the 8 unfolded cube-vertex images (consecutive
/// duplicates collapsed for degenerate p). Exact area 6.
struct Polygon2 {
    std::vector<Vec> verts; // 2D chart coordinates, counterclockwise
    Rat area() const;
};
Polygon2 star_unfolding_3cube(const Rat& a, const Rat& b);

} // namespace cubegeo
