#pragma once

#include <optional>
#include <vector>

#include "cubegeo/vec.hpp"

namespace cubegeo {

/// Three-way predicate answer; "on" cases are first-class because region
/// boundaries (psi = 0) carry meaning downstream.
enum class Side { outside = -1, on = 0, inside = 1 };

/// Sign of the orientation determinant of d+1 points in dimension d (2 or 3).
/// 0 iff the points are affinely dependent.
int orient(const std::vector<Vec>& pts);

/// Exact determinant of a square rational matrix (rows).
Rat det(std::vector<std::vector<Rat>> m);

/// outcircle / outsphere determinants on planar (2D) / spatial (3D) points.
Rat outcircle(const Vec& p1, const Vec& p2, const Vec& p3, const Vec& p4);
Rat outsphere(const Vec& p1, const Vec& p2, const Vec& p3, const Vec& p4, const Vec& p5);

/// Where p4 lies relative to the circumcircle of p1,p2,p3, evaluated as the
/// orientation-independent sign of det(p1,p2,p3) * incircle(p1,p2,p3,p4).
/// Throws on a collinear base triple.
Side incircle_side(const Vec& p1, const Vec& p2, const Vec& p3, const Vec& p4);

/// Where p5 lies relative to the circumsphere of p1..p4 (3D analogue).
/// Throws on a coplanar base quadruple.
Side insphere_side(const Vec& p1, const Vec& p2, const Vec& p3, const Vec& p4, const Vec& p5);

/// Unique point exactly equidistant from d+1 affinely independent points in
/// dimension d. Throws std::invalid_argument on dependent input.
Vec circumcenter(const std::vector<Vec>& pts);

/// Solve A x = b exactly; nullopt when A is singular.
std::optional<Vec> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

/// Hyperplane {x : <normal, x> = offset}; normal must be nonzero.
struct Hyperplane {
    Vec normal;
    Rat offset;
    Hyperplane(Vec n, Rat off) : normal(std::move(n)), offset(std::move(off)) {
        if (sq_norm(normal).is_zero())
            throw std::invalid_argument("Hyperplane: zero normal");
    }
};

/// Reflection of p about h (involution, fixes h pointwise).
Vec reflect(const Hyperplane& h, const Vec& p);

} // namespace cubegeo
