#include "cubegeo/cells.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubegeo/predicates.hpp"

namespace cubegeo {

namespace {

std::vector<HalfSpace> with_cube_walls(std::vector<HalfSpace> hs) {
    for (int axis = 0; axis < 3; ++axis) {
        Vec n(3);
        n[axis] = Rat(1);
        hs.push_back(HalfSpace{n, Rat(1)}); // x_axis <= 1
        Vec m(3);
        m[axis] = Rat(-1);
        hs.push_back(HalfSpace{m, Rat(0)}); // -x_axis <= 0
    }
    return hs;
}

bool satisfies_all(const Vec& v, const std::vector<HalfSpace>& hs) {
    for (const HalfSpace& h : hs)
        if (dot(h.normal, v) > h.offset) return false;
    return true;
}

// cyclic order of coplanar points via 2D convex hull (monotone chain) in the
// projection along the normal's dominant axis
std::vector<std::size_t> face_cycle(const std::vector<Vec>& verts,
                                    const std::vector<std::size_t>& idx, const Vec& normal) {
    std::size_t drop = 0;
    Rat best = normal[0].abs();
    for (std::size_t i = 1; i < 3; ++i)
        if (normal[i].abs() > best) { best = normal[i].abs(); drop = i; }
    auto proj = [&](std::size_t vi) {
        Vec q(2);
        std::size_t k = 0;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != drop) q[k++] = verts[vi][i];
        return q;
    };
    std::vector<std::size_t> order = idx;
    std::sort(order.begin(), order.end(), [&](std::size_t u, std::size_t w) {
        Vec pu = proj(u), pw = proj(w);
        if (pu[0] != pw[0]) return pu[0] < pw[0];
        return pu[1] < pw[1];
    });
    auto cross = [&](std::size_t o, std::size_t u, std::size_t w) {
        Vec po = proj(o), pu = proj(u), pw = proj(w);
        return ((pu[0] - po[0]) * (pw[1] - po[1]) - (pu[1] - po[1]) * (pw[0] - po[0])).sign();
    };
    std::vector<std::size_t> hull;
    for (std::size_t vi : order) { // lower
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), vi) <= 0)
            hull.pop_back();
        hull.push_back(vi);
    }
    std::size_t lower = hull.size() + 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) { // upper
        while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
            hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();
    return hull;
}

} // namespace

ConvexPoly3 intersect_halfspaces(const std::vector<HalfSpace>& input) {
    std::vector<HalfSpace> hs = with_cube_walls(input);
    // dedupe parallel duplicates (identical constraints)
    std::vector<HalfSpace> uniq;
    for (const HalfSpace& h : hs) {
        bool dup = false;
        for (const HalfSpace& u : uniq) {
            // same halfspace up to positive scale?
            // cross of normals zero and same orientation and matching offset
            Rat c0 = h.normal[1] * u.normal[2] - h.normal[2] * u.normal[1];
            Rat c1 = h.normal[2] * u.normal[0] - h.normal[0] * u.normal[2];
            Rat c2 = h.normal[0] * u.normal[1] - h.normal[1] * u.normal[0];
            if (!c0.is_zero() || !c1.is_zero() || !c2.is_zero()) continue;
            if (dot(h.normal, u.normal).sign() <= 0) continue;
            // scale u to h: find nonzero coord
            Rat s;
            for (std::size_t i = 0; i < 3; ++i)
                if (!u.normal[i].is_zero()) { s = h.normal[i] / u.normal[i]; break; }
            if (h.offset == s * u.offset) { dup = true; break; }
        }
        if (!dup) uniq.push_back(h);
    }

    ConvexPoly3 poly;
    const std::size_t m = uniq.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                auto x = solve_linear({{uniq[i].normal[0], uniq[i].normal[1], uniq[i].normal[2]},
                                       {uniq[j].normal[0], uniq[j].normal[1], uniq[j].normal[2]},
                                       {uniq[k].normal[0], uniq[k].normal[1], uniq[k].normal[2]}},
                                      {uniq[i].offset, uniq[j].offset, uniq[k].offset});
                if (!x || !satisfies_all(*x, uniq)) continue;
                bool dup = false;
                for (const Vec& v : poly.verts)
                    if (v == *x) { dup = true; break; }
                if (!dup) poly.verts.push_back(*x);
            }
    if (poly.verts.size() < 4) {
        poly.verts.clear();
        return poly;
    }
    for (const HalfSpace& h : uniq) {
        std::vector<std::size_t> on;
        for (std::size_t vi = 0; vi < poly.verts.size(); ++vi)
            if (dot(h.normal, poly.verts[vi]) == h.offset) on.push_back(vi);
        if (on.size() >= 3) {
            auto cyc = face_cycle(poly.verts, on, h.normal);
            if (cyc.size() >= 3) poly.faces.push_back(std::move(cyc));
        }
    }
    if (poly.faces.size() < 4) { // flat or lower-dimensional
        poly.verts.clear();
        poly.faces.clear();
    }
    return poly;
}

Rat poly_volume(const ConvexPoly3& poly) {
    if (poly.empty()) return Rat(0);
    Vec centroid(3);
    for (const Vec& v : poly.verts) centroid = centroid + v;
    centroid = Rat(1, static_cast<long>(poly.verts.size())) * centroid;
    Rat six_vol;
    for (const auto& face : poly.faces) {
        // pyramid centroid-over-face, fanned from face[0]
        const Vec& v0 = poly.verts[face[0]];
        Rat acc;
        for (std::size_t i = 1; i + 1 < face.size(); ++i) {
            Vec e0 = poly.verts[face[i]] - v0;
            Vec e1 = poly.verts[face[i + 1]] - v0;
            Vec d = v0 - centroid;
            Rat trip = d[0] * (e0[1] * e1[2] - e0[2] * e1[1]) -
                       d[1] * (e0[0] * e1[2] - e0[2] * e1[0]) +
                       d[2] * (e0[0] * e1[1] - e0[1] * e1[0]);
            acc += trip;
        }
        six_vol += acc.abs();
    }
    return six_vol / Rat(6);
}

namespace {

Vec chart_of(const Facet& f, const Vec& ambient) { return to_chart(f, ambient); }

CellComplex cells_for_sites(const Facet& facet, const std::vector<SourceImage>& images) {
    CellComplex out;
    out.chart_facet = facet_name(facet);
    // group coincident sites (degenerate p can collapse images)
    std::vector<std::pair<Vec, std::vector<std::string>>> sites;
    for (const SourceImage& img : images) {
        Vec s = chart_of(facet, img.point);
        bool merged = false;
        for (auto& [pt, labels] : sites)
            if (pt == s) {
                labels.push_back(img.label);
                merged = true;
                break;
            }
        if (!merged) sites.push_back({s, {img.label}});
    }
    for (std::size_t i = 0; i < sites.size(); ++i) {
        std::vector<HalfSpace> hs;
        for (std::size_t j = 0; j < sites.size(); ++j) {
            if (j == i) continue;
            // |w - s_i|^2 <= |w - s_j|^2  <=>  2(s_j - s_i).w <= |s_j|^2 - |s_i|^2
            Vec n = Rat(2) * (sites[j].first - sites[i].first);
            hs.push_back(HalfSpace{n, sq_norm(sites[j].first) - sq_norm(sites[i].first)});
        }
        ConvexPoly3 poly = intersect_halfspaces(hs);
        if (poly.empty()) continue;
        Rat vol = poly_volume(poly);
        if (vol.is_zero()) continue;
        out.cells.push_back(Cell{facet_name(facet), sites[i].second, std::move(poly), vol});
    }
    return out;
}

} // namespace

CellComplex voronoi_cells_on_facet(const DeltaPoint& p, const Facet& facet) {
    auto srcs = src_all_facets(p);
    return cells_for_sites(facet, srcs.at(facet_name(facet)));
}

CellComplex source_unfolding(const DeltaPoint& p) {
    CellComplex out;
    const Facet S = facet_from_name('S');
    out.chart_facet = "S";
    auto srcs = src_all_facets(p);
    for (const Facet& f : all_facets(4)) {
        CellComplex per_facet = cells_for_sites(f, srcs.at(facet_name(f)));
        for (Cell& cell : per_facet.cells) {
            // carry the cell back into aff(S) by the inverse composite
            // unfolding of its (first) label
            const std::string& label = cell.labels.front();
            AffineIso inv = (f == S && label.empty())
                                ? AffineIso::identity(4)
                                : unfold_seq(label_sequence(4, f, label), 4).inverse();
            for (Vec& v : cell.poly.verts) {
                Vec ambient = from_chart(f, v);
                v = to_chart(S, inv.apply(ambient));
            }
            cell.volume = poly_volume(cell.poly);
            out.cells.push_back(std::move(cell));
        }
    }
    return out;
}

Rat Polygon2::area() const {
    Rat twice;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const Vec& u = verts[i];
        const Vec& w = verts[(i + 1) % verts.size()];
        twice += u[0] * w[1] - w[0] * u[1];
    }
    return twice.abs() / Rat(2);
}

Polygon2 star_unfolding_3cube(const Rat& a, const Rat& b) {
    if (b < Rat(0) || a < b || a > Rat(1, 2))
        throw std::invalid_argument("star_unfolding_3cube: need 0 <= b <= a <= 1/2");
    const Rat one(1), two(2), three(3);
    // source images interleaved with unfolded cube-vertex images, CCW
    std::vector<Vec> raw = {
        Vec{one, one},            // image of top vertex (1,1,1)
        Vec{two - b, three - a},  // p_BR
        Vec{one, two},            // bottom vertex (1,1,0)
        Vec{a, three - b},        // p_B
        Vec{Rat(0), two},         // bottom vertex (0,1,0)
        Vec{b - one, two + a},    // p_BL
        Vec{Rat(0), one},         // top vertex (0,1,1)
        Vec{-one - a, b},         // p_L
        Vec{-one, Rat(0)},        // bottom vertex (0,0,0)
        Vec{-one - b, -a},        // p_LF
        Vec{Rat(0), Rat(0)},      // top vertex (0,0,1)
        Vec{a, -one - b},         // p_F
        Vec{one, Rat(0)},         // top vertex (1,0,1)
        Vec{two + b, a - one},    // p_RF
        Vec{two, Rat(0)},         // bottom vertex (1,0,0)
        Vec{three - a, b},        // p_R
    };
    Polygon2 poly;
    for (const Vec& v : raw)
        if (poly.verts.empty() || poly.verts.back() != v) poly.verts.push_back(v);
    if (poly.verts.size() > 1 && poly.verts.front() == poly.verts.back()) poly.verts.pop_back();
    return poly;
}

} // namespace cubegeo
