#include "cubegeo/metrics.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "cubegeo/distance.hpp"
#include "cubegeo/oracle.hpp"

namespace cubegeo {

RadiusReport radius_diameter_exact(std::size_t n) {
    RadiusReport rep;
    rep.n = n;
    rep.exact = true;
    if (n == 2) {
        // boundary of the unit square: a closed curve of length 4; the
        // farthest point of any point is antipodal along the curve
        rep.radius_sq = Rat(4);
        rep.diameter_sq = Rat(4);
        rep.radius_witness = "(1/2,0) -> (1/2,1)";
        rep.diameter_witness = "(0,0) -> (1,1)";
    } else if (n == 3) {
        FarthestResult fc = farthest_3cube(Rat(1, 2), Rat(1, 2));
        rep.radius_sq = fc.sq_dist;
        rep.diameter_sq = dist_to_top_3cube(Rat(0), Rat(0), Vec{Rat(1), Rat(1)}).sq_dist;
        rep.radius_witness = "(1/2,1/2,0) -> (1/2,1/2,1)";
        rep.diameter_witness = "(0,0,0) -> (1,1,1)";
    } else if (n == 4) {
        DeltaPoint center = make_delta(Rat(1, 2), Rat(1, 2), Rat(1, 2));
        rep.radius_sq = farthest_fundamental(center).sq_dist;
        DeltaPoint corner = make_delta(Rat(0), Rat(0), Rat(0));
        rep.diameter_sq = dist_on_surface(corner, Vec{Rat(1), Rat(1), Rat(1), Rat(1)}).sq_dist;
        rep.radius_witness = "(1/2,1/2,1/2,0) -> (1/2,1/2,1/2,1)";
        rep.diameter_witness = "(0,0,0,0) -> (1,1,1,1)";
    } else {
        throw std::invalid_argument("radius_diameter_exact: n must be 2, 3 or 4");
    }
    rep.ratio = std::sqrt(rep.radius_sq.to_double() / rep.diameter_sq.to_double());
    return rep;
}

namespace {

Vec random_boundary_point(std::size_t n, unsigned den, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> coord(0, den);
    std::uniform_int_distribution<std::size_t> axis(0, n - 1);
    std::uniform_int_distribution<int> side(0, 1);
    Vec p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = Rat(coord(rng), den);
    p[axis(rng)] = Rat(side(rng));
    return p;
}

// clamp a point onto [0,1]^n coordinates
void clamp_unit(Vec& v) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (v[i] < Rat(0)) v[i] = Rat(0);
        if (v[i] > Rat(1)) v[i] = Rat(1);
    }
}

} // namespace

RadiusReport estimate_ratio_sampling(std::size_t n, std::size_t samples, std::uint64_t seed,
                                     std::size_t max_len) {
    if (n < 2) throw std::invalid_argument("estimate_ratio_sampling: n >= 2");
    RadiusReport rep;
    rep.n = n;
    rep.exact = false;
    rep.samples = samples;
    if (max_len == 0) max_len = n + 1;
    OracleOptions opts;
    opts.max_len = max_len;
    rep.ratio_eq18 = 2.0 / std::sqrt(double(n) + 2.0);
    rep.ratio_corner = (std::sqrt(double(n) + 7.0) / 2.0) / std::sqrt(double(n) + 2.0);

    std::mt19937_64 rng(seed);
    std::size_t calls = 0;
    double diam = 0.0;
    auto dist = [&](const Vec& p, const Vec& q) {
        OracleResult r = oracle_distance(p, q, opts);
        if (r.node_capped) rep.saturated = false;
        ++calls;
        double d = std::sqrt(r.sq_dist.to_double());
        diam = std::max(diam, d);
        return d;
    };

    // coordinate-ascent sup_q d(p, q) started from iota(p), moving q within
    // its facet on a refining dyadic grid
    auto local_sup = [&](const Vec& p) {
        Vec q = iota(p);
        clamp_unit(q);
        int fixed = -1;
        for (std::size_t i = 0; i < n; ++i)
            if (q[i] == Rat(0) || q[i] == Rat(1)) fixed = static_cast<int>(i);
        double best = dist(p, q);
        for (unsigned denom = 4; denom <= 256; denom *= 2) {
            bool improved = true;
            while (improved) {
                improved = false;
                for (std::size_t i = 0; i < n; ++i) {
                    if (static_cast<int>(i) == fixed) continue;
                    for (int dir : {-1, 1}) {
                        Vec q2 = q;
                        q2[i] += Rat(dir, denom);
                        if (q2[i] < Rat(0) || q2[i] > Rat(1)) continue;
                        double d = dist(p, q2);
                        if (d > best) {
                            best = d;
                            q = q2;
                            improved = true;
                        }
                    }
                }
            }
        }
        return best;
    };

    // anchor source: the facet center (the paper's radius witness for n <= 9)
    Vec facet_center(n), corner0(n), corner1(n);
    for (std::size_t i = 0; i < n; ++i) {
        facet_center[i] = Rat(1, 2);
        corner0[i] = Rat(0);
        corner1[i] = Rat(1);
    }
    facet_center[n - 1] = Rat(0);

    dist(corner0, corner1); // seeds the diameter bound at sqrt(n+2)
    double radius_est = local_sup(facet_center);
    dist(facet_center, corner1); // the n >= 10 competitor pair, sqrt(n+7)/2

    while (calls < samples) {
        Vec p = random_boundary_point(n, 16, rng);
        radius_est = std::min(radius_est, local_sup(p));
    }
    rep.radius_est = radius_est;
    rep.diameter_est = diam;
    rep.ratio = radius_est / diam;
    return rep;
}

std::vector<FieldRow> farthest_distance_field(std::size_t n, unsigned grid_den) {
    std::vector<FieldRow> rows;
    if (n == 3) {
        for (unsigned ia = 0; 2 * ia <= grid_den; ++ia)
            for (unsigned ib = 0; ib <= ia; ++ib) {
                Rat a(ia, grid_den), b(ib, grid_den);
                rows.push_back(FieldRow{{a, b}, farthest_3cube(a, b).sq_dist});
            }
        return rows;
    }
    if (n == 4) {
        for (unsigned ia = 0; 2 * ia <= grid_den; ++ia)
            for (unsigned ib = 0; ib <= ia; ++ib)
                for (unsigned ic = 0; ic <= ib; ++ic) {
                    Rat a(ia, grid_den), b(ib, grid_den), c(ic, grid_den);
                    rows.push_back(
                        FieldRow{{a, b, c}, farthest_fundamental(make_delta(a, b, c)).sq_dist});
                }
        return rows;
    }
    throw std::invalid_argument("farthest_distance_field: n must be 3 or 4");
}

} // namespace cubegeo
