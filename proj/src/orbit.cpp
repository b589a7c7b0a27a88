#include "cubegeo/orbit.hpp"

#include <cmath>
#include <stdexcept>

#include "cubegeo/facet.hpp"

namespace cubegeo {

namespace {

// one exact step of iota∘f from reduced coordinates; multi-valued selection:
// lexicographically least Delta-reduced image
DeltaPoint step_once(const DeltaPoint& p, std::string* region_tag) {
    FarthestResult fr = farthest_fundamental(p);
    if (region_tag) *region_tag = region_name(fr.region.tag);
    bool first = true;
    DeltaPoint best;
    for (const Vec& q : fr.points) {
        DeltaPoint cand = reduce_to_fundamental(iota(q));
        if (first || std::lexicographical_compare(
                         cand.coords.begin(), cand.coords.end(), best.coords.begin(),
                         best.coords.end(), [](const Rat& x, const Rat& y) { return x < y; })) {
            best = cand;
            first = false;
        }
    }
    return best;
}

std::vector<Rat> snap_coords(const std::vector<Rat>& c, unsigned bits) {
    std::vector<Rat> out;
    out.reserve(c.size());
    for (const Rat& x : c) out.push_back(x.snap_to_pow2(bits));
    // snapping can break the descending order by one ulp; restore it
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] > out[i - 1]) out[i] = out[i - 1];
    for (auto& x : out) {
        if (x < Rat(0)) x = Rat(0);
        if (x > Rat(1, 2)) x = Rat(1, 2);
    }
    return out;
}

bool on_diagonal(const DeltaPoint& p) {
    return p.coords[0] == p.coords[1] && p.coords[1] == p.coords[2];
}

} // namespace

Orbit iterate_orbit(const Vec& start, const OrbitOptions& opts) {
    if (start.dim() != 4) throw std::invalid_argument("iterate_orbit: 4-cube only");
    Orbit orbit;
    DeltaPoint cur = reduce_to_fundamental(start);
    orbit.witness = cur.witness;

    auto push = [&orbit](const DeltaPoint& p, const std::string& tag, bool exact) {
        orbit.steps.push_back(OrbitStep{p.coords, tag, exact});
    };

    std::string tag0 = region_name(classify_delta(cur).tag);
    push(cur, tag0, true);

    for (std::size_t step = 0; step < opts.max_steps; ++step) {
        const bool exact_phase = step < opts.exact_steps;
        if (on_diagonal(cur)) {
            orbit.limit = cur.surface_point();
            orbit.limit_exact = exact_phase;
            orbit.resolution = "fixed-point";
            break;
        }
        RegionInfo info = classify_delta(cur);
        if (info.tag == Region::D11 && info.applicable.size() == 1) {
            // Delta11 is forward invariant with c preserved: the iterates
            // contract onto (c,c,c,0)
            const Rat& c = cur.c();
            orbit.limit = Vec{c, c, c, Rat(0)};
            orbit.limit_exact = exact_phase;
            orbit.resolution = "delta11";
            break;
        }
        std::string tag;
        DeltaPoint next = step_once(cur, &tag);
        if (!exact_phase) next.coords = snap_coords(next.coords, opts.snap_bits);
        bool converged = true;
        for (std::size_t i = 0; i < 3; ++i) {
            double d = std::abs((next.coords[i] - cur.coords[i]).to_double());
            if (d >= opts.tol) converged = false;
        }
        push(next, region_name(classify_delta(next).tag), exact_phase);
        if (exact_phase) orbit.exact_prefix_len = step + 1;
        cur = next;
        if (converged) {
            orbit.limit = cur.surface_point();
            orbit.limit_exact = false;
            orbit.resolution = "converged";
            break;
        }
    }
    if (!orbit.limit) orbit.resolution = "unresolved";
    return orbit;
}

std::optional<Vec> orbit_limit_original_frame(const Orbit& o) {
    if (!o.limit) return std::nullopt;
    return o.witness.inverse().apply(*o.limit);
}

BlowupCoords blowup_coords(const DeltaPoint& p) {
    BlowupCoords out;
    const Rat &a = p.a(), &b = p.b(), &c = p.c();
    if (!c.is_zero()) {
        out.r_xz = a / c;
        out.r_2 = (a - c) / (c * c);
        out.r_yz = b / c;
    }
    return out;
}

DescentReport check_descent(const DeltaPoint& p, const std::string& window) {
    DescentReport rep;
    rep.window = window;
    RegionInfo info = classify_delta(p);
    BlowupCoords bc = blowup_coords(p);
    if (!bc.r_xz) {
        rep.detail = "c = 0, blow-up coordinates undefined";
        return rep;
    }
    FarthestResult fr = farthest_fundamental(p);

    auto only_witness = [&fr](const SiteTriple& t) {
        return fr.points.size() == 1 && fr.witnesses.size() == 1 && fr.witnesses[0] == t;
    };
    auto iq_reduced = [&fr]() { return reduce_to_fundamental(iota(fr.points[0])); };

    if (window == "rxz_drop" || window == "r2_drop") {
        const bool in_region = info.tag == Region::D21 || info.tag == Region::D22A;
        if (!in_region || !only_witness(SiteTriple{"B", "RD", "R"})) {
            rep.detail = "outside D21/D22A small-|p| window (farthest not c(B,RD,R))";
            return rep;
        }
        if (window == "rxz_drop" && *bc.r_xz <= Rat(3)) {
            rep.detail = "r_xz <= 3";
            return rep;
        }
        if (window == "r2_drop" && *bc.r_xz >= Rat(3535, 1000)) {
            rep.detail = "r_xz >= 3.535";
            return rep;
        }
        rep.window_met = true;
        DeltaPoint iq = iq_reduced();
        BlowupCoords bq = blowup_coords(iq);
        if (!bq.r_xz) {
            rep.holds = false;
            rep.detail = "image hit c = 0";
            return rep;
        }
        if (window == "rxz_drop") {
            rep.holds = (*bq.r_xz < *bc.r_xz - Rat(1));
            rep.detail = "r_xz " + bc.r_xz->to_string() + " -> " + bq.r_xz->to_string();
        } else {
            bool h1 = (*bq.r_xz < *bc.r_xz);
            bool h2 = (*bc.r_2 > Rat(6));
            bool h3 = (*bq.r_2 < *bc.r_2 - Rat(4));
            rep.holds = h1 && h2 && h3;
            rep.detail = "r_xz " + bc.r_xz->to_string() + " -> " + bq.r_xz->to_string() +
                         ", r_2 " + bc.r_2->to_string() + " -> " + bq.r_2->to_string();
        }
        return rep;
    }
    if (window == "d31_identity") {
        const bool in_region = info.tag == Region::D31 || info.tag == Region::D32A;
        if (!in_region || !only_witness(SiteTriple{"B", "RD", "UR"})) {
            rep.detail = "outside D31/D32A small-|p| window (farthest not c(B,RD,UR))";
            return rep;
        }
        rep.window_met = true;
        DeltaPoint iq = iq_reduced();
        BlowupCoords bq = blowup_coords(iq);
        const Rat &a = p.a(), &c = p.c();
        Rat lhs = *bq.r_xz - *bc.r_xz + Rat(1);
        Rat rhs = -(a - Rat(3) * c) * (a - c) / (Rat(2) * c * (Rat(1) - c));
        rep.holds = (*bc.r_xz > Rat(4)) && (lhs == rhs) && (lhs.sign() < 0);
        rep.detail = "r_xz = " + bc.r_xz->to_string() + ", identity lhs = " + lhs.to_string();
        return rep;
    }
    throw std::invalid_argument("check_descent: unknown window " + window);
}

LimitSummary limit_set_summary(unsigned grid_den, double c_floor, const OrbitOptions& opts) {
    LimitSummary sum;
    for (unsigned ia = 1; 2 * ia <= grid_den; ++ia)
        for (unsigned ib = 1; ib <= ia; ++ib)
            for (unsigned ic = 1; ic <= ib; ++ic) {
                Rat a(ia, grid_den), b(ib, grid_den), c(ic, grid_den);
                Vec start{a, b, c, Rat(0)};
                Orbit o = iterate_orbit(start, opts);
                LimitSummaryRow row;
                row.start = {a, b, c};
                row.resolution = o.resolution;
                if (!o.limit) {
                    ++sum.unresolved;
                } else {
                    const Vec& L = *o.limit;
                    double lx = L[0].to_double(), ly = L[1].to_double(), lz = L[2].to_double();
                    double t = (lx + ly + lz) / 3.0;
                    row.diag_dist = std::sqrt((lx - t) * (lx - t) + (ly - t) * (ly - t) +
                                              (lz - t) * (lz - t));
                    row.c_limit = lz;
                    row.c_limit_exact = o.limit_exact;
                    sum.max_diag_dist = std::max(sum.max_diag_dist, row.diag_dist);
                    if (row.c_limit <= c_floor) ++sum.below_floor;
                }
                sum.rows.push_back(std::move(row));
            }
    return sum;
}

} // namespace cubegeo
