#include "cubegeo/farthest.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cubegeo/facet.hpp"
#include "cubegeo/source_images.hpp"

namespace cubegeo {

Vec iota(const Vec& p) {
    Vec q(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) q[i] = Rat(1) - p[i];
    return q;
}

namespace {

const std::map<Region, std::vector<SiteTriple>> kTheorem = {
    {Region::D11, {{"B", "D", "R"}}},
    {Region::D12, {{"BD", "D", "R"}}},
    {Region::D21, {{"B", "D", "RD"}, {"B", "RD", "R"}}},
    {Region::D22A, {{"BD", "D", "RD"}, {"B", "BD", "RD"}, {"B", "RD", "R"}}},
    {Region::D22B, {{"BD", "D", "RD"}}},
    {Region::D31, {{"B", "D", "RD"}, {"B", "RD", "UR"}}},
    {Region::D32A, {{"BD", "D", "RD"}, {"B", "BD", "RD"}, {"B", "RD", "UR"}}},
    {Region::D32B, {{"BD", "D", "RD"}, {"BD", "RD", "UR"}, {"B", "BD", "UR"}}},
    {Region::D33, {{"BD", "D", "RD"}, {"BD", "RD", "UR"}, {"UB", "BD", "UR"}}},
};

bool triple_in(const SiteTriple& t, const std::vector<SiteTriple>& list) {
    return std::find(list.begin(), list.end(), t) != list.end();
}

void append_unique(FarthestResult& r, const Vec& pt, const SiteTriple& w) {
    for (const Vec& q : r.points)
        if (q == pt) return;
    r.points.push_back(pt);
    r.witnesses.push_back(w);
}

} // namespace

const std::vector<SiteTriple>& theorem_candidates(Region r) { return kTheorem.at(r); }

FarthestResult farthest_3cube(const Rat& a, const Rat& b) {
    if (b < Rat(0) || a < b || a > Rat(1, 2))
        throw std::invalid_argument("farthest_3cube: need 0 <= b <= a <= 1/2");
    // f(p) = (1 - (a + 2b(1-b))/(3-2a), 1-b, 1), circumcenter of pF, pR, pB
    Rat x = Rat(1) - (a + Rat(2) * b * (Rat(1) - b)) / (Rat(3) - Rat(2) * a);
    FarthestResult r;
    Vec q{x, Rat(1) - b, Rat(1)};
    r.points.push_back(q);
    r.witnesses.push_back(SiteTriple{"F", "R", "B"});
    // intrinsic distance is the common distance to the realizing images
    r.sq_dist = sq_dist(Vec{a, -Rat(1) - b, Rat(1)}, q);
    if (a == Rat(1, 2)) {
        Vec m{Rat(1) - x, Rat(1) - b, Rat(1)};
        if (m != q) {
            r.points.push_back(m);
            r.witnesses.push_back(SiteTriple{"F", "L", "B"});
        }
    }
    return r;
}

FarthestResult farthest_fundamental(const DeltaPoint& p) {
    if (p.n() != 4) throw std::invalid_argument("farthest_fundamental: 4-cube only");
    CornerSet cs = corner_set(p);
    Vec pu3(3);
    {
        auto imgs = source_images_4cube(p);
        for (const SourceImage& s : imgs)
            if (s.label == "U") pu3 = Vec{s.point[0], s.point[1], s.point[2]};
    }
    FarthestResult r;
    r.region = cs.region;
    bool first = true;
    std::vector<std::pair<SiteTriple, Vec>> arg;
    for (const auto& [t, v] : cs.corners) {
        Rat d = sq_dist(v, pu3);
        if (first || d > r.sq_dist) {
            r.sq_dist = d;
            arg = {{t, v}};
            first = false;
        } else if (d == r.sq_dist) {
            arg.emplace_back(t, v);
        }
    }
    for (const auto& [t, v] : arg) {
        // argmax must lie in iota(Delta) and in the piecewise map's candidate
        // set for at least one applicable region
        if (!(Rat(1, 2) <= v[0] && v[0] <= v[1] && v[1] <= v[2] && v[2] <= Rat(1)))
            throw std::logic_error("farthest_fundamental: argmax corner " + triple_name(t) +
                                   " outside iota(Delta)");
        bool in_candidates = false;
        for (Region reg : cs.region.applicable)
            if (triple_in(t, theorem_candidates(reg))) in_candidates = true;
        if (!in_candidates)
            throw std::logic_error("farthest_fundamental: argmax corner " + triple_name(t) +
                                   " not in the candidate table for " +
                                   region_name(cs.region.tag));
        append_unique(r, from_chart(facet_from_name('G'), v), t);
    }
    // sources on the a = 1/2 wall are fixed by the x-reflection, so mirrored
    // farthest points are farthest too
    if (p.a() == Rat(1, 2)) {
        const std::size_t m = r.points.size();
        for (std::size_t i = 0; i < m; ++i) {
            Vec q = r.points[i];
            q[0] = Rat(1) - q[0];
            append_unique(r, q, r.witnesses[i]);
        }
    }
    return r;
}

FarthestResult farthest(const Vec& p) {
    if (p.dim() == 3) {
        DeltaPoint d = reduce_to_fundamental(p);
        FarthestResult base = farthest_3cube(d.coords[0], d.coords[1]);
        FarthestResult out;
        out.sq_dist = base.sq_dist;
        SignedPerm inv = d.witness.inverse();
        for (std::size_t i = 0; i < base.points.size(); ++i)
            append_unique(out, inv.apply(base.points[i]), base.witnesses[i]);
        for (const SignedPerm& g : stabilizer(p)) {
            const std::size_t m = out.points.size();
            for (std::size_t i = 0; i < m; ++i) append_unique(out, g.apply(out.points[i]), out.witnesses[i]);
        }
        return out;
    }
    if (p.dim() != 4) throw std::invalid_argument("farthest: n must be 3 or 4");
    DeltaPoint d = reduce_to_fundamental(p);
    FarthestResult base = farthest_fundamental(d);
    FarthestResult out;
    out.sq_dist = base.sq_dist;
    out.region = base.region;
    SignedPerm inv = d.witness.inverse();
    for (std::size_t i = 0; i < base.points.size(); ++i)
        append_unique(out, inv.apply(base.points[i]), base.witnesses[i]);
    // close under the stabilizer of p
    for (const SignedPerm& g : stabilizer(p)) {
        if (g.is_identity()) continue;
        const std::size_t m = out.points.size();
        for (std::size_t i = 0; i < m; ++i) append_unique(out, g.apply(out.points[i]), out.witnesses[i]);
    }
    return out;
}

} // namespace cubegeo
