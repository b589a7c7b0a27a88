#include "cubegeo/corners.hpp"

#include <map>
#include <stdexcept>

#include "cubegeo/predicates.hpp"
#include "cubegeo/source_images.hpp"

namespace cubegeo {

const std::vector<std::string>& backright_sites() {
    static const std::vector<std::string> sites = {"D",  "UR", "R",   "RD", "UB",
                                                   "B",  "BD", "UBR", "BR", "BRD"};
    return sites;
}

std::string triple_name(const SiteTriple& t) {
    return "c(" + t[0] + "," + t[1] + "," + t[2] + ")";
}

namespace {

Vec source3(const DeltaPoint& p, const std::string& label) {
    for (const SourceImage& s : source_images_4cube(p))
        if (s.label == label) return Vec{s.point[0], s.point[1], s.point[2]};
    throw std::logic_error("source label not found: " + label);
}

// varphi_{1,c} and varphi_{2,c} of the diagonal closed forms.
Rat phi1c(const Rat& xi, const Rat& c) {
    return (xi + Rat(2) * c * (Rat(1) - c)) / (Rat(3) - Rat(2) * xi);
}
Rat phi2c(const Rat& xi, const Rat& c) {
    return (xi + c) * (Rat(1) - c) / (Rat(2) - xi + c);
}

} // namespace

Vec corner_center_generic(const SiteTriple& t, const DeltaPoint& p) {
    std::vector<Vec> pts = {source3(p, "U"), source3(p, t[0]), source3(p, t[1]),
                            source3(p, t[2])};
    return circumcenter(pts);
}

Vec closed_form_center(const SiteTriple& t, const DeltaPoint& p, bool* used_closed_form) {
    const Rat &a = p.a(), &b = p.b(), &c = p.c();
    const Rat one(1), two(2), three(3), half32(3, 2);
    auto name = triple_name(t);
    if (used_closed_form) *used_closed_form = true;
    if (name == "c(B,D,R)")
        return Vec{one - phi1c(a, c), one - phi1c(b, c), one - c};
    if (name == "c(B,D,RD)")
        return Vec{one - phi2c(a, c), one - phi1c(b, c), one - c};
    if (name == "c(BD,D,R)")
        return Vec{one - phi1c(a, c), one - phi2c(b, c), one - c};
    if (name == "c(BD,D,RD)")
        return Vec{one - phi2c(a, c), one - phi2c(b, c), one - c};
    if (name == "c(B,RD,R)") {
        Rat d = three - Rat(4) * a + a * a - c + c * c;
        return Vec{half32 - (one - a + two * c) * (three - two * c) / (two * d),
                   half32 - (three - two * a) * (one - a + two * c) * (three - two * c) /
                                (two * (three - two * b) * d),
                   half32 - (three - two * a) * (one - a + two * c) / (two * d)};
    }
    if (name == "c(B,RD,UR)") {
        Rat d = Rat(4) - Rat(4) * a + a * a - two * c + c * c;
        return Vec{one - (two - a + c) * (a - c) / d,
                   half32 - (three - two * c) * (Rat(4) - Rat(4) * a + two * c + a * a -
                                                 three * c * c) /
                                (two * (three - two * b) * d),
                   one - two * (one - c) * c / d};
    }
    if (name == "c(B,BD,RD)") {
        Rat d = three - Rat(4) * b + b * b - c + c * c;
        return Vec{three - (Rat(4) - a - c) * (three - three * b + c) * (two - b + c) /
                               (two * (two - a + c) * d),
                   two - (one - b + c) * (Rat(6) - b - three * c) / (two * d),
                   (one - b - c) * (Rat(6) - b - three * c) / (two * d)};
    }
    if (name == "c(B,BD,UR)") {
        Rat d = three - Rat(4) * b + b * b - c + c * c;
        return Vec{one - (a - c) * (three - three * b + c) * (two - b + c) /
                             (two * (two - a - c) * d),
                   half32 - (one - b + two * c) * (three - two * c) / (two * d),
                   half32 - (three - two * b) * (one - b + two * c) / (two * d)};
    }
    if (name == "c(BD,RD,UR)") {
        Rat d = Rat(4) - Rat(4) * a + a * a - two * c + c * c;
        return Vec{one - (two - a + c) * (a - c) / d,
                   three - (two - a + c) * (two - a - c) * (Rat(4) - b - c) /
                               ((two - b + c) * d),
                   one - two * (one - c) * c / d};
    }
    if (name == "c(UB,BD,UR)") {
        Rat d = Rat(4) - Rat(4) * b + b * b - two * c + c * c;
        return Vec{one - (a - c) * (two - b + c) * (two - b - c) / ((two - a - c) * d),
                   one - (two - b + c) * (b - c) / d,
                   one - two * (one - c) * c / d};
    }
    if (used_closed_form) *used_closed_form = false;
    return corner_center_generic(t, p);
}

namespace {

const std::map<Region, std::vector<SiteTriple>> kCorners = {
    {Region::D11, {{"B", "D", "R"}, {"B", "R", "UR"}, {"UB", "B", "UR"}}},
    {Region::D12, {{"BD", "D", "R"}, {"B", "BD", "R"}, {"B", "R", "UR"}, {"UB", "B", "UR"}}},
    {Region::D21, {{"B", "D", "RD"}, {"B", "RD", "R"}, {"B", "R", "UR"}, {"UB", "B", "UR"}}},
    {Region::D22A,
     {{"BD", "D", "RD"}, {"B", "BD", "RD"}, {"B", "RD", "R"}, {"B", "R", "UR"}, {"UB", "B", "UR"}}},
    {Region::D22B,
     {{"BD", "D", "RD"}, {"BD", "RD", "R"}, {"B", "BD", "R"}, {"B", "R", "UR"}, {"UB", "B", "UR"}}},
    {Region::D31, {{"B", "D", "RD"}, {"B", "RD", "UR"}, {"UB", "B", "UR"}}},
    {Region::D32A,
     {{"BD", "D", "RD"}, {"B", "BD", "RD"}, {"B", "RD", "UR"}, {"UB", "B", "UR"}}},
    {Region::D32B,
     {{"BD", "D", "RD"}, {"BD", "RD", "UR"}, {"B", "BD", "UR"}, {"UB", "B", "UR"}}},
    {Region::D33, {{"BD", "D", "RD"}, {"BD", "RD", "UR"}, {"UB", "BD", "UR"}}},
};

} // namespace

const std::vector<SiteTriple>& corner_triples(Region r) { return kCorners.at(r); }

CornerSet corner_set(const DeltaPoint& p) {
    CornerSet out;
    out.region = classify_delta(p);
    for (Region r : out.region.applicable) {
        for (const SiteTriple& t : corner_triples(r)) {
            Vec v = closed_form_center(t, p);
            bool dup = false;
            for (const auto& [t0, v0] : out.corners)
                if (v0 == v) { dup = true; break; }
            if (!dup) out.corners.emplace_back(t, std::move(v));
        }
    }
    return out;
}

bool bisector_is_graph(const std::string& site, const DeltaPoint& p) {
    if (site == "UR" || site == "UBR") return p.a() != p.c();
    if (site == "UB") return p.b() != p.c();
    return true;
}

Rat bisector_height(const std::string& site, const Rat& x, const Rat& y, const DeltaPoint& p) {
    const Rat &a = p.a(), &b = p.b(), &c = p.c();
    const Rat two(2), three(3);
    if (site == "D") return Rat(1) - c;
    if (site == "UB") {
        if (b == c) throw std::invalid_argument("bisector_height: UB degenerate (b=c)");
        return (Rat(-2) + three * b - c + (two - b - c) * y) / (b - c);
    }
    if (site == "B") return (three * b - three * c + (three - two * b) * y) / (three - two * c);
    if (site == "BD")
        return (two + b - Rat(5) * c + (two - b + c) * y) / (Rat(4) - b - c);
    if (site == "UR") {
        if (a == c) throw std::invalid_argument("bisector_height: UR degenerate (a=c)");
        return (Rat(-2) + three * a - c + (two - a - c) * x) / (a - c);
    }
    if (site == "R") return (three * a - three * c + (three - two * a) * x) / (three - two * c);
    if (site == "RD")
        return (two + a - Rat(5) * c + (two - a + c) * x) / (Rat(4) - a - c);
    if (site == "UBR") {
        if (a == c) throw std::invalid_argument("bisector_height: UBR degenerate (a=c)");
        return (Rat(-4) + three * a + two * b - c + (two - a - b) * x + (two - b - c) * y) /
               (a - c);
    }
    if (site == "BR")
        return (Rat(-2) + three * a + two * b - three * c + (two - a - b) * x +
                (three - a - b) * y) /
               (three - two * c);
    if (site == "BRD")
        return (a + two * b - Rat(5) * c + (two - a - b) * x + (two - b + c) * y) /
               (Rat(4) - a - c);
    throw std::invalid_argument("bisector_height: unknown site " + site);
}

Rat f_max(const Rat& x, const Rat& y, const DeltaPoint& p) {
    bool first = true;
    Rat best;
    for (const std::string& site : backright_sites()) {
        Rat v = bisector_height(site, x, y, p); // throws if vertical
        if (first || v > best) { best = v; first = false; }
    }
    return best;
}

bool verify_corner(const DeltaPoint& p, const Vec& corner) {
    // Eq-(8)-style Voronoi-vertex test of V_U: true iff the corner's nearest
    // BackRight site ties p_U exactly (above every bisector, on at least
    // one). Where all bisectors are graphs this is f_max(x0,y0) == z0; the
    // two routes are cross-asserted.
    const Vec pu = source3(p, "U");
    const Rat du = sq_dist(corner, pu);
    bool tie = false, below = false;
    for (const std::string& site : backright_sites()) {
        Rat ds = sq_dist(corner, source3(p, site));
        if (ds < du) { below = true; break; }
        if (ds == du) tie = true;
    }
    const bool verdict = !below && tie;
    bool all_graphs = true;
    for (const std::string& site : backright_sites())
        if (!bisector_is_graph(site, p)) { all_graphs = false; break; }
    if (all_graphs && !below) {
        if ((f_max(corner[0], corner[1], p) == corner[2]) != verdict)
            throw std::logic_error("verify_corner: distance and f_max routes disagree");
    }
    return verdict;
}

} // namespace cubegeo
