#include "cubegeo/regions.hpp"

#include <stdexcept>

#include "cubegeo/predicates.hpp"
#include "cubegeo/source_images.hpp"

namespace cubegeo {

std::string region_name(Region r) {
    switch (r) {
        case Region::D11: return "D11";
        case Region::D12: return "D12";
        case Region::D21: return "D21";
        case Region::D22A: return "D22A";
        case Region::D22B: return "D22B";
        case Region::D31: return "D31";
        case Region::D32A: return "D32A";
        case Region::D32B: return "D32B";
        case Region::D33: return "D33";
    }
    return "?";
}

PlanarClass classify_planar_right(const Rat& a, const Rat& c) {
    if (c < Rat(0) || a < c || a > Rat(1, 2))
        throw std::invalid_argument("classify_planar_right: (a,c) outside Delta0");
    PlanarClass out;
    out.psi1_val = psi1(a, c);
    out.psi2_val = psi2(a, c);
    int s1 = out.psi1_val.sign(), s2 = out.psi2_val.sign();
    out.psi1_zero = (s1 == 0);
    out.psi2_zero = (s2 == 0);
    if (s1 >= 0) out.zones.push_back(1);
    if (s1 <= 0 && s2 >= 0) out.zones.push_back(2);
    if (s2 <= 0) out.zones.push_back(3);
    return out;
}

int cmp_a_sqrt7(const Rat& a) {
    // a vs (-1+sqrt7)/4  <=>  4a+1 vs sqrt7 (4a+1 > 0), via squares
    Rat t = Rat(4) * a + Rat(1);
    return (t * t - Rat(7)).sign();
}

int cmp_c_sqrt7(const Rat& c) {
    // c vs (3-sqrt7)/4  <=>  sqrt7 vs 3-4c; for c <= 1/2, 3-4c >= 1 > 0
    Rat t = Rat(3) - Rat(4) * c;
    return (Rat(7) - t * t).sign();
}

LeftClass classify_planar_left(const Rat& a, const Rat& c) {
    if (c < Rat(0) || a < c || a > Rat(1, 2))
        throw std::invalid_argument("classify_planar_left: (a,c) outside Delta0");
    LeftClass out;
    Rat v1 = psi1L(a, c), v2 = psi2L(a, c), v3 = psi3L(a, c), v4 = psi4L(a, c), v5 = psi5L(a, c);
    const int ca = cmp_a_sqrt7(a), cc = cmp_c_sqrt7(c);
    if (cc >= 0 && v5 <= Rat(0) && Rat(0) <= v1) out.regions.push_back("D1L");
    if (ca >= 0 && v1 <= Rat(0) && Rat(0) <= v2) out.regions.push_back("D2L");
    if (ca >= 0 && v2 <= Rat(0) && Rat(0) <= v3) out.regions.push_back("D3L");
    if (cc <= 0 && v3 <= Rat(0) && Rat(0) <= v4) out.regions.push_back("D4L");
    if (ca <= 0 && v4 <= Rat(0) && Rat(0) <= v5) out.regions.push_back("D5L");
    const char* names[] = {"psi1L", "psi2L", "psi3L", "psi4L", "psi5L"};
    const Rat* vals[] = {&v1, &v2, &v3, &v4, &v5};
    for (int i = 0; i < 5; ++i)
        if (vals[i]->is_zero()) out.zero_flags.push_back(names[i]);
    return out;
}

namespace {

Region make_region(int i, int j, char ab) {
    if (i == 1 && j == 1) return Region::D11;
    if (i == 1 && j == 2) return Region::D12;
    if (i == 2 && j == 1) return Region::D21;
    if (i == 2 && j == 2) return ab == 'B' ? Region::D22B : Region::D22A;
    if (i == 3 && j == 1) return Region::D31;
    if (i == 3 && j == 2) return ab == 'B' ? Region::D32B : Region::D32A;
    if (i == 3 && j == 3) return Region::D33;
    throw std::logic_error("make_region: bad indices");
}

} // namespace

RegionInfo classify_delta(const DeltaPoint& p) {
    const Rat &a = p.a(), &b = p.b(), &c = p.c();
    PlanarClass ca = classify_planar_right(a, c);
    PlanarClass cb = classify_planar_right(b, c);
    RegionInfo info;
    info.psi_values = {{"psi1_ac", ca.psi1_val},
                       {"psi2_ac", ca.psi2_val},
                       {"psi1_bc", cb.psi1_val},
                       {"psi2_bc", cb.psi2_val}};
    if (ca.psi1_zero) info.flags.push_back("psi1_ac_zero");
    if (ca.psi2_zero) info.flags.push_back("psi2_ac_zero");
    if (cb.psi1_zero) info.flags.push_back("psi1_bc_zero");
    if (cb.psi2_zero) info.flags.push_back("psi2_bc_zero");

    bool need22 = false, need32 = false;
    for (int i : ca.zones)
        for (int j : cb.zones) {
            if (i == 2 && j == 2) need22 = true;
            if (i == 3 && j == 2) need32 = true;
        }
    Rat v22, v32;
    if (need22) {
        v22 = psi22(a, b, c);
        info.psi_values.emplace_back("psi22", v22);
        if (v22.is_zero()) info.flags.push_back("psi22_zero");
    }
    if (need32) {
        v32 = psi32(a, b, c);
        info.psi_values.emplace_back("psi32", v32);
        if (v32.is_zero()) info.flags.push_back("psi32_zero");
    }

    std::vector<Region> regs;
    auto add = [&regs](Region r) {
        for (Region x : regs)
            if (x == r) return;
        regs.push_back(r);
    };
    for (int i : ca.zones)
        for (int j : cb.zones) {
            if (j == 3 && i != 3) continue; // D13/D23: provably empty
            if ((i == 2 && j == 2) || (i == 3 && j == 2)) {
                const Rat& v = (i == 2) ? v22 : v32;
                if (v.sign() >= 0) add(make_region(i, j, 'A'));
                if (v.sign() <= 0) add(make_region(i, j, 'B'));
            } else {
                add(make_region(i, j, 'A'));
            }
        }
    if (regs.empty())
        throw std::logic_error("classify_delta: sign pattern lands in empty D13/D23");
    std::sort(regs.begin(), regs.end(),
              [](Region x, Region y) { return static_cast<int>(x) < static_cast<int>(y); });
    info.applicable = regs;
    info.tag = regs.front();
    return info;
}

namespace {

const std::vector<Tri> kRight1 = {{"U", "D", "R"}, {"D", "R", "RD"}, {"U", "UR", "R"}};
const std::vector<Tri> kRight2 = {{"U", "UR", "R"}, {"U", "R", "RD"}, {"U", "D", "RD"}};
const std::vector<Tri> kRight3 = {{"U", "D", "RD"}, {"U", "UR", "RD"}, {"UR", "R", "RD"}};

const std::vector<Tri> kLeft1 = {{"U", "D", "L"}, {"D", "L", "LD"}, {"U", "UL", "L"}};
const std::vector<Tri> kLeft2 = {{"U", "UL", "L"}, {"U", "L", "LD"}, {"U", "D", "LD"}};
const std::vector<Tri> kLeft3 = {{"U", "D", "LD"}, {"U", "UL", "LD"}, {"UL", "L", "LD"}};
const std::vector<Tri> kLeft4 = {{"UL", "L", "LD"}, {"D", "UL", "LD"}, {"U", "D", "UL"}};
const std::vector<Tri> kLeft5 = {{"U", "D", "UL"}, {"D", "UL", "L"}, {"D", "L", "LD"}};

const std::vector<WallSphere> kWallYb1 = {
    {{"U", "D", "R"}, false}, {{"D", "R", "RD"}, false}, {{"U", "UR", "R"}, true}};
const std::vector<WallSphere> kWallYb2 = {
    {{"U", "UR", "R"}, true}, {{"U", "R", "RD"}, false}, {{"U", "D", "RD"}, false}};
const std::vector<WallSphere> kWallYb3 = {
    {{"U", "D", "RD"}, false}, {{"U", "UR", "RD"}, true}, {{"UR", "R", "RD"}, true}};

const std::vector<WallSphere> kWallXa1 = {
    {{"U", "D", "B"}, false}, {{"D", "B", "BD"}, false}, {{"U", "UB", "B"}, true}};
const std::vector<WallSphere> kWallXa2 = {
    {{"U", "UB", "B"}, true}, {{"U", "B", "BD"}, false}, {{"U", "D", "BD"}, false}};
const std::vector<WallSphere> kWallXa3 = {
    {{"U", "D", "BD"}, false}, {{"U", "UB", "BD"}, true}, {{"UB", "B", "BD"}, true}};

} // namespace

const std::vector<Tri>& planar_delaunay_triangles(int zone) {
    switch (zone) {
        case 1: return kRight1;
        case 2: return kRight2;
        case 3: return kRight3;
    }
    throw std::invalid_argument("planar_delaunay_triangles: zone must be 1..3");
}

const std::vector<Tri>& left_delaunay_triangles(const std::string& region) {
    if (region == "D1L") return kLeft1;
    if (region == "D2L") return kLeft2;
    if (region == "D3L") return kLeft3;
    if (region == "D4L") return kLeft4;
    if (region == "D5L") return kLeft5;
    throw std::invalid_argument("left_delaunay_triangles: unknown region " + region);
}

const std::vector<WallSphere>& wall_spheres_yb(int zone) {
    switch (zone) {
        case 1: return kWallYb1;
        case 2: return kWallYb2;
        case 3: return kWallYb3;
    }
    throw std::invalid_argument("wall_spheres_yb: zone must be 1..3");
}

const std::vector<WallSphere>& wall_spheres_xa(int zone) {
    switch (zone) {
        case 1: return kWallXa1;
        case 2: return kWallXa2;
        case 3: return kWallXa3;
    }
    throw std::invalid_argument("wall_spheres_xa: zone must be 1..3");
}

namespace {

Vec source3(const DeltaPoint& p, const std::string& label) {
    for (const SourceImage& s : source_images_4cube(p))
        if (s.label == label) return Vec{s.point[0], s.point[1], s.point[2]};
    throw std::logic_error("source label not found: " + label);
}

} // namespace

Vec wall_sphere_center(const DeltaPoint& p, const WallSphere& w, bool family_yb) {
    // the three sites share y = b (yb family) or x = a (xa family); their
    // in-plane circumcenter has a free transverse coordinate set by alpha.
    std::vector<Vec> pts3;
    for (const std::string& s : w.tri) pts3.push_back(source3(p, s));
    const std::size_t fixed_axis = family_yb ? 1 : 0;
    std::vector<Vec> proj;
    for (const Vec& v : pts3) {
        Vec q(2);
        std::size_t k = 0;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != fixed_axis) q[k++] = v[i];
        proj.push_back(std::move(q));
    }
    Vec c2 = circumcenter(proj); // (x,z) or (y,z)
    const Rat& z = c2[1];
    Rat transverse;
    if (!w.alpha_bc) {
        transverse = Rat(1) - (family_yb ? p.b() : p.a());
    } else {
        transverse = p.c() - (family_yb ? p.b() : p.a()) + z;
    }
    Vec out(3);
    out[fixed_axis] = transverse;
    out[family_yb ? 0 : 1] = c2[0];
    out[2] = z;
    return out;
}

Rat varphi(const std::string& site, const Rat& a, const Rat& c) {
    const Rat one(1);
    if (site == "UL") return (one + c) * (one - a - c) / (one + a - c);
    if (site == "L") return Rat(-1, 2) + (Rat(3) - Rat(2) * c) * (one + Rat(2) * c) / (Rat(2) + Rat(4) * a);
    if (site == "LD") return (one - a + c) * (one - c) / (one + a + c);
    if (site == "UR") return one - varphi("UL", one - a, c);
    if (site == "R") return one - varphi("L", one - a, c);
    if (site == "RD") return one - varphi("LD", one - a, c);
    throw std::invalid_argument("varphi: unknown site " + site);
}

} // namespace cubegeo
