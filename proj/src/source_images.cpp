#include "cubegeo/source_images.hpp"

#include <stdexcept>

namespace cubegeo {

namespace {

const std::vector<std::string> kGoalLabels4 = {
    "U",   "D",                      //
    "UF",  "F",   "FD",              //
    "UB",  "B",   "BD",              //
    "UL",  "L",   "LD",              //
    "UR",  "R",   "RD",              //
    "ULF", "LF",  "LFD",             //
    "URF", "RF",  "RFD",             //
    "UBL", "BL",  "BLD",             //
    "UBR", "BR",  "BRD"};

const std::vector<std::string> kTopLabels3 = {"F", "B", "BL", "L", "LF", "BR", "R", "RF"};

// src(F) label sets of the 4-cube, keyed by facet name.
const std::map<std::string, std::vector<std::string>> kSrc4 = {
    {"S", {""}},
    {"D", {"D"}},
    {"F", {"F", "FD"}},
    {"L", {"L", "LD", "LF", "LFD"}},
    {"R", {"R", "RD", "RF", "RFD"}},
    {"B", {"B", "BD", "BL", "BLD", "BR", "BRD"}},
    {"U", {"U", "UF", "UB", "UL", "ULF", "UBL", "UR", "URF", "UBR"}},
    {"G", kGoalLabels4},
};

} // namespace

const std::vector<std::string>& goal_labels_4() { return kGoalLabels4; }

const std::vector<std::string>& src_labels(std::size_t n, const Facet& facet) {
    if (n == 4) {
        auto it = kSrc4.find(facet_name(facet));
        if (it == kSrc4.end()) throw std::invalid_argument("src_labels: bad facet");
        return it->second;
    }
    if (n == 3 && facet == facet_from_name('U')) return kTopLabels3;
    throw std::invalid_argument("src_labels: no curated label set for n=" + std::to_string(n) +
                                " facet " + facet_name(facet));
}

UnfoldSeq label_sequence(std::size_t n, const Facet& target, const std::string& label) {
    const Facet source = (n == 4) ? facet_from_name('S') : facet_from_name('D');
    std::vector<Facet> fs;
    fs.push_back(target);
    for (char ch : label) fs.push_back(facet_from_name(ch));
    if (fs.back() != source) fs.push_back(source);
    return UnfoldSeq(std::move(fs));
}

SourceImage source_image_via_unfolding(std::size_t n, const Facet& target,
                                       const std::string& label, const Vec& surface_point) {
    AffineIso iso = unfold_seq(label_sequence(n, target, label), n);
    return SourceImage{label, iso.apply(surface_point)};
}

std::vector<SourceImage> source_images_3cube(const Rat& a, const Rat& b) {
    if (b < Rat(0) || a < b || a > Rat(1, 2))
        throw std::invalid_argument("source_images_3cube: need 0 <= b <= a <= 1/2");
    const Rat one(1);
    auto P = [](Rat x, Rat y) { return Vec{std::move(x), std::move(y), Rat(1)}; };
    return {
        {"F", P(a, -one - b)},      {"B", P(a, Rat(3) - b)},
        {"BL", P(b - one, Rat(2) + a)}, {"L", P(-one - a, b)},
        {"LF", P(-one - b, -a)},    {"BR", P(Rat(2) - b, Rat(3) - a)},
        {"R", P(Rat(3) - a, b)},    {"RF", P(Rat(2) + b, a - one)},
    };
}

std::vector<SourceImage> source_images_4cube(const DeltaPoint& p) {
    const Rat &a = p.a(), &b = p.b(), &c = p.c();
    const Rat one(1), two(2), three(3);
    auto P = [](Rat x, Rat y, Rat z) {
        return Vec{std::move(x), std::move(y), std::move(z), Rat(1)};
    };
    return {
        {"U", P(a, b, three - c)},          {"D", P(a, b, -one - c)},
        {"UF", P(a, c - one, two + b)},     {"F", P(a, -one - b, c)},
        {"FD", P(a, -one - c, -b)},         {"UB", P(a, two - c, three - b)},
        {"B", P(a, three - b, c)},          {"BD", P(a, two + c, b - one)},
        {"UL", P(c - one, b, two + a)},     {"L", P(-one - a, b, c)},
        {"LD", P(-one - c, b, -a)},         {"UR", P(two - c, b, three - a)},
        {"R", P(three - a, b, c)},          {"RD", P(two + c, b, a - one)},
        {"ULF", P(c - one, -a, two + b)},   {"LF", P(-one - b, -a, c)},
        {"LFD", P(-one - c, -a, -b)},       {"URF", P(two - c, a - one, two + b)},
        {"RF", P(two + b, a - one, c)},     {"RFD", P(two + c, a - one, -b)},
        {"UBL", P(b - one, two - c, two + a)}, {"BL", P(b - one, two + a, c)},
        {"BLD", P(b - one, two + c, -a)},   {"UBR", P(two - b, two - c, three - a)},
        {"BR", P(two - b, three - a, c)},   {"BRD", P(two - b, two + c, a - one)},
    };
}

std::map<std::string, std::vector<SourceImage>> src_all_facets(const DeltaPoint& p) {
    if (p.n() != 4) throw std::invalid_argument("src_all_facets: 4-cube only");
    const Vec sp = p.surface_point();
    std::map<std::string, std::vector<SourceImage>> out;
    for (const Facet& f : all_facets(4)) {
        std::vector<SourceImage> imgs;
        for (const std::string& label : src_labels(4, f)) {
            if (label.empty() && f == facet_from_name('S')) {
                imgs.push_back(SourceImage{"", sp});
            } else {
                imgs.push_back(source_image_via_unfolding(4, f, label, sp));
            }
        }
        out[facet_name(f)] = std::move(imgs);
    }
    return out;
}

} // namespace cubegeo
