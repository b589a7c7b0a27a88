#include <doctest.h>

#include <random>
#include <set>

#include "cubegeo/source_images.hpp"

using namespace cubegeo;

namespace {
DeltaPoint rand_delta(std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> d(0, 32);
    unsigned v[3] = {d(rng), d(rng), d(rng)};
    std::sort(v, v + 3, std::greater<unsigned>());
    return make_delta(Rat(v[0], 64), Rat(v[1], 64), Rat(v[2], 64));
}
} // namespace

TEST_CASE("the 3-cube source image closed forms") {
    Rat a(1, 3), b(1, 6);
    auto imgs = source_images_3cube(a, b);
    REQUIRE(imgs.size() == 8);
    auto find = [&](const std::string& label) -> Vec {
        for (const auto& s : imgs)
            if (s.label == label) return s.point;
        FAIL("missing " << label);
        return Vec{};
    };
    CHECK(find("F") == Vec{Rat(1, 3), Rat(-7, 6), Rat(1)});
    CHECK(find("R") == Vec{Rat(8, 3), Rat(1, 6), Rat(1)});
    auto corner = source_images_3cube(Rat(0), Rat(0));
    for (const auto& s : corner)
        if (s.label == "BR") CHECK(s.point == Vec{Rat(2), Rat(3), Rat(1)});
    CHECK_THROWS_AS(source_images_3cube(Rat(1, 6), Rat(1, 3)), std::invalid_argument);
}

TEST_CASE("3-cube closed forms equal the composite unfoldings") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<unsigned> d(0, 16);
    for (int iter = 0; iter < 25; ++iter) {
        unsigned ib = d(rng), ia = d(rng);
        if (ib > ia) std::swap(ia, ib);
        Rat a(ia, 32), b(ib, 32);
        Vec p{a, b, Rat(0)};
        for (const auto& s : source_images_3cube(a, b)) {
            SourceImage via = source_image_via_unfolding(3, facet_from_name('U'), s.label, p);
            CHECK(via.point == s.point);
        }
    }
}

TEST_CASE("the 26 4-cube source images") {
    DeltaPoint p = make_delta(Rat(2, 5), Rat(1, 3), Rat(1, 6));
    auto imgs = source_images_4cube(p);
    REQUIRE(imgs.size() == 26);
    auto find = [&](const std::string& label) -> Vec {
        for (const auto& s : imgs)
            if (s.label == label) return s.point;
        FAIL("missing " << label);
        return Vec{};
    };
    CHECK(find("U") == Vec{Rat(2, 5), Rat(1, 3), Rat(17, 6), Rat(1)});
    CHECK(find("BRD") == Vec{Rat(5, 3), Rat(13, 6), Rat(-3, 5), Rat(1)});
    // labels are pairwise distinct
    std::set<std::string> labels;
    for (const auto& s : imgs) labels.insert(s.label);
    CHECK(labels.size() == 26);
}

TEST_CASE("4-cube closed forms equal the composite unfoldings, randomized") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 12; ++iter) {
        DeltaPoint p = rand_delta(rng);
        Vec sp = p.surface_point();
        for (const auto& s : source_images_4cube(p)) {
            SourceImage via = source_image_via_unfolding(4, facet_from_name('G'), s.label, sp);
            CHECK(via.point == s.point);
        }
    }
}

TEST_CASE("src sets per facet have the fixed sizes") {
    DeltaPoint p = make_delta(Rat(2, 5), Rat(1, 3), Rat(1, 6));
    auto srcs = src_all_facets(p);
    CHECK(srcs.at("S").size() == 1);
    CHECK(srcs.at("D").size() == 1);
    CHECK(srcs.at("F").size() == 2);
    CHECK(srcs.at("L").size() == 4);
    CHECK(srcs.at("R").size() == 4);
    CHECK(srcs.at("B").size() == 6);
    CHECK(srcs.at("U").size() == 9);
    CHECK(srcs.at("G").size() == 26);
    std::size_t total = 0;
    for (const auto& [facet, v] : srcs) total += v.size();
    CHECK(total == 53);
    // every image lies in the affine hull of its facet
    for (const auto& [facet, v] : srcs) {
        Facet f = facet_from_name(facet);
        for (const auto& s : v) CHECK(s.point[f.axis] == Rat(f.side));
    }
}

TEST_CASE("out-of-domain source points rejected") {
    CHECK_THROWS_AS(make_delta(Rat(1, 3), Rat(2, 5), Rat(1, 6)), std::invalid_argument);
    CHECK_THROWS_AS(make_delta(Rat(3, 5), Rat(1, 3), Rat(1, 6)), std::invalid_argument);
}
