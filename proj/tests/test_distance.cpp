#include <doctest.h>

#include <algorithm>
#include <random>

#include "cubegeo/distance.hpp"
#include "cubegeo/facet.hpp"

using namespace cubegeo;

TEST_CASE("dist_to_goal frozen examples") {
    DeltaPoint p = make_delta(Rat(2, 5), Rat(1, 3), Rat(1, 6));
    DistResult r = dist_to_goal(p, Vec{Rat(1), Rat(1), Rat(1)});
    CHECK(r.sq_dist == Rat(3329, 900));
    std::vector<std::string> argmin = r.argmin_labels;
    std::sort(argmin.begin(), argmin.end());
    CHECK(argmin == std::vector<std::string>{"BR", "R", "UBR", "UR"});

    DeltaPoint center = make_delta(Rat(1, 2), Rat(1, 2), Rat(1, 2));
    CHECK(dist_to_goal(center, Vec{Rat(1, 2), Rat(1, 2), Rat(1, 2)}).sq_dist == Rat(4));

    DeltaPoint corner = make_delta(Rat(0), Rat(0), Rat(0));
    CHECK(dist_to_goal(corner, Vec{Rat(1), Rat(1), Rat(1)}).sq_dist == Rat(6));

    CHECK_THROWS_AS(dist_to_goal(p, Vec{Rat(2), Rat(0), Rat(0)}), std::invalid_argument);
}

TEST_CASE("dist_on_surface basics") {
    DeltaPoint p = make_delta(Rat(2, 5), Rat(1, 3), Rat(1, 6));
    CHECK(dist_on_surface(p, p.surface_point()).sq_dist == Rat(0));
    // within the source facet the distance is the straight-line distance
    Vec q{Rat(1, 8), Rat(1, 16), Rat(1, 32), Rat(0)};
    CHECK(dist_on_surface(p, q).sq_dist == sq_dist(p.surface_point(), q));
    DeltaPoint center = make_delta(Rat(1, 2), Rat(1, 2), Rat(1, 2));
    CHECK(dist_on_surface(center, Vec{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1)}).sq_dist ==
          Rat(4));
    CHECK_THROWS_AS(dist_on_surface(p, Vec{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}),
                    std::invalid_argument);
}

TEST_CASE("distance is invariant under the stabilizer of p") {
    // a = b: distances to q and to the x<->y swap of q agree exactly
    DeltaPoint p = make_delta(Rat(1, 3), Rat(1, 3), Rat(1, 6));
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<unsigned> d(0, 16);
    for (int iter = 0; iter < 40; ++iter) {
        Vec q{Rat(d(rng), 16), Rat(d(rng), 16), Rat(d(rng), 16)};
        Vec qs{q[1], q[0], q[2]};
        CHECK(dist_to_goal(p, q).sq_dist == dist_to_goal(p, qs).sq_dist);
    }
}

TEST_CASE("facet charts agree on shared 2-faces") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<unsigned> d(0, 16);
    for (int iter = 0; iter < 60; ++iter) {
        unsigned v[3] = {d(rng), d(rng), d(rng)};
        std::sort(v, v + 3, std::greater<unsigned>());
        if (v[0] > 8) continue;
        DeltaPoint p = make_delta(Rat(v[0], 16), Rat(v[1], 16), Rat(v[2], 16));
        // q on the 2-face B∩G
        Vec q{Rat(d(rng), 16), Rat(1), Rat(d(rng), 16), Rat(1)};
        CHECK_NOTHROW(dist_on_surface(p, q)); // the internal cross-chart assert
    }
}

TEST_CASE("surface_distance_sq reduces arbitrary points") {
    // same pair as the frozen example, but from an unreduced frame
    Vec p{Rat(2, 5), Rat(1, 3), Rat(1, 6), Rat(0)};
    Vec q{Rat(1), Rat(1), Rat(1), Rat(1)};
    CHECK(surface_distance_sq(p, q) == Rat(3329, 900));
    // transported by a symmetry the distance is unchanged
    const auto& G = cube_symmetries(4);
    for (std::size_t k = 0; k < G.size(); k += 37) {
        CHECK(surface_distance_sq(G[k].apply(p), G[k].apply(q)) == Rat(3329, 900));
    }
}

TEST_CASE("3-cube distances") {
    CHECK(dist_to_top_3cube(Rat(0), Rat(0), Vec{Rat(1), Rat(1)}).sq_dist == Rat(5));
    CHECK(dist_to_top_3cube(Rat(1, 2), Rat(1, 2), Vec{Rat(1, 2), Rat(1, 2)}).sq_dist == Rat(4));
    // corner sees all 8 images at equal distance
    CHECK(dist_to_top_3cube(Rat(0), Rat(0), Vec{Rat(1), Rat(1)}).argmin_labels.size() == 8);
}
