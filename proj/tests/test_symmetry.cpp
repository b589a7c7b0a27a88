#include <doctest.h>

#include <random>

#include "cubegeo/symmetry.hpp"

using namespace cubegeo;

TEST_CASE("group sizes") {
    CHECK(cube_symmetries(3).size() == 48);
    CHECK(cube_symmetries(4).size() == 384);
}

TEST_CASE("apply / inverse / compose") {
    std::mt19937_64 rng(41);
    const auto& G = cube_symmetries(4);
    std::uniform_int_distribution<std::size_t> pick(0, G.size() - 1);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int iter = 0; iter < 200; ++iter) {
        const SignedPerm &g = G[pick(rng)], &h = G[pick(rng)];
        Vec p{Rat(d(rng), 4), Rat(d(rng), 7), Rat(d(rng), 3), Rat(d(rng), 5)};
        CHECK(g.inverse().apply(g.apply(p)) == p);
        CHECK(g.compose(h).apply(p) == g.apply(h.apply(p)));
        CHECK(sq_dist(g.apply(p), g.apply(Vec{Rat(1), Rat(0), Rat(0), Rat(0)})) ==
              sq_dist(p, Vec{Rat(1), Rat(0), Rat(0), Rat(0)}));
    }
}

TEST_CASE("reduce_to_fundamental examples") {
    // (0.9, 0.2, 0.6, 1) -> (2/5, 1/5, 1/10)
    DeltaPoint d = reduce_to_fundamental(Vec{Rat(9, 10), Rat(1, 5), Rat(3, 5), Rat(1)});
    CHECK(d.coords == std::vector<Rat>{Rat(2, 5), Rat(1, 5), Rat(1, 10)});
    // already reduced: identity witness
    DeltaPoint e = reduce_to_fundamental(Vec{Rat(2, 5), Rat(1, 3), Rat(1, 6), Rat(0)});
    CHECK(e.coords == std::vector<Rat>{Rat(2, 5), Rat(1, 3), Rat(1, 6)});
    CHECK(e.witness.is_identity());
    // facet center with a w-flip witness
    DeltaPoint f = reduce_to_fundamental(Vec{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1)});
    CHECK(f.coords == std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(1, 2)});
    CHECK(!f.witness.is_identity());
    CHECK_THROWS_AS(reduce_to_fundamental(Vec{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}),
                    std::invalid_argument);
}

TEST_CASE("witness inverse recovers the original point") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<unsigned> d(0, 12);
    std::uniform_int_distribution<int> axis(0, 3), side(0, 1);
    for (int iter = 0; iter < 150; ++iter) {
        Vec p{Rat(d(rng), 12), Rat(d(rng), 12), Rat(d(rng), 12), Rat(d(rng), 12)};
        p[axis(rng)] = Rat(side(rng));
        DeltaPoint dp = reduce_to_fundamental(p);
        CHECK(dp.witness.apply(p) == dp.surface_point());
        CHECK(dp.witness.inverse().apply(dp.surface_point()) == p);
        // reduced form is valid
        CHECK(dp.coords[0] <= Rat(1, 2));
        CHECK(dp.coords[0] >= dp.coords[1]);
        CHECK(dp.coords[1] >= dp.coords[2]);
        CHECK(dp.coords[2] >= Rat(0));
    }
}

TEST_CASE("reduction witness is deterministic (lex-least)") {
    // a point with a nontrivial stabilizer still reduces deterministically
    Vec p{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(0)};
    DeltaPoint d1 = reduce_to_fundamental(p);
    DeltaPoint d2 = reduce_to_fundamental(p);
    CHECK(d1.witness == d2.witness);
    const auto& G = cube_symmetries(4);
    // no earlier group element achieves the reduction
    for (const SignedPerm& g : G) {
        if (g < d1.witness) {
            Vec q = g.apply(p);
            bool fundamental = q[3] == Rat(0) && q[0] <= Rat(1, 2) && q[1] <= q[0] &&
                               q[2] <= q[1] && q[2] >= Rat(0);
            CHECK(!fundamental);
        }
    }
}

TEST_CASE("stabilizer sizes") {
    CHECK(stabilizer(Vec{Rat(2, 5), Rat(1, 3), Rat(1, 6), Rat(0)}).size() == 1);
    // a=b symmetry
    CHECK(stabilizer(Vec{Rat(1, 3), Rat(1, 3), Rat(1, 6), Rat(0)}).size() == 2);
    // the corner is fixed by every permutation of the three zero axes... and
    // more: all signed perms fixing the 0/1 pattern
    CHECK(stabilizer(Vec{Rat(0), Rat(0), Rat(0), Rat(0)}).size() == 24);
}
