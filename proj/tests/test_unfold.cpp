#include <doctest.h>

#include <random>

#include "cubegeo/facet.hpp"
#include "cubegeo/unfold.hpp"

using namespace cubegeo;

TEST_CASE("facet naming and adjacency") {
    CHECK(facet_name(facet_from_name('G')) == "G");
    CHECK(facet_from_name('S').axis == 3);
    CHECK(facet_from_name('S').side == 0);
    CHECK(all_facets(4).size() == 8);
    CHECK(all_facets(3).size() == 6);
    CHECK(adjacent(facet_from_name('S'), facet_from_name('U')));
    CHECK(!adjacent(facet_from_name('S'), facet_from_name('G')));
    CHECK_THROWS_AS(facet_from_name('X'), std::invalid_argument);
}

TEST_CASE("facets_of") {
    Vec p{Rat(2, 5), Rat(1, 3), Rat(1, 6), Rat(0)};
    auto fs = facets_of(p);
    REQUIRE(fs.size() == 1);
    CHECK(facet_name(fs[0]) == "S");
    auto fs2 = facets_of(Vec{Rat(2, 5), Rat(1, 3), Rat(0), Rat(0)});
    REQUIRE(fs2.size() == 2);
    CHECK(facet_name(fs2[0]) == "D");
    CHECK(facet_name(fs2[1]) == "S");
    CHECK_THROWS_AS(facets_of(Vec{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}),
                    std::invalid_argument);
}

TEST_CASE("unfold_step fixes the shared face and is an isometry") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> d(-8, 8);
    for (const Facet& t : all_facets(4))
        for (const Facet& s : all_facets(4)) {
            if (!adjacent(t, s)) continue;
            AffineIso iso = unfold_step(t, s, 4);
            // shared-face vertices are fixed
            Box face = shared_face(t, s, 4);
            for (int m0 = 0; m0 < 2; ++m0)
                for (int m1 = 0; m1 < 2; ++m1) {
                    Vec v(4);
                    int free_idx = 0;
                    for (int i = 0; i < 4; ++i) {
                        if (face.lo[i] == face.hi[i]) {
                            v[i] = face.lo[i];
                        } else {
                            v[i] = Rat((free_idx++ == 0 ? m0 : m1));
                        }
                    }
                    CHECK(iso.apply(v) == v);
                }
            // pairwise distances preserved on random points of aff(s)
            for (int iter = 0; iter < 5; ++iter) {
                Vec p1(4), p2(4);
                for (int i = 0; i < 4; ++i) {
                    p1[i] = Rat(d(rng), 3);
                    p2[i] = Rat(d(rng), 5);
                }
                p1[s.axis] = Rat(s.side);
                p2[s.axis] = Rat(s.side);
                CHECK(sq_dist(iso.apply(p1), iso.apply(p2)) == sq_dist(p1, p2));
            }
            // image of the source facet leaves the cube (center maps outside)
            Vec center(4);
            for (int i = 0; i < 4; ++i) center[i] = Rat(1, 2);
            center[s.axis] = Rat(s.side);
            Vec img = iso.apply(center);
            bool outside = false;
            for (int i = 0; i < 4; ++i)
                if (img[i] < Rat(0) || img[i] > Rat(1)) outside = true;
            CHECK(outside);
        }
}

TEST_CASE("paper examples of composite unfoldings") {
    // n=3: phi_{U,F} after phi_{F,D} sends (a,b,0) to (a,-1-b,1)
    Rat a(1, 3), b(1, 6);
    UnfoldSeq ufd({facet_from_name('U'), facet_from_name('F'), facet_from_name('D')});
    CHECK(unfold_seq(ufd, 3).apply(Vec{a, b, Rat(0)}) == Vec{a, -Rat(1) - b, Rat(1)});
    // n=4: phi_{G,U} o phi_{U,S} sends (a,b,c,0) to (a,b,3-c,1)
    Rat c(1, 6);
    UnfoldSeq gus({facet_from_name('G'), facet_from_name('U'), facet_from_name('S')});
    CHECK(unfold_seq(gus, 4).apply(Vec{Rat(2, 5), Rat(1, 3), c, Rat(0)}) ==
          Vec{Rat(2, 5), Rat(1, 3), Rat(3) - c, Rat(1)});
    // evaluated: (2/5,1/3,1/6,0) -> (2/5,1/3,17/6,1)
    CHECK(unfold_seq(gus, 4).apply(Vec{Rat(2, 5), Rat(1, 3), Rat(1, 6), Rat(0)}) ==
          Vec{Rat(2, 5), Rat(1, 3), Rat(17, 6), Rat(1)});
}

TEST_CASE("singleton sequence is the identity") {
    UnfoldSeq s({facet_from_name('G')});
    Vec p{Rat(1, 7), Rat(2, 7), Rat(3, 7), Rat(1)};
    CHECK(unfold_seq(s, 4).apply(p) == p);
}

TEST_CASE("composition law phi_(A,B,C) = phi_(A,B) o phi_(B,C)") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> d(-9, 9);
    auto facets = all_facets(4);
    std::uniform_int_distribution<std::size_t> pick(0, facets.size() - 1);
    int done = 0;
    while (done < 50) {
        Facet A = facets[pick(rng)], B = facets[pick(rng)], C = facets[pick(rng)];
        if (!adjacent(A, B) || !adjacent(B, C) || B == C || A == B) continue;
        ++done;
        AffineIso lhs = unfold_seq(UnfoldSeq({A, B, C}), 4);
        AffineIso rhs = unfold_step(A, B, 4).compose(unfold_step(B, C, 4));
        Vec p{Rat(d(rng), 4), Rat(d(rng), 4), Rat(d(rng), 4), Rat(d(rng), 4)};
        CHECK(lhs.apply(p) == rhs.apply(p));
    }
}

TEST_CASE("inverse round-trips") {
    UnfoldSeq seq({facet_from_name('G'), facet_from_name('B'), facet_from_name('R'),
                   facet_from_name('D'), facet_from_name('S')});
    AffineIso iso = unfold_seq(seq, 4);
    Vec p{Rat(2, 5), Rat(1, 3), Rat(1, 6), Rat(0)};
    CHECK(iso.inverse().apply(iso.apply(p)) == p);
}

TEST_CASE("invalid sequences rejected") {
    CHECK_THROWS_AS(UnfoldSeq({facet_from_name('S'), facet_from_name('G')}),
                    std::invalid_argument);
    CHECK_THROWS_AS(UnfoldSeq({facet_from_name('S'), facet_from_name('S')}),
                    std::invalid_argument);
    CHECK_THROWS_AS(UnfoldSeq({}), std::invalid_argument);
    CHECK_THROWS_AS(unfold_step(facet_from_name('L'), facet_from_name('R'), 4),
                    std::invalid_argument);
}
