#include <doctest.h>

#include <algorithm>
#include <random>

#include "cubegeo/predicates.hpp"

using namespace cubegeo;

namespace {
Vec v2(long x, long y) { return Vec{Rat(x), Rat(y)}; }
Vec v3(long x, long y, long z) { return Vec{Rat(x), Rat(y), Rat(z)}; }
} // namespace

TEST_CASE("orient 2d") {
    CHECK(orient({v2(0, 0), v2(1, 0), v2(0, 1)}) == 1);
    CHECK(orient({v2(0, 0), v2(1, 1), v2(2, 2)}) == 0);
    CHECK(orient({v2(0, 0), v2(0, 1), v2(1, 0)}) == -1);
}

TEST_CASE("orient 3d") {
    CHECK(orient({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}) == 1);
    CHECK(orient({v3(0, 0, 0), v3(1, 0, 0), v3(2, 0, 0), v3(3, 0, 0)}) == 0);
}

TEST_CASE("incircle_side basic") {
    Vec a = v2(0, 0), b = v2(1, 0), c = v2(0, 1);
    CHECK(incircle_side(a, b, c, Vec{Rat(1, 2), Rat(1, 2)}) == Side::inside);
    CHECK(incircle_side(a, b, c, v2(1, 1)) == Side::on);
    CHECK(incircle_side(a, b, c, v2(2, 2)) == Side::outside);
    CHECK_THROWS_AS(incircle_side(a, v2(1, 1), v2(2, 2), c), std::invalid_argument);
}

TEST_CASE("insphere_side basic") {
    Vec a = v3(0, 0, 0), b = v3(1, 0, 0), c = v3(0, 1, 0), d = v3(0, 0, 1);
    CHECK(insphere_side(a, b, c, d, Vec{Rat(1, 4), Rat(1, 4), Rat(1, 4)}) == Side::inside);
    CHECK(insphere_side(a, b, c, d, v3(1, 1, 1)) == Side::on);
    CHECK(insphere_side(a, b, c, d, v3(2, 2, 2)) == Side::outside);
    CHECK_THROWS_AS(insphere_side(a, b, v3(2, 0, 0), v3(3, 0, 0), d), std::invalid_argument);
}

TEST_CASE("incircle/insphere permutation invariance of the combined rule") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int iter = 0; iter < 100; ++iter) {
        Vec a = v2(d(rng), d(rng)), b = v2(d(rng), d(rng)), c = v2(d(rng), d(rng));
        Vec q = v2(d(rng), d(rng));
        if (orient({a, b, c}) == 0) continue;
        Side ref = incircle_side(a, b, c, q);
        std::vector<Vec> pts = {a, b, c};
        std::sort(pts.begin(), pts.end(),
                  [](const Vec& u, const Vec& w) { return lex_less(u, w); });
        do {
            CHECK(incircle_side(pts[0], pts[1], pts[2], q) == ref);
        } while (std::next_permutation(pts.begin(), pts.end(), [](const Vec& u, const Vec& w) {
            return lex_less(u, w);
        }));
    }
}

TEST_CASE("circumcenter closed cases") {
    CHECK(circumcenter({v2(0, 0), v2(2, 0), v2(0, 2)}) == v2(1, 1));
    // bisector planes z=1, y=1, x=1 (the p_U,p_BD,p_D,p_RD configuration at the corner)
    CHECK(circumcenter({v3(0, 0, 3), v3(0, 2, -1), v3(0, 0, -1), v3(2, 0, -1)}) == v3(1, 1, 1));
    Vec cc = circumcenter({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)});
    CHECK(cc == Vec{Rat(1, 2), Rat(1, 2), Rat(1, 2)});
    CHECK_THROWS_AS(circumcenter({v3(0, 0, 0), v3(1, 0, 0), v3(2, 0, 0), v3(3, 0, 0)}),
                    std::invalid_argument);
}

TEST_CASE("circumcenter equidistance property, randomized") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Vec> pts = {v3(d(rng), d(rng), d(rng)), v3(d(rng), d(rng), d(rng)),
                                v3(d(rng), d(rng), d(rng)), v3(d(rng), d(rng), d(rng))};
        if (orient(pts) == 0) continue;
        Vec c = circumcenter(pts);
        Rat r0 = sq_dist(c, pts[0]);
        for (const Vec& p : pts) CHECK(sq_dist(c, p) == r0);
    }
}

TEST_CASE("reflect") {
    Hyperplane h(Vec{Rat(1), Rat(0), Rat(0), Rat(0)}, Rat(1, 2)); // {x = 1/2}
    Vec p{Rat(9, 10), Rat(1, 5), Rat(3, 5), Rat(0)};
    CHECK(reflect(h, p) == Vec{Rat(1, 10), Rat(1, 5), Rat(3, 5), Rat(0)});
    Hyperplane swap_ab(Vec{Rat(1), Rat(-1), Rat(0), Rat(0)}, Rat(0)); // {a = b}
    Vec q{Rat(2, 5), Rat(1, 3), Rat(1, 4), Rat(0)};
    CHECK(reflect(swap_ab, q) == Vec{Rat(1, 3), Rat(2, 5), Rat(1, 4), Rat(0)});
    // involution + fixed points, randomized
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int iter = 0; iter < 100; ++iter) {
        Vec n{Rat(d(rng)), Rat(d(rng)), Rat(d(rng)), Rat(d(rng))};
        if (sq_norm(n).is_zero()) continue;
        Hyperplane hh(n, Rat(d(rng), 7));
        Vec x{Rat(d(rng), 3), Rat(d(rng), 5), Rat(d(rng), 2), Rat(d(rng), 9)};
        CHECK(reflect(hh, reflect(hh, x)) == x);
    }
    CHECK(reflect(h, Vec{Rat(1, 2), Rat(7, 9), Rat(0), Rat(1)}) ==
          Vec{Rat(1, 2), Rat(7, 9), Rat(0), Rat(1)});
    CHECK_THROWS_AS(Hyperplane(Vec{Rat(0), Rat(0)}, Rat(1)), std::invalid_argument);
}
