#include <doctest.h>

#include <random>

#include "cubegeo/rat.hpp"

using cubegeo::Rat;

TEST_CASE("canonical form") {
    Rat r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rat(4, 2).to_string() == "2");
    CHECK(Rat(0, 7) == Rat(0));
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat(1, 2) / Rat(0), std::domain_error);
}

TEST_CASE("parsing") {
    CHECK(Rat::parse("3329/900") == Rat(3329, 900));
    CHECK(Rat::parse("-7/2") == Rat(-7, 2));
    CHECK(Rat::parse("0.9") == Rat(9, 10));
    CHECK(Rat::parse("42") == Rat(42));
    CHECK(Rat::parse("-0.125") == Rat(-1, 8));
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1//2"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("2x"), std::invalid_argument);
    // position is reported
    try {
        Rat::parse("12/ab");
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("position 3") != std::string::npos);
    }
}

TEST_CASE("round trip through to_string") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-10000, 10000);
    for (int i = 0; i < 200; ++i) {
        long den = d(rng);
        if (den == 0) den = 1;
        Rat r(d(rng), den);
        CHECK(Rat::parse(r.to_string()) == r);
    }
}

TEST_CASE("field axioms, randomized") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-50, 50);
    auto rnd = [&] {
        long den = 0;
        while (den == 0) den = d(rng);
        return Rat(d(rng), den);
    };
    for (int i = 0; i < 300; ++i) {
        Rat a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a / a == Rat(1));
    }
}

TEST_CASE("to_double rounds to nearest") {
    CHECK(Rat(1, 2).to_double() == 0.5);
    CHECK(Rat(1, 3).to_double() == doctest::Approx(1.0 / 3).epsilon(1e-16));
    Rat tiny(1, 1);
    for (int i = 0; i < 60; ++i) tiny = tiny / Rat(2);
    CHECK((Rat(1) + tiny).to_double() == 1.0);
}

TEST_CASE("from_double_exact and snap") {
    CHECK(Rat::from_double_exact(0.5) == Rat(1, 2));
    CHECK(Rat::from_double_exact(0.1) != Rat(1, 10)); // 0.1 is not exactly representable
    CHECK(Rat(1, 3).snap_to_pow2(4) == Rat(5, 16));
    CHECK(Rat(1, 10).snap_to_pow2(1) == Rat(0));
    CHECK(Rat(-1, 3).snap_to_pow2(4) == Rat(-5, 16));
}
