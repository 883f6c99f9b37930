#include "doctest.h"

#include <random>

#include "antlyzer/scalar.hpp"
#include "test_util.hpp"

using namespace antlyzer;
using testutil::sign_oracle;

TEST_CASE("square roots of perfect squares collapse to rationals") {
    CHECK(scalar::sqrt_int(4) == scalar(2));
    CHECK(scalar::sqrt_int(0).is_zero());
    CHECK(scalar::sqrt_int(1) == scalar(1));
    CHECK(scalar::sqrt_rational(rational(9, 4)) == scalar(rational(3, 2)));
    CHECK_THROWS_AS(scalar::sqrt_int(bigint(-2)), math_error);
}

TEST_CASE("square factors are pulled out of the radical") {
    // sqrt(8) = 2 sqrt(2), sqrt(12) = 2 sqrt(3)
    CHECK(scalar::sqrt_int(8) == scalar(2) * scalar::sqrt_int(2));
    CHECK(scalar::sqrt_int(12) == scalar(2) * scalar::sqrt_int(3));
    CHECK(scalar::sqrt_int(8).str() == "2*sqrt(2)");
    // sqrt(2) * sqrt(3) = sqrt(6), represented over the prime basis {2, 3}
    CHECK(scalar::sqrt_int(2) * scalar::sqrt_int(3) == scalar::sqrt_int(6));
    CHECK(scalar::sqrt_int(6) * scalar::sqrt_int(6) == scalar(6));
    CHECK(scalar::sqrt_int(6).str() == "sqrt(6)");
}

TEST_CASE("golden ratio arithmetic is exact") {
    const scalar phi = (scalar(1) + scalar::sqrt_int(5)) / scalar(2);
    const scalar psi = (scalar(1) - scalar::sqrt_int(5)) / scalar(2);
    CHECK(phi * phi == phi + scalar(1)); // x^2 = x + 1
    CHECK(phi + psi == scalar(1));
    CHECK(phi * psi == scalar(-1));
    CHECK(phi.sign() == 1);
    CHECK(psi.sign() == -1);
    CHECK(phi.inverse() == phi - scalar(1));
    CHECK(phi.str() == "1/2+1/2*sqrt(5)");
    // rational bracketing: 1618/1000 < phi < 1619/1000
    CHECK((phi - scalar(rational(1618, 1000))).sign() == 1);
    CHECK((phi - scalar(rational(1619, 1000))).sign() == -1);
    CHECK(phi.floor() == 1);
    CHECK(psi.floor() == -1);
}

TEST_CASE("multi-radical expansion keeps products exact") {
    const scalar s = scalar::sqrt_int(2) + scalar::sqrt_int(3);
    CHECK(s * s == scalar(5) + scalar(2) * scalar::sqrt_int(6));
    CHECK(s.sign() == 1);
    CHECK((s * s - scalar(5) - scalar(2) * scalar::sqrt_int(6)).is_zero());
    // (sqrt(3) - sqrt(2)) is the inverse of (sqrt(3) + sqrt(2))
    const scalar t = scalar::sqrt_int(3) - scalar::sqrt_int(2);
    CHECK(s * t == scalar(1));
    CHECK(s.inverse() == t);
}

TEST_CASE("sign agrees with the integer-sqrt interval oracle") {
    std::mt19937_64 rng(21);
    const long rads[] = {2, 3, 5, 7, 6, 10};
    std::uniform_int_distribution<size_t> pick(0, 5);
    for (int t = 0; t < 300; ++t) {
        scalar v = scalar(testutil::rand_rational(rng, 20));
        const int parts = 1 + static_cast<int>(t % 3);
        for (int i = 0; i < parts; ++i)
            v += scalar(testutil::rand_rational(rng, 20)) *
                 scalar::sqrt_int(rads[pick(rng)]);
        CHECK(v.sign() == sign_oracle(v));
        if (!v.is_zero()) {
            CHECK((v * v).sign() == 1);
            CHECK((v * v.inverse()) == scalar(1));
            CHECK((-v).sign() == -v.sign());
        }
    }
}

TEST_CASE("near-tie signs are resolved exactly") {
    // sqrt(2) + sqrt(3) vs sqrt(10): squares 5 + 2 sqrt(6) ~ 9.898 vs 10
    const scalar a = scalar::sqrt_int(2) + scalar::sqrt_int(3);
    const scalar b = scalar::sqrt_int(10);
    CHECK(cmp(a, b) == -1);
    CHECK(sign_oracle(a - b) == -1);
    // 3363/2378 is a continued-fraction convergent of sqrt(2)
    const scalar c = scalar::sqrt_int(2) - scalar(rational(3363, 2378));
    CHECK(c.sign() == sign_oracle(c));
    CHECK(c.sign() == -1);
}

TEST_CASE("floor handles irrational values") {
    CHECK(scalar::sqrt_int(2).floor() == 1);
    CHECK((-scalar::sqrt_int(2)).floor() == -2);
    CHECK((scalar(3) * scalar::sqrt_int(2)).floor() == 4); // 4.24..
    CHECK(scalar(rational(-7, 2)).floor() == -4);
}

TEST_CASE("scalar str round-trips structure") {
    CHECK(scalar(rational(-3, 4)).str() == "-3/4");
    CHECK((scalar(1) + scalar::sqrt_int(2) * scalar(rational(1, 3))).str() == "1+1/3*sqrt(2)");
    CHECK(scalar(0).str() == "0");
    CHECK((-scalar::sqrt_int(7)).str() == "-sqrt(7)");
}
