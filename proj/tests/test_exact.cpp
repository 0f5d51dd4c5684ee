#include <doctest.h>

#include <random>

#include "rigidity/exact.hpp"

using namespace rigidity;

TEST_SUITE("exact") {

TEST_CASE("binomial out-of-range convention") {
    CHECK(binomial(10, -1) == 0);
    CHECK(binomial(10, 11) == 0);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(16, 2) == 120);
    CHECK(binomial(-2, 0) == 0);
    CHECK(binomial(-2, -2) == 0);
}

TEST_CASE("factorial against binomial recombination") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    for (long m : {7L, 20L, 173L}) {
        for (long p : {0L, 1L, 3L, m / 2}) {
            CHECK(factorial(m) == binomial(m, p) * factorial(p) * factorial(m - p));
        }
    }
}

TEST_CASE("isqrt agrees with the GMP square root") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 2000; ++trial) {
        BigInt v = 0;
        const int bits = 1 + static_cast<int>(rng() % 200);
        for (int b = 0; b < bits; b += 32) v = (v << 32) + static_cast<unsigned long>(rng() & 0xffffffffu);
        BigInt expected;
        mpz_sqrt(expected.get_mpz_t(), v.get_mpz_t());
        CHECK(isqrt(v) == expected);
    }
    CHECK(isqrt(BigInt(0)) == 0);
    CHECK(isqrt(BigInt(1)) == 1);
    CHECK(isqrt(BigInt(3)) == 1);
    CHECK(isqrt(BigInt(4)) == 2);
}

TEST_CASE("perfect-square detection near squares") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        BigInt r;
        for (int b = 0; b < 96; b += 32) r = (r << 32) + static_cast<unsigned long>(rng() & 0xffffffffu);
        BigInt sq = r * r, root;
        CHECK(is_perfect_square(sq, &root));
        CHECK(root == r);
        if (sq > 0) {
            CHECK_FALSE(is_perfect_square(sq - 1));
            CHECK_FALSE(is_perfect_square(sq + 1));
        }
    }
}

TEST_CASE("fraction strings round-trip") {
    const Rational q = make_rational(-21, 14);
    CHECK(fraction_string(q) == "-3/2");
    CHECK(parse_fraction("-3/2") == q);
    CHECK(parse_fraction("5") == Rational(5));
    CHECK(fraction_string(Rational(0)) == "0/1");
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction("abc"), std::invalid_argument);
}

}  // TEST_SUITE
