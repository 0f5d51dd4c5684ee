#include <doctest.h>

#include "rigidity/heat_coefficients.hpp"
#include "rigidity/pell.hpp"

using namespace rigidity;

TEST_SUITE("heat_coefficients") {

TEST_CASE("patodi triple pinned values") {
    // (16, 2): the equality case of the nonnegativity statement
    const PatodiTriple zero_case = patodi_lambdas(16, 2);
    CHECK(zero_case.lambda1 == 0);

    // p = 0: only C(m, 0) = 1 survives
    for (long m : {4L, 10L, 16L, 344L}) {
        const PatodiTriple t = patodi_lambdas(m, 0);
        CHECK(t.lambda1 == make_rational(1, 180));
        CHECK(t.lambda2 == make_rational(-1, 180));
        CHECK(t.lambda3 == make_rational(1, 72));
    }

    // big-rational oracle value computed independently ahead of the build
    const PatodiTriple t42 = patodi_lambdas(4, 2);
    CHECK(t42.lambda1 == make_rational(11, 30));
    CHECK(t42.lambda2 == make_rational(-31, 30));
    CHECK(t42.lambda3 == make_rational(1, 4));
}

TEST_CASE("patodi domain errors") {
    CHECK_THROWS_AS(patodi_lambdas(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(patodi_lambdas(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(patodi_lambdas(8, -1), std::invalid_argument);
    CHECK_THROWS_AS(patodi_lambdas(8, 9), std::invalid_argument);
}

TEST_CASE("binomial symmetry lambda(m, p) = lambda(m, m-p)") {
    for (long m = 4; m <= 60; m += 2) {
        for (long p = 0; p <= m; ++p) {
            const PatodiTriple a = patodi_lambdas(m, p);
            const PatodiTriple b = patodi_lambdas(m, m - p);
            CHECK(a.lambda1 == b.lambda1);
            CHECK(a.lambda2 == b.lambda2);
            CHECK(a.lambda3 == b.lambda3);
            CHECK(a1_coefficient(m, p) == a1_coefficient(m, m - p));
        }
    }
}

TEST_CASE("denominators divide 360 p! (m-p)!") {
    for (long m = 4; m <= 40; m += 2) {
        for (long p = 0; p <= m; ++p) {
            const PatodiTriple t = patodi_lambdas(m, p);
            const BigInt bound = 360 * factorial(p) * factorial(m - p);
            for (const Rational* lam : {&t.lambda1, &t.lambda2, &t.lambda3}) {
                CHECK(mpz_divisible_p(bound.get_mpz_t(), lam->get_den().get_mpz_t()));
            }
        }
    }
}

TEST_CASE("a1 coefficient pinned values") {
    CHECK(a1_coefficient(96, 20) == 0);  // (n, p) = (48, 20) solves the degeneracy equation
    for (long m : {4L, 12L, 96L}) CHECK(a1_coefficient(m, 0) == make_rational(1, 6));
    CHECK(a1_coefficient(6, 2) == make_rational(-3, 2));
}

TEST_CASE("a1 factored and binomial forms agree up to m = 400") {
    // a1_coefficient recomputes both routes internally and throws on mismatch
    for (long m = 4; m <= 400; m += 2) {
        for (long p = 0; p <= m; ++p) CHECK_NOTHROW(a1_coefficient(m, p));
    }
}

TEST_CASE("a1 zero set matches the enumerated degeneracy solutions") {
    const auto solutions = brute_force_scan(10000);
    REQUIRE(solutions.size() == 4);
    for (const auto& [n, p] : solutions) {
        CHECK(a1_coefficient(2 * n.get_si(), p.get_si()) == 0);
    }
    // nearby non-solutions stay nonzero
    CHECK(a1_coefficient(96, 18) != 0);
    CHECK(a1_coefficient(96, 22) != 0);
    CHECK(a1_coefficient(94, 20) != 0);
}

TEST_CASE("kahler a2 coefficient report") {
    SUBCASE("bochner weight vanishes exactly at (p, m) = (2, 16)") {
        const HeatCoefficientReport r = kahler_a2_coefficients(8, 2);
        CHECK(r.kahler_bochner == 0);
        CHECK(r.kahler_bochner == 4 * patodi_lambdas(16, 2).lambda1);
    }
    SUBCASE("linear forms at the (4, 2) triple") {
        // oracle: substitute (11/30, -31/30, 1/4) into the three forms
        const HeatCoefficientReport r = kahler_a2_coefficients(2, 2);
        CHECK(r.kahler_s2 == make_rational(41, 360));
        CHECK(r.kahler_ric == make_rational(-3, 5));
        CHECK(r.kahler_bochner == make_rational(22, 15));
    }
    SUBCASE("report stays tied to the standalone operations") {
        const HeatCoefficientReport r = kahler_a2_coefficients(5, 4);
        CHECK(r.a1_coeff == a1_coefficient(10, 4));
        CHECK(r.key_combination == key_combination(5, 4));
    }
}

TEST_CASE("key combination pinned values and range errors") {
    CHECK(key_combination(8, 2) > 0);
    CHECK(key_combination(5, 4) == make_rational(67, 42));  // both routes, precomputed
    CHECK_THROWS_AS(key_combination(5, 3), std::invalid_argument);   // odd p
    CHECK_THROWS_AS(key_combination(5, 0), std::invalid_argument);   // below range
    CHECK_THROWS_AS(key_combination(5, 10), std::invalid_argument);  // p = 2n
}

TEST_CASE("zero triple sends every linear form to zero") {
    // linearity: the forms have no constant term, so the zero triple maps to 0;
    // realized by m = 16, p = 2 for the lambda1 column
    const PatodiTriple t = patodi_lambdas(16, 2);
    CHECK(4 * t.lambda1 == 0);
}

TEST_CASE("key combination identity certificate") {
    for (long n : {2L, 8L, 500L}) {
        const IdentityCertificate cert = verify_key_combination_identity(n);
        CHECK(cert.certified);
        CHECK(cert.failures.empty());
        CHECK(cert.degrees_checked == static_cast<unsigned long>(n - 1));
    }
}

TEST_CASE("lambda2 column of the identity at n = 2") {
    // (1/(2n)) + 2 (n-1)/(4n) = 1/2 reads 1/4 + 1/4 = 1/2 at n = 2
    const Rational lhs = make_rational(1, 4) + Rational(2) * make_rational(1, 8);
    CHECK(lhs == make_rational(1, 2));
}

TEST_CASE("key combination equals the closed form for n <= 200") {
    for (long n = 2; n <= 200; ++n) CHECK(verify_key_combination_identity(n).certified);
}

}  // TEST_SUITE
