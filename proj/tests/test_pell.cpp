#include <doctest.h>

#include "rigidity/pell.hpp"

using namespace rigidity;

TEST_SUITE("pell") {

TEST_CASE("pell solutions start (3, 2), (48, 28)") {
    const auto one = pell_solutions(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].n_tilde == 3);
    CHECK(one[0].r_tilde == 2);

    const auto two = pell_solutions(2);
    REQUIRE(two.size() == 2);
    CHECK(two[1].n_tilde == 48);
    CHECK(two[1].r_tilde == 28);
    CHECK(BigInt(97) * 97 - 12 * BigInt(28) * 28 == 1);
}

TEST_CASE("every pell solution satisfies its equation") {
    for (const auto& s : pell_solutions(40)) {
        CHECK((2 * s.n_tilde + 1) * (2 * s.n_tilde + 1) - 12 * s.r_tilde * s.r_tilde == 1);
    }
}

TEST_CASE("degeneracy solutions and parity alternation") {
    const auto sols = degeneracy_solutions(12);
    CHECK(sols[0].n_tilde == 3);
    CHECK(sols[0].p_tilde == 1);
    CHECK_FALSE(sols[0].p_even);
    CHECK(sols[1].n_tilde == 48);
    CHECK(sols[1].p_tilde == 20);
    CHECK(sols[1].p_even);
    for (const auto& s : sols) {
        CHECK(3 * s.p_tilde * s.p_tilde - 6 * s.n_tilde * s.p_tilde +
                  s.n_tilde * (2 * s.n_tilde - 1) ==
              0);
        CHECK(s.p_even == (s.index % 2 == 0));
    }
    // (3, 1): 1 - 6 + 5 = 0
    CHECK(3 * 1 - 6 * 3 + 3 * 5 == 0);
}

TEST_CASE("pell and degeneracy recursions commute with p = n - r") {
    const auto pell = pell_solutions(15);
    const auto degen = degeneracy_solutions(15);
    for (int k = 0; k < 15; ++k) {
        CHECK(degen[k].n_tilde == pell[k].n_tilde);
        CHECK(degen[k].p_tilde == pell[k].n_tilde - pell[k].r_tilde);
    }
}

TEST_CASE("exceptional pairs pinned to the first three") {
    const auto pairs = exceptional_pairs(3);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0].n == 48);
    CHECK(pairs[0].p == 20);
    CHECK(pairs[0].mirror == 76);
    CHECK(pairs[1].n == 9408);
    CHECK(pairs[1].p == 3976);
    CHECK(pairs[2].n == 1825200);
    CHECK(pairs[2].p == 771420);
    // one recursion step by hand
    CHECK(265 * 48 - 168 * 20 + 48 == 9408);
}

TEST_CASE("growth of the exceptional dimensions") {
    const auto pairs = exceptional_pairs(8);
    for (std::size_t k = 1; k < pairs.size(); ++k) {
        CHECK(pairs[k].n > 190 * pairs[k - 1].n);
        CHECK(pairs[k].p > pairs[k - 1].p);
    }
}

TEST_CASE("brute force scan") {
    SUBCASE("n = 48 factors as expected") {
        BigInt root;
        CHECK(is_perfect_square(BigInt(48) * 49 / 3, &root));
        CHECK(root == 28);
    }
    SUBCASE("empty below the first pair") {
        CHECK(brute_force_scan(47).empty());
    }
    SUBCASE("exact solution list up to 10^4") {
        const auto sols = brute_force_scan(10000);
        REQUIRE(sols.size() == 4);
        CHECK(sols[0] == std::pair<BigInt, BigInt>(48, 20));
        CHECK(sols[1] == std::pair<BigInt, BigInt>(48, 76));
        CHECK(sols[2] == std::pair<BigInt, BigInt>(9408, 3976));
        CHECK(sols[3] == std::pair<BigInt, BigInt>(9408, 14840));
    }
    SUBCASE("odd-degree solutions at n = 3 are filtered out") {
        // n = 3 solves n(n+1) = 3 r^2 with r = 2, but p = 1, 5 are odd
        const auto sols = brute_force_scan(3);
        CHECK(sols.empty());
    }
}

TEST_CASE("scan agrees with the recursion in both directions") {
    const long bound = 1000000;
    const auto scanned = brute_force_scan(bound);
    std::vector<std::pair<BigInt, BigInt>> expected;
    for (const auto& pr : exceptional_pairs(3)) {
        if (pr.n <= bound) {
            expected.emplace_back(pr.n, pr.p);
            expected.emplace_back(pr.n, pr.mirror);
        }
    }
    CHECK(scanned == expected);
}

TEST_CASE("degree classification") {
    SUBCASE("p = 2 leaves only the middle dimension") {
        const DegreeClassification c = classify_degree(2);
        CHECK_FALSE(c.exceptional);
        REQUIRE(c.unresolved_dimensions.size() == 1);
        CHECK(c.unresolved_dimensions[0] == 1);
    }
    SUBCASE("p = 20 picks up n = 48") {
        const DegreeClassification c = classify_degree(20);
        CHECK(c.exceptional);
        CHECK(*c.generation == 1);
        CHECK(*c.exceptional_dimension == 48);
        REQUIRE(c.unresolved_dimensions.size() == 2);
        CHECK(c.unresolved_dimensions[0] == 10);
        CHECK(c.unresolved_dimensions[1] == 48);
    }
    SUBCASE("p = 76 matches through the mirror") {
        const DegreeClassification c = classify_degree(76);
        CHECK(c.exceptional);
        CHECK(*c.exceptional_dimension == 48);
    }
    SUBCASE("p = 6 is not exceptional") {
        const DegreeClassification c = classify_degree(6);
        CHECK_FALSE(c.exceptional);
        CHECK(c.unresolved_dimensions[0] == 3);
    }
    SUBCASE("later generations and their mirrors") {
        CHECK(*classify_degree(3976).exceptional_dimension == 9408);
        CHECK(*classify_degree(14840).exceptional_dimension == 9408);
        CHECK(*classify_degree(771420).exceptional_dimension == 1825200);
        CHECK(*classify_degree(2878980).exceptional_dimension == 1825200);
        CHECK_FALSE(classify_degree(771422).exceptional);
    }
    SUBCASE("degrees beyond 64 bits terminate quickly") {
        BigInt huge;
        huge.set_str("1000000000000000000000000", 10);
        const DegreeClassification c = classify_degree(huge);
        CHECK_FALSE(c.exceptional);
        CHECK(c.unresolved_dimensions[0] == huge / 2);
    }
    SUBCASE("argument validation") {
        CHECK_THROWS_AS(classify_degree(3), std::invalid_argument);
        CHECK_THROWS_AS(classify_degree(0), std::invalid_argument);
    }
}

TEST_CASE("argument validation for the generators") {
    CHECK_THROWS_AS(pell_solutions(0), std::invalid_argument);
    CHECK_THROWS_AS(degeneracy_solutions(-1), std::invalid_argument);
    CHECK_THROWS_AS(exceptional_pairs(0), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_scan(0), std::invalid_argument);
}

}  // TEST_SUITE
