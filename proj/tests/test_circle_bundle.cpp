#include <doctest.h>

#include <random>

#include "rigidity/circle_bundle.hpp"

using namespace rigidity;

TEST_SUITE("circle_bundle") {

TEST_CASE("pi-graded arithmetic") {
    const PiScaled a(make_rational(3, 2), 2);
    const PiScaled b(make_rational(1, 2), 2);
    CHECK((a + b).coeff() == 2);
    CHECK((a + b).pi_power() == 2);
    CHECK((a * b).pi_power() == 4);
    CHECK((a * PiScaled(Rational(1), -2)).pi_power() == 0);
    CHECK_THROWS_AS(a + PiScaled(Rational(1), 1), std::domain_error);
    // zero is grade-polymorphic
    CHECK((a + PiScaled()).coeff() == a.coeff());
    CHECK(PiScaled(Rational(0), 5) == PiScaled());
    CHECK(a.str() == "3/2 * pi^2");
    CHECK(PiScaled(make_rational(1, 3), 0).str() == "1/3");
    CHECK_THROWS_AS(a.rational(), std::domain_error);
}

TEST_CASE("connection square values") {
    // -(s/(8 n pi I))^2 at n=1, s=4, I=2 gives -1/(16 pi^2)
    const PiScaled sq = connection_square(1, Rational(4), 2);
    CHECK(sq.coeff() == make_rational(-1, 16));
    CHECK(sq.pi_power() == -2);
    // homogeneity: doubling s quadruples the magnitude
    const PiScaled sq2 = connection_square(1, Rational(8), 2);
    CHECK(sq2.coeff() == 4 * sq.coeff());
    // the block-matrix verification runs for larger n too
    CHECK_NOTHROW(connection_square(5, make_rational(7, 3), 2));
    CHECK_THROWS_AS(connection_square(1, Rational(0), 1), std::invalid_argument);
    CHECK_THROWS_AS(connection_square(1, Rational(1), 0), std::invalid_argument);
}

TEST_CASE("bundle ricci at the Einstein parameter") {
    // a^2 = 16 pi^2 I^2 n / (s (n+1)) makes both blocks equal s/(2(n+1))
    const long n = 2;
    const Rational s(12);
    const long index = 3;
    const PiScaled a2 = einstein_parameter_squared(n, s, index);
    CHECK(a2 == PiScaled(Rational(16 * 9 * 2) / (s * Rational(3)), 2));
    const BundleRicci r = bundle_ricci(n, s, index, a2);
    CHECK(r.r_tangent == s / Rational(2 * (n + 1)));
    CHECK(r.r_fiber == r.r_tangent);
    CHECK(r.r_mixed == 0);
}

TEST_CASE("einstein parameter pinned value") {
    // n=1, I=2, s=8: 16 pi^2 * 4 * 1 / (8 * 2) = 4 pi^2
    const PiScaled a2 = einstein_parameter_squared(1, Rational(8), 2);
    CHECK(a2.coeff() == 4);
    CHECK(a2.pi_power() == 2);
}

TEST_CASE("degenerate fiber limit") {
    const BundleRicci r = bundle_ricci(3, Rational(6), 2, PiScaled());
    CHECK(r.r_tangent == Rational(1));  // s/(2n)
    CHECK(r.r_fiber == 0);
}

TEST_CASE("sampled a^2 against the closed forms") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 30; ++trial) {
        const long n = 1 + static_cast<long>(rng() % 6);
        const Rational s = make_rational(1 + rng() % 40, 1 + rng() % 7);
        const long index = 1 + static_cast<long>(rng() % 5);
        const Rational q = make_rational(1 + rng() % 50, 1 + rng() % 9);
        const BundleRicci r = bundle_ricci(n, s, index, PiScaled(q, 2));
        // closed forms of the substituted Ricci entries
        const Rational scale2 = s * s / Rational(64 * n * n * index * index);
        CHECK(r.r_tangent == s / Rational(2 * n) - 2 * q * scale2);
        CHECK(r.r_fiber == s * s * q / (Rational(2 * n) * Rational(16 * index * index)));
        CHECK(r.r_mixed == 0);
    }
}

TEST_CASE("homogeneity of the ricci data") {
    const long n = 3;
    const Rational s(10);
    const long index = 2;
    const Rational q = make_rational(5, 7);
    const BundleRicci base = bundle_ricci(n, s, index, PiScaled(q, 2));
    for (long t : {2L, 3L, 12L}) {
        const BundleRicci scaled = bundle_ricci(n, Rational(t) * s, index,
                                                PiScaled(q / Rational(t), 2));
        CHECK(scaled.r_tangent == Rational(t) * base.r_tangent);
        CHECK(scaled.r_fiber == Rational(t) * base.r_fiber);
    }
}

TEST_CASE("einstein a^2 is the unique solution of tangent = fiber") {
    // r_tangent(a^2) - r_fiber(a^2) is linear in a^2; solve it exactly
    const long n = 4;
    const Rational s = make_rational(22, 3);
    const long index = 5;
    const Rational scale2 = s * s / Rational(64 * n * n * index * index);
    // s/(2n) - 2 q scale2 = 2n q scale2  =>  q = s / (2n (2n+2) scale2)
    const Rational q = s / (Rational(2 * n) * Rational(2 * n + 2) * scale2);
    CHECK(PiScaled(q, 2) == einstein_parameter_squared(n, s, index));
}

TEST_CASE("einstein check across random parameters") {
    std::mt19937_64 rng(31415);
    for (int trial = 0; trial < 50; ++trial) {
        const long n = 1 + static_cast<long>(rng() % 20);
        const Rational s = make_rational(1 + rng() % 60, 1 + rng() % 11);
        const long index = 1 + static_cast<long>(rng() % (n + 1));
        CHECK_NOTHROW(einstein_parameter_squared(n, s, index));
    }
}

TEST_CASE("sphere scalar curvature consistency") {
    // constant curvature c = s/(4n(n+1)) on a (2n+1)-manifold has scalar
    // c m (m-1) = s (2n+1) / (2(n+1))
    for (long n : {1L, 2L, 7L}) {
        const Rational s = make_rational(9, 2);
        const Rational c = s / Rational(4 * n * (n + 1));
        const Rational scalar = c * Rational(2 * n + 1) * Rational(2 * n);
        CHECK(scalar == s * Rational(2 * n + 1) / Rational(2 * (n + 1)));
    }
}

TEST_CASE("volume bound") {
    SUBCASE("model case I = n+1 has ratio one") {
        const VolumeBound b = volume_bound(6, 7);
        CHECK(b.ratio == 1);
        CHECK(b.degree_bound == Rational(BigInt(7) * 7 * 7 * 7 * 7 * 7));
    }
    SUBCASE("n = 3, I = 1") {
        const VolumeBound b = volume_bound(3, 1);
        CHECK(b.ratio == 4);
        CHECK(b.degree_bound == 256);  // (n+1)/I * (n+1)^n = 4 * 64
    }
    SUBCASE("index beyond n+1 is rejected") {
        CHECK_THROWS_AS(volume_bound(3, 5), std::invalid_argument);
        CHECK_THROWS_AS(volume_bound(3, 0), std::invalid_argument);
    }
}

TEST_CASE("volume relation") {
    const PiScaled doubled = volume_relation(Rational(1), PiScaled(Rational(1), 0));
    CHECK(doubled == PiScaled(Rational(2), 1));
    CHECK(volume_relation(Rational(0), PiScaled(Rational(3), 1)).is_zero());
    CHECK_THROWS_AS(volume_relation(Rational(1), PiScaled(Rational(1), 2)), std::domain_error);

    // the two instances of the volume relation with a common irrational
    // factor cancel to the ratio (n+1)/I: write a_I = I q, a_model = (n+1) q
    const long n = 4;
    const Rational q = make_rational(3, 11);
    for (long idx = 1; idx <= n + 1; ++idx) {
        const PiScaled vol_bundle = volume_relation(Rational(7), PiScaled(Rational(idx) * q, 1));
        const PiScaled vol_model = volume_relation(Rational(7), PiScaled(Rational(n + 1) * q, 1));
        CHECK(vol_model.coeff() / vol_bundle.coeff() ==
              Rational(n + 1) / Rational(idx));
    }
}

TEST_CASE("pi cancellation across the ricci components") {
    std::mt19937_64 rng(161803);
    for (int trial = 0; trial < 20; ++trial) {
        const long n = 1 + static_cast<long>(rng() % 8);
        const Rational s = make_rational(1 + rng() % 30, 1 + rng() % 9);
        const long index = 1 + static_cast<long>(rng() % 6);
        const Rational q = make_rational(1 + rng() % 90, 1 + rng() % 13);
        CHECK_NOTHROW(bundle_ricci(n, s, index, PiScaled(q, 2)));
        CHECK_THROWS_AS(bundle_ricci(n, s, index, PiScaled(q, 1)), std::domain_error);
    }
}

TEST_CASE("full curvature route reproduces the ricci data") {
    std::mt19937_64 rng(577215);
    for (long n : {1L, 2L, 3L}) {
        for (int trial = 0; trial < 10; ++trial) {
            const Rational s = make_rational(1 + rng() % 30, 1 + rng() % 7);
            const long index = 1 + static_cast<long>(rng() % 4);
            const Rational q = make_rational(rng() % 40, 1 + rng() % 9);
            const PiScaled a2(q, 2);
            const BundleRicci direct = bundle_ricci(n, s, index, a2);
            const BundleRicci full = bundle_ricci_via_full_curvature(n, s, index, a2);
            CHECK(direct.r_tangent == full.r_tangent);
            CHECK(direct.r_fiber == full.r_fiber);
            CHECK(direct.r_mixed == full.r_mixed);
        }
        // including the Einstein parameter itself
        const Rational s(5);
        const PiScaled a2 = einstein_parameter_squared(n, s, 1);
        const BundleRicci direct = bundle_ricci(n, s, 1, a2);
        const BundleRicci full = bundle_ricci_via_full_curvature(n, s, 1, a2);
        CHECK(direct.r_tangent == full.r_tangent);
        CHECK(direct.r_fiber == full.r_fiber);
    }
}

TEST_CASE("bundle data bundles the derived quantities") {
    const BundleData d = make_bundle_data(2, Rational(12), 3);
    CHECK(d.connection_scale == PiScaled(make_rational(12, 48), -1));
    CHECK((d.a_squared * d.connection_scale * d.connection_scale).pi_power() == 0);
}

}  // TEST_SUITE
