#include "rigidity/heat_coefficients.hpp"

#include <stdexcept>

namespace rigidity {

namespace {

void check_domain(long m, long p) {
    if (m < 4 || m % 2 != 0) {
        throw std::invalid_argument("dimension m must be even and >= 4, got " + std::to_string(m));
    }
    if (p < 0 || p > m) {
        throw std::invalid_argument("form degree p must lie in [0, m], got " + std::to_string(p));
    }
}

}  // namespace

PatodiTriple patodi_lambdas(long m, long p) {
    check_domain(m, p);
    const Rational b0(binomial(m, p));
    const Rational b1(binomial(m - 2, p - 1));
    const Rational b2(binomial(m - 4, p - 2));
    PatodiTriple t{m, p, {}, {}, {}};
    t.lambda1 = make_rational(1, 180) * b0 - make_rational(1, 12) * b1 + make_rational(1, 2) * b2;
    t.lambda2 = make_rational(-1, 180) * b0 + make_rational(1, 2) * b1 - Rational(2) * b2;
    t.lambda3 = make_rational(1, 72) * b0 - make_rational(1, 6) * b1 + make_rational(1, 2) * b2;
    return t;
}

Rational a1_coefficient(long m, long p) {
    check_domain(m, p);
    const Rational binomial_form =
        make_rational(1, 6) * Rational(binomial(m, p)) - Rational(binomial(m - 2, p - 1));
    // (m-2)!/(p!(m-p)!) [p^2 - mp + m(m-1)/6]; the two routes must agree.
    const Rational prefactor =
        make_rational(factorial(static_cast<unsigned long>(m - 2)),
                      factorial(static_cast<unsigned long>(p)) *
                          factorial(static_cast<unsigned long>(m - p)));
    const Rational quadratic =
        Rational(p) * Rational(p) - Rational(m) * Rational(p) + make_rational(m * (m - 1), 6);
    if (prefactor * quadratic != binomial_form) {
        throw std::logic_error("a1_coefficient: binomial and factored forms disagree at m=" +
                               std::to_string(m) + " p=" + std::to_string(p));
    }
    return binomial_form;
}

HeatCoefficientReport kahler_a2_coefficients(long n, long p) {
    if (n < 2) throw std::invalid_argument("complex dimension n must be >= 2");
    const long m = 2 * n;
    const PatodiTriple t = patodi_lambdas(m, p);
    HeatCoefficientReport r{n, p, {}, {}, {}, {}, {}, {}};
    r.a0_coeff = Rational(binomial(m, p));
    r.a1_coeff = a1_coefficient(m, p);
    r.kahler_s2 = make_rational(2, n * (n + 1)) * t.lambda1 +
                  make_rational(1, 2 * n) * t.lambda2 + t.lambda3;
    r.kahler_ric = make_rational(16, n + 2) * t.lambda1 + Rational(2) * t.lambda2;
    r.kahler_bochner = Rational(4) * t.lambda1;
    r.key_combination = make_rational(4 * n + 2, (n + 1) * (n + 2)) * t.lambda1 +
                        make_rational(1, 2) * t.lambda2 + t.lambda3;
    return r;
}

Rational key_combination(long n, long p) {
    if (n < 2) throw std::invalid_argument("complex dimension n must be >= 2");
    if (p % 2 != 0 || p < 2 || p > 2 * (n - 1)) {
        throw std::invalid_argument("key_combination requires even p with 2 <= p <= 2(n-1)");
    }
    const PatodiTriple t = patodi_lambdas(2 * n, p);
    return make_rational(4 * n + 2, (n + 1) * (n + 2)) * t.lambda1 +
           make_rational(1, 2) * t.lambda2 + t.lambda3;
}

IdentityCertificate verify_key_combination_identity(long n) {
    if (n < 2) throw std::invalid_argument("complex dimension n must be >= 2");
    IdentityCertificate cert;
    cert.n = n;

    // (i) Column checks: raw s^2 / tracefree-Ricci / Bochner weights combined
    // with the elimination factor (n-1)/(4n) must give the key-combination
    // weights. The Bochner column carries no Ricci term, so it is untouched.
    const Rational elim = make_rational(n - 1, 4 * n);
    const struct {
        const char* name;
        Rational lhs;
        Rational rhs;
    } columns[] = {
        {"lambda1", make_rational(2, n * (n + 1)) + make_rational(16, n + 2) * elim,
         make_rational(4 * n + 2, (n + 1) * (n + 2))},
        {"lambda2", make_rational(1, 2 * n) + Rational(2) * elim, make_rational(1, 2)},
        {"lambda3", Rational(1), Rational(1)},
    };
    for (const auto& col : columns) {
        if (col.lhs != col.rhs) {
            cert.failures.push_back(
                {n, col.name, fraction_string(col.lhs), fraction_string(col.rhs)});
        }
    }

    // (ii) Agreement with the binomial closed form for every even p in range,
    // with the binomials updated incrementally along p.
    const long m = 2 * n;
    const Rational c0 = make_rational(m * m + 10 * m + 12, 90 * (m + 2) * (m + 4));
    const Rational c1 = make_rational(m * (m - 2), 12 * (m + 2) * (m + 4));
    const Rational c2 = make_rational(-m * (m - 2), 2 * (m + 2) * (m + 4));
    BigInt b0 = binomial(m, 2);
    BigInt b1 = binomial(m - 2, 1);
    BigInt b2 = binomial(m - 4, 0);
    for (long p = 2; p <= m - 2; p += 2) {
        const Rational lhs = key_combination(n, p);
        const Rational rhs = c0 * Rational(b0) + c1 * Rational(b1) + c2 * Rational(b2);
        ++cert.degrees_checked;
        if (lhs != rhs) {
            cert.failures.push_back({n, "p=" + std::to_string(p), fraction_string(lhs),
                                     fraction_string(rhs)});
        }
        if (p + 2 <= m - 2) {
            b0 *= static_cast<unsigned long>((m - p) * (m - p - 1));
            mpz_divexact_ui(b0.get_mpz_t(), b0.get_mpz_t(),
                            static_cast<unsigned long>((p + 1) * (p + 2)));
            b1 *= static_cast<unsigned long>((m - p - 1) * (m - p - 2));
            mpz_divexact_ui(b1.get_mpz_t(), b1.get_mpz_t(),
                            static_cast<unsigned long>(p * (p + 1)));
            b2 *= static_cast<unsigned long>((m - p - 2) * (m - p - 3));
            mpz_divexact_ui(b2.get_mpz_t(), b2.get_mpz_t(),
                            static_cast<unsigned long>((p - 1) * p));
        }
    }

    cert.certified = cert.failures.empty();
    return cert;
}

}  // namespace rigidity
