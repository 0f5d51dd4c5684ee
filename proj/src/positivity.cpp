#include "rigidity/positivity.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace rigidity {

namespace {

void check_even_dimension(long m) {
    if (m < 4 || m % 2 != 0) {
        throw std::invalid_argument("dimension m must be even and >= 4, got " + std::to_string(m));
    }
}

}  // namespace

CombinationCoefficients case1_coefficients(long m) {
    check_even_dimension(m);
    const long d = (m + 2) * (m + 4);
    return {make_rational(m * m + 10 * m + 12, 90 * d), make_rational(m * (m - 2), 12 * d),
            make_rational(-m * (m - 2), 2 * d)};
}

CombinationCoefficients case2_coefficients() {
    return {make_rational(1, 180), make_rational(-1, 12), make_rational(1, 2)};
}

Rational f_polynomial(const Rational& p, long m, const CombinationCoefficients& c) {
    const Rational mp = Rational(m) - p;
    return c.alpha * Rational(m * (m - 1) * (m - 2) * (m - 3)) +
           c.beta * Rational((m - 2) * (m - 3)) * p * mp +
           c.gamma * p * (p - 1) * mp * (mp - 1);
}

Rational g_polynomial(const Rational& p, long m, const CombinationCoefficients& c) {
    return f_polynomial(p, m, c) - c.alpha * Rational(m * (m - 1) * (m - 2) * (m - 3));
}

Rational h_polynomial(const Rational& p, long m, const CombinationCoefficients& c) {
    return Rational(2) * c.gamma * p * p - Rational(2) * c.gamma * Rational(m) * p +
           c.gamma * Rational(m - 1) - c.beta * Rational((m - 2) * (m - 3));
}

Rational eval_f(long p, long m, const CombinationCoefficients& c) {
    check_even_dimension(m);
    if (p < 2 || p > m - 2) {
        throw std::invalid_argument("eval_f requires 2 <= p <= m-2, got p=" + std::to_string(p));
    }
    const Rational f = f_polynomial(Rational(p), m, c);
    const Rational prefactor =
        make_rational(factorial(static_cast<unsigned long>(m - 4)),
                      factorial(static_cast<unsigned long>(p)) *
                          factorial(static_cast<unsigned long>(m - p)));
    const Rational binomial_form = c.alpha * Rational(binomial(m, p)) +
                                   c.beta * Rational(binomial(m - 2, p - 1)) +
                                   c.gamma * Rational(binomial(m - 4, p - 2));
    if (prefactor * f != binomial_form) {
        throw std::logic_error("eval_f: polynomial and binomial routes disagree at m=" +
                               std::to_string(m) + " p=" + std::to_string(p));
    }
    return f;
}

CriticalPointAnalysis analyze_critical_points(long m, const CombinationCoefficients& c) {
    check_even_dimension(m);
    CriticalPointAnalysis a;
    a.m = m;
    a.p1 = make_rational(m, 2);
    a.g_second_at_p1 = (Rational(-2) * c.beta - c.gamma) * Rational(m) * Rational(m) +
                       (Rational(10) * c.beta + Rational(2) * c.gamma) * Rational(m) +
                       (Rational(-12) * c.beta - Rational(2) * c.gamma);
    a.gamma_is_zero = (c.gamma == 0);
    if (a.gamma_is_zero) return a;

    // h(p) = 0  <=>  p^2 - mp = (beta/(2 gamma))(m-2)(m-3) - (m-1)/2, so the
    // roots are m/2 +- sqrt(disc) with disc as below.
    const Rational shift =
        c.beta / (Rational(2) * c.gamma) * Rational((m - 2) * (m - 3)) - make_rational(m - 1, 2);
    const Rational disc = make_rational(m * m, 4) + shift;
    a.p23_discriminant = disc;

    const Rational bracket = c.beta * Rational((m - 2) * (m - 3)) - c.gamma * Rational(m - 1);
    a.g_at_p23 = -bracket * bracket / (Rational(4) * c.gamma);

    if (disc >= 0) {
        // g''(p23) = 2 gamma (2 p23 - m)^2 = 8 gamma disc
        a.g_second_sign_at_p23 = sign(Rational(8) * c.gamma * disc);
        // m/2 +- sqrt(disc) in [2, m-2]  <=>  disc <= ((m-4)/2)^2
        const Rational edge = make_rational((m - 4) * (m - 4), 4);
        a.p23_in_range = (disc <= edge);
    }
    return a;
}

ClosedFormCheck verify_closed_forms(long m) {
    check_even_dimension(m);
    ClosedFormCheck check;
    check.m = m;
    const CombinationCoefficients one = case1_coefficients(m);
    const CombinationCoefficients two = case2_coefficients();

    const BigInt mm(m);
    const Rational rhs1 =
        make_rational(m * (m - 2), 1440 * (m + 2) * (m + 4)) *
        Rational(mm * mm * mm * mm + 126 * mm * mm * mm - 400 * mm * mm - 288 * mm + 576);
    const Rational rhs2 = make_rational(m * (m - 2) * (m - 3), 90 * (m + 2) * (m + 4)) *
                          Rational(mm * mm * mm + 24 * mm * mm - 148 * mm + 228);
    const Rational rhs3 =
        make_rational(1, 180) * Rational((mm - 2) * (mm - 3) * (mm - 15) * (mm - 16));
    const Rational rhs4 =
        make_rational(m, 1440) * Rational(3 * mm * mm * mm - 58 * mm * mm + 83 * mm - 48);

    const Rational lhs1 = f_polynomial(make_rational(m, 2), m, one);
    const Rational lhs2 = f_polynomial(Rational(2), m, one);
    const Rational lhs3 = f_polynomial(Rational(2), m, two);
    // f(p23) for case 2 via the critical-point substitution: the value is
    // alpha m(m-1)(m-2)(m-3) + g(p23) with g(p23) rational.
    const CriticalPointAnalysis cp2 = analyze_critical_points(m, two);
    const Rational lhs4 =
        two.alpha * Rational(m * (m - 1) * (m - 2) * (m - 3)) + *cp2.g_at_p23;

    const struct {
        const char* name;
        const Rational& lhs;
        const Rational& rhs;
    } identities[] = {
        {"case1 f(m/2)", lhs1, rhs1},
        {"case1 f(2)", lhs2, rhs2},
        {"case2 f(2)", lhs3, rhs3},
        {"case2 f(p23)", lhs4, rhs4},
    };
    for (int i = 0; i < 4; ++i) {
        if (identities[i].lhs != identities[i].rhs) {
            check.failed_index = i + 1;
            check.failed_name = identities[i].name;
            check.lhs = fraction_string(identities[i].lhs);
            check.rhs = fraction_string(identities[i].rhs);
            return check;
        }
    }
    check.ok = true;
    return check;
}

namespace {

// One dimension of the sweep. Appends equality cases and reports the first
// negative value through `witness`. Works on 360 lambda1 and
// 720 (n+1)(n+2) key_combination, which are integers of the same signs.
void sweep_dimension(long m, PositivityCertificate& out) {
    const long n = m / 2;
    BigInt b0 = binomial(m, 2);
    BigInt b1 = binomial(m - 2, 1);
    BigInt b2 = binomial(m - 4, 0);
    BigInt l1, half_l2, l3, key;
    for (long p = 2; p <= m - 2; p += 2) {
        // 360 lambda_i as integer combinations of the three binomials
        l1 = 2 * b0 - 30 * b1 + 180 * b2;
        half_l2 = -b0 + 90 * b1 - 360 * b2;  // 180 lambda2
        l3 = 5 * b0 - 60 * b1 + 180 * b2;
        // 720 (n+1)(n+2) key = 2 (4n+2) l1 + (n+1)(n+2) (l2 + 2 l3)
        key = 2 * (4 * n + 2) * l1 + (n + 1) * (n + 2) * 2 * (half_l2 + l3);
        ++out.pairs_checked;

        const int s1 = sgn(l1);
        const int sk = sgn(key);
        if (s1 < 0) {
            out.failure = NegativityWitness{p, m, "lambda1",
                                            fraction_string(make_rational(l1, BigInt(360)))};
            return;
        }
        if (sk < 0) {
            out.failure = NegativityWitness{
                p, m, "key_combination",
                fraction_string(make_rational(key, BigInt(720) * (n + 1) * (n + 2)))};
            return;
        }
        // f(p) = f(m-p), so every zero off the midline has a mirror partner;
        // report the representative with p <= m/2.
        if (sk == 0 && 2 * p <= m) out.key_equalities.push_back({p, m});
        if (s1 == 0 && 2 * p <= m) out.lambda1_equalities.push_back({p, m});

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
}

unsigned thread_cap() {
    if (const char* env = std::getenv("RIGIDITY_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace

PositivityCertificate certify_proposition(long m_min, long m_max, unsigned threads) {
    if (m_min < 4 || m_min % 2 != 0 || m_max % 2 != 0 || m_max < m_min) {
        throw std::invalid_argument("certify_proposition requires an even range with m_min >= 4");
    }
    if (threads == 0) threads = thread_cap();
    const long count = (m_max - m_min) / 2 + 1;
    threads = static_cast<unsigned>(std::min<long>(threads, count));

    // Partition the dimensions round-robin so the heavy large-m work spreads
    // evenly; results are merged in m order, so the output is deterministic.
    std::vector<PositivityCertificate> parts(threads);
    {
        std::vector<std::thread> workers;
        workers.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                for (long i = w; i < count; i += threads) {
                    sweep_dimension(m_min + 2 * i, parts[w]);
                    if (parts[w].failure) break;
                }
            });
        }
        for (auto& t : workers) t.join();
    }

    PositivityCertificate merged;
    merged.m_min = m_min;
    merged.m_max = m_max;
    for (const auto& part : parts) {
        merged.pairs_checked += part.pairs_checked;
        for (const auto& e : part.lambda1_equalities) merged.lambda1_equalities.push_back(e);
        for (const auto& e : part.key_equalities) merged.key_equalities.push_back(e);
        if (part.failure && !merged.failure) merged.failure = part.failure;
    }
    auto by_dimension = [](const EqualityCase& a, const EqualityCase& b) {
        return a.m != b.m ? a.m < b.m : a.p < b.p;
    };
    std::sort(merged.lambda1_equalities.begin(), merged.lambda1_equalities.end(), by_dimension);
    std::sort(merged.key_equalities.begin(), merged.key_equalities.end(), by_dimension);

    if (m_min <= 16 && 16 <= m_max) {
        merged.equality_set_expected = merged.lambda1_equalities.size() == 1 &&
                                       merged.lambda1_equalities[0].p == 2 &&
                                       merged.lambda1_equalities[0].m == 16;
    } else {
        merged.equality_set_expected = merged.lambda1_equalities.empty();
    }
    merged.ok = !merged.failure && merged.equality_set_expected && merged.key_equalities.empty();
    return merged;
}

}  // namespace rigidity
