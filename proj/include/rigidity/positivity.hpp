#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigidity/exact.hpp"

namespace rigidity {

/// Weights of the binomial combination
///   alpha C(m,p) + beta C(m-2,p-1) + gamma C(m-4,p-2),
/// equivalently ((m-4)!/(p!(m-p)!)) f(p) with
///   f(p) = alpha m(m-1)(m-2)(m-3)
///        + beta (m-2)(m-3) p(m-p) + gamma p(p-1)(m-p)(m-p-1).
struct CombinationCoefficients {
    Rational alpha;
    Rational beta;
    Rational gamma;
};

/// Weights whose combination is the key combination at m = 2n.
CombinationCoefficients case1_coefficients(long m);
/// Weights whose combination is lambda1.
CombinationCoefficients case2_coefficients();

/// f(p) for rational p (the polynomial extends off the integers).
Rational f_polynomial(const Rational& p, long m, const CombinationCoefficients& c);
/// g(p) = f(p) - alpha m(m-1)(m-2)(m-3).
Rational g_polynomial(const Rational& p, long m, const CombinationCoefficients& c);
/// h(p) = 2 gamma p^2 - 2 gamma m p + gamma(m-1) - beta(m-2)(m-3), the
/// quadratic factor of g'(p) = (2p-m) h(p).
Rational h_polynomial(const Rational& p, long m, const CombinationCoefficients& c);

/// f at an integer degree 2 <= p <= m-2, cross-checked exactly against the
/// binomial combination (throws std::logic_error if the routes disagree).
Rational eval_f(long p, long m, const CombinationCoefficients& c);

/// Critical-point data of g on [2, m-2]. p1 = m/2 is always a root of g';
/// the other two roots p_{2,3} = m/2 +- sqrt(disc) exist over the reals iff
/// gamma != 0 and disc >= 0, where
///   disc = m^2/4 + (beta/(2 gamma))(m-2)(m-3) - (m-1)/2.
/// For gamma == 0 the analysis is restricted to p1 and the p_{2,3} fields
/// stay empty.
struct CriticalPointAnalysis {
    long m = 0;
    Rational p1;
    Rational g_second_at_p1;  // (-2b-g) m^2 + (10b+2g) m + (-12b-2g)
    bool gamma_is_zero = false;
    std::optional<Rational> p23_discriminant;
    std::optional<int> g_second_sign_at_p23;  // sign of 8 gamma disc, when real
    std::optional<Rational> g_at_p23;  // -(1/(4 gamma)) [b(m-2)(m-3) - g(m-1)]^2
    bool p23_in_range = false;         // both p_{2,3} real and inside [2, m-2]
};

CriticalPointAnalysis analyze_critical_points(long m, const CombinationCoefficients& c);

struct ClosedFormCheck {
    bool ok = false;
    long m = 0;
    // first failing identity, when any
    std::optional<int> failed_index;
    std::string failed_name;
    std::string lhs;
    std::string rhs;
};

/// Checks the four closed-form factorizations at even m >= 4:
///  1. case1 f(m/2)  = m(m-2)/(1440(m+2)(m+4)) (m^4+126m^3-400m^2-288m+576)
///  2. case1 f(2)    = m(m-2)(m-3)/(90(m+2)(m+4)) (m^3+24m^2-148m+228)
///  3. case2 f(2)    = (1/180)(m-2)(m-3)(m-15)(m-16)
///  4. case2 f(p23)  = (m/1440)(3m^3-58m^2+83m-48), with f(p23) evaluated by
///     substituting the critical-point relation (no square roots involved).
ClosedFormCheck verify_closed_forms(long m);

/// Zero of a swept quantity, reported in the fundamental domain p <= m/2;
/// the combination is symmetric under p <-> m-p, so each zero off the
/// midline stands for itself and its mirror.
struct EqualityCase {
    long p;
    long m;
};

struct NegativityWitness {
    long p;
    long m;
    std::string quantity;  // "lambda1" or "key_combination"
    std::string value;
};

struct PositivityCertificate {
    long m_min = 0;
    long m_max = 0;
    unsigned long long pairs_checked = 0;
    std::vector<EqualityCase> lambda1_equalities;
    std::vector<EqualityCase> key_equalities;
    std::optional<NegativityWitness> failure;
    bool equality_set_expected = true;  // {(2,16)} when 16 is in range
    bool ok = false;
};

/// Sweeps every even m in [m_min, m_max] and every even p in [2, m-2],
/// evaluating lambda1 and the key combination exactly, collecting equality
/// cases and aborting the verdict on any negative value. `threads` = 0 uses
/// the RIGIDITY_THREADS environment cap (default: hardware concurrency).
PositivityCertificate certify_proposition(long m_min, long m_max, unsigned threads = 0);

}  // namespace rigidity
