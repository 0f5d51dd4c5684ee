#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigidity/exact.hpp"

namespace rigidity {

/// The three curvature-invariant weights of the second heat coefficient of
/// the p-form Laplacian on an m-dimensional Riemannian manifold:
///
///   lambda1 = (1/180) C(m,p) - (1/12) C(m-2,p-1) + (1/2) C(m-4,p-2)
///   lambda2 = -(1/180) C(m,p) + (1/2) C(m-2,p-1) - 2  C(m-4,p-2)
///   lambda3 = (1/72)  C(m,p) - (1/6)  C(m-2,p-1) + (1/2) C(m-4,p-2)
///
/// with C(a,b) = 0 out of range.
struct PatodiTriple {
    long dimension;    // m, even, >= 4
    long form_degree;  // p in [0, m]
    Rational lambda1;
    Rational lambda2;
    Rational lambda3;
};

PatodiTriple patodi_lambdas(long m, long p);

/// Coefficient in front of the total scalar curvature in the first heat
/// coefficient: (1/6) C(m,p) - C(m-2,p-1). Internally cross-checked against
/// the factored form ((m-2)!/(p!(m-p)!)) [p^2 - mp + m(m-1)/6].
Rational a1_coefficient(long m, long p);

/// Heat-coefficient data for the Kaehler dimension m = 2n: the volume and
/// total-scalar factors of the first two coefficients plus the three weights
/// of the second coefficient written against s^2, |tracefree Ricci|^2 and
/// |Bochner|^2, and the combination that controls the rigidity argument.
struct HeatCoefficientReport {
    long n;
    long form_degree;
    Rational a0_coeff;         // C(2n, p)
    Rational a1_coeff;         // (1/6) C(2n,p) - C(2n-2,p-1)
    Rational kahler_s2;        // (2/(n(n+1))) l1 + (1/(2n)) l2 + l3
    Rational kahler_ric;       // (16/(n+2)) l1 + 2 l2
    Rational kahler_bochner;   // 4 l1
    Rational key_combination;  // ((4n+2)/((n+1)(n+2))) l1 + (1/2) l2 + l3
};

HeatCoefficientReport kahler_a2_coefficients(long n, long p);

/// The combination ((4n+2)/((n+1)(n+2))) lambda1 + (1/2) lambda2 + lambda3
/// evaluated at (m, p) = (2n, p). Requires p even with 2 <= p <= 2(n-1).
Rational key_combination(long n, long p);

struct IdentityFailure {
    long n;
    std::string component;  // which coefficient (or which p) disagreed
    std::string lhs;
    std::string rhs;
};

struct IdentityCertificate {
    bool certified = false;
    long n = 0;
    unsigned long degrees_checked = 0;
    std::vector<IdentityFailure> failures;
};

/// Certifies, in exact rational arithmetic at the given n, that
///  (i) eliminating the traceless-Ricci term with the factor (n-1)/(4n)
///      turns the three raw Kaehler a2 weights into the key combination,
///      coefficient by coefficient in (lambda1, lambda2, lambda3), and
/// (ii) the key combination agrees with its binomial closed form
///      (m^2+10m+12)/(90(m+2)(m+4)) C(m,p)
///        + m(m-2)/(12(m+2)(m+4)) C(m-2,p-1)
///        - m(m-2)/(2(m+2)(m+4))  C(m-4,p-2),   m = 2n,
///      for every even p in [2, 2n-2].
IdentityCertificate verify_key_combination_identity(long n);

}  // namespace rigidity
