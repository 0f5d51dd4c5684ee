#pragma once

#include <string>

#include "rigidity/exact.hpp"

namespace rigidity {

/// Exact rational graded by a power of pi: value = coeff * pi^pi_power.
/// Sums require matching grades (zero is grade-polymorphic); products add
/// the grades. Quantities in this module are designed to stay monomial
/// in pi, so mixed-grade sums are an error, not a feature.
class PiScaled {
public:
    PiScaled() = default;
    PiScaled(Rational coeff, int pi_power);

    const Rational& coeff() const { return coeff_; }
    int pi_power() const { return pi_power_; }
    bool is_zero() const { return coeff_ == 0; }

    /// The underlying rational; throws std::domain_error unless pi-free.
    Rational rational() const;

    /// "num/den * pi^k", or plain "num/den" when pi-free.
    std::string str() const;

    friend PiScaled operator*(const PiScaled& a, const PiScaled& b);
    friend PiScaled operator*(const Rational& a, const PiScaled& b);
    friend PiScaled operator+(const PiScaled& a, const PiScaled& b);
    friend PiScaled operator-(const PiScaled& a, const PiScaled& b);
    PiScaled operator-() const;
    friend bool operator==(const PiScaled& a, const PiScaled& b);

private:
    Rational coeff_;
    int pi_power_ = 0;
};

/// Ricci data of the circle-bundle metric over a Kaehler-Einstein base in
/// the coframe {fiber, base}: the common tangent diagonal value, the fiber
/// value, and the mixed component (identically zero for constant connection
/// coefficients).
struct BundleRicci {
    Rational r_tangent;
    Rational r_fiber;
    Rational r_mixed;
};

/// Connection data for the bundle determined by (n, s_g, I).
struct BundleData {
    long n;
    Rational scalar_curvature;
    long fano_index;
    PiScaled connection_scale;  // s_g / (8 n pi I)
    PiScaled a_squared;         // Einstein parameter squared
};

BundleData make_bundle_data(long n, const Rational& s_g, long fano_index);

/// The scalar -(s_g/(8 n pi I))^2 with sum_k A_ik A_kj = scalar * delta_ij,
/// verified against the explicit 2n x 2n block matrix (0, Id; -Id, 0).
PiScaled connection_square(long n, const Rational& s_g, long fano_index);

/// Ricci components of the bundle metric for a given a^2 (pi-grade 2):
///   r_tangent = s_g/(2n) - 2 a^2 (s_g/(8 n pi I))^2
///   r_fiber   = 2n a^2 (s_g/(8 n pi I))^2
///   r_mixed   = 0.
BundleRicci bundle_ricci(long n, const Rational& s_g, long fano_index, const PiScaled& a_squared);

/// a^2 = 16 pi^2 I^2 n / (s_g (n+1)); asserts the resulting bundle metric is
/// Einstein with total scalar curvature (2n+1) s_g / (2(n+1)).
PiScaled einstein_parameter_squared(long n, const Rational& s_g, long fano_index);

struct VolumeBound {
    Rational ratio;         // (n+1)/I, the volume ratio against the model
    Rational degree_bound;  // (n+1)/I * (n+1)^n
};

/// Requires 1 <= I <= n+1.
VolumeBound volume_bound(long n, long fano_index);

/// Vol(total space) = vol_base * 2 pi a. `a` must be pi-monomial of grade
/// 0 or 1.
PiScaled volume_relation(const Rational& vol_base, const PiScaled& a);

/// Independent route to the same Ricci data: builds every component of the
/// (2n+1)-dimensional curvature tensor from the base model and the constant
/// connection matrix, then contracts. Exact; intended for small n.
BundleRicci bundle_ricci_via_full_curvature(long n, const Rational& s_g, long fano_index,
                                            const PiScaled& a_squared);

}  // namespace rigidity
