#include "rigidity/circle_bundle.hpp"

#include <stdexcept>
#include <vector>

namespace rigidity {

PiScaled::PiScaled(Rational coeff, int pi_power)
    : coeff_(std::move(coeff)), pi_power_(coeff_ == 0 ? 0 : pi_power) {}

Rational PiScaled::rational() const {
    if (pi_power_ != 0) throw std::domain_error("value is not pi-free: " + str());
    return coeff_;
}

std::string PiScaled::str() const {
    if (pi_power_ == 0) return fraction_string(coeff_);
    return fraction_string(coeff_) + " * pi^" + std::to_string(pi_power_);
}

PiScaled operator*(const PiScaled& a, const PiScaled& b) {
    return {a.coeff_ * b.coeff_, a.pi_power_ + b.pi_power_};
}

PiScaled operator*(const Rational& a, const PiScaled& b) {
    return {a * b.coeff_, b.pi_power_};
}

PiScaled operator+(const PiScaled& a, const PiScaled& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.pi_power_ != b.pi_power_) {
        throw std::domain_error("pi-grading mismatch in sum: " + a.str() + " + " + b.str());
    }
    return {a.coeff_ + b.coeff_, a.pi_power_};
}

PiScaled operator-(const PiScaled& a, const PiScaled& b) { return a + (-b); }

PiScaled PiScaled::operator-() const { return {-coeff_, pi_power_}; }

bool operator==(const PiScaled& a, const PiScaled& b) {
    return a.coeff_ == b.coeff_ && (a.is_zero() || a.pi_power_ == b.pi_power_);
}

namespace {

void check_bundle_args(long n, const Rational& s_g, long fano_index) {
    if (n < 1) throw std::invalid_argument("complex dimension n must be >= 1");
    if (s_g <= 0) throw std::invalid_argument("scalar curvature must be positive");
    if (fano_index < 1) throw std::invalid_argument("index I must be a positive integer");
}

// The 2n x 2n block matrix (0, Id; -Id, 0): the direction pattern of the
// connection curvature in the frame {theta^i, J theta^i}.
std::vector<std::vector<int>> block_matrix(long n) {
    std::vector<std::vector<int>> j(2 * n, std::vector<int>(2 * n, 0));
    for (long i = 0; i < n; ++i) {
        j[i][i + n] = 1;
        j[i + n][i] = -1;
    }
    return j;
}

Rational connection_scale_coeff(long n, const Rational& s_g, long fano_index) {
    return s_g / Rational(8 * n * fano_index);
}

}  // namespace

BundleData make_bundle_data(long n, const Rational& s_g, long fano_index) {
    check_bundle_args(n, s_g, fano_index);
    BundleData d{n, s_g, fano_index, PiScaled(connection_scale_coeff(n, s_g, fano_index), -1),
                 einstein_parameter_squared(n, s_g, fano_index)};
    return d;
}

PiScaled connection_square(long n, const Rational& s_g, long fano_index) {
    check_bundle_args(n, s_g, fano_index);
    const Rational q = connection_scale_coeff(n, s_g, fano_index);
    const PiScaled scalar(-q * q, -2);

    // Cross-check on the explicit matrix: (scale * J)^2 must be scalar * Id.
    const auto j = block_matrix(n);
    for (long a = 0; a < 2 * n; ++a) {
        for (long b = 0; b < 2 * n; ++b) {
            long entry = 0;
            for (long k = 0; k < 2 * n; ++k) entry += j[a][k] * j[k][b];
            const PiScaled lhs = PiScaled(q * q * Rational(entry), -2);
            const PiScaled rhs = (a == b) ? scalar : PiScaled();
            if (!(lhs == rhs)) {
                throw std::logic_error("connection matrix square is not scalar * Id");
            }
        }
    }
    return scalar;
}

BundleRicci bundle_ricci(long n, const Rational& s_g, long fano_index, const PiScaled& a_squared) {
    check_bundle_args(n, s_g, fano_index);
    if (!a_squared.is_zero() && a_squared.pi_power() != 2) {
        throw std::domain_error("a^2 must carry pi-grade 2, got " + a_squared.str());
    }
    const Rational q = connection_scale_coeff(n, s_g, fano_index);
    const PiScaled scale_sq(q * q, -2);

    // -a^2 sum_ij A_ij A_ji = +a^2 sum_ij A_ij^2: keep both routes so the
    // sign conventions stay tied together.
    const auto j = block_matrix(n);
    long trace_sq = 0, frob = 0;
    for (long a = 0; a < 2 * n; ++a) {
        for (long b = 0; b < 2 * n; ++b) {
            trace_sq += j[a][b] * j[b][a];
            frob += j[a][b] * j[a][b];
        }
    }
    if (trace_sq != -frob || frob != 2 * n) {
        throw std::logic_error("connection matrix trace identities failed");
    }

    BundleRicci r;
    r.r_tangent =
        (PiScaled(s_g / Rational(2 * n), 0) - Rational(2) * (a_squared * scale_sq)).rational();
    r.r_fiber = (Rational(-trace_sq) * (a_squared * scale_sq)).rational();
    r.r_mixed = 0;  // A_ij constant, so every covariant derivative vanishes
    return r;
}

PiScaled einstein_parameter_squared(long n, const Rational& s_g, long fano_index) {
    check_bundle_args(n, s_g, fano_index);
    const PiScaled a_squared(
        Rational(16 * fano_index * fano_index * n) / (s_g * Rational(n + 1)), 2);

    const BundleRicci r = bundle_ricci(n, s_g, fano_index, a_squared);
    const Rational einstein_value = s_g / Rational(2 * (n + 1));
    if (r.r_tangent != einstein_value || r.r_fiber != einstein_value || r.r_mixed != 0) {
        throw std::logic_error("Einstein parameter failed the Ricci check");
    }
    const Rational total_scalar = Rational(2 * n) * r.r_tangent + r.r_fiber;
    if (total_scalar != Rational(2 * n + 1) * s_g / Rational(2 * (n + 1))) {
        throw std::logic_error("Einstein metric has unexpected scalar curvature");
    }
    return a_squared;
}

VolumeBound volume_bound(long n, long fano_index) {
    if (n < 1) throw std::invalid_argument("complex dimension n must be >= 1");
    if (fano_index < 1 || fano_index > n + 1) {
        throw std::invalid_argument("index must satisfy 1 <= I <= n+1, got " +
                                    std::to_string(fano_index));
    }
    VolumeBound b;
    b.ratio = make_rational(n + 1, fano_index);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n + 1),
                  static_cast<unsigned long>(n));
    b.degree_bound = b.ratio * Rational(power);
    return b;
}

PiScaled volume_relation(const Rational& vol_base, const PiScaled& a) {
    if (vol_base < 0) throw std::invalid_argument("volume must be nonnegative");
    if (!a.is_zero() && a.pi_power() != 0 && a.pi_power() != 1) {
        throw std::domain_error("fiber parameter must have pi-grade 0 or 1, got " + a.str());
    }
    return PiScaled(vol_base * Rational(2), 1) * a;
}

BundleRicci bundle_ricci_via_full_curvature(long n, const Rational& s_g, long fano_index,
                                            const PiScaled& a_squared) {
    check_bundle_args(n, s_g, fano_index);
    if (!a_squared.is_zero() && a_squared.pi_power() != 2) {
        throw std::domain_error("a^2 must carry pi-grade 2, got " + a_squared.str());
    }
    const long m = 2 * n;
    const Rational q = connection_scale_coeff(n, s_g, fano_index);
    const Rational t = a_squared.coeff() * q * q;  // a^2 A_scale^2, pi-free
    const auto j = block_matrix(n);

    // Base model: constant sectional curvature c with Ricci s_g/(2n) Id under
    // the contraction K_ab = sum_k K_akbk.
    const Rational c = s_g / Rational(2 * n * (2 * n - 1));

    // Indices 0..2n, 0 = fiber direction. Tangent index i maps to j[i-1].
    auto component = [&](long a, long b, long cc, long d) -> Rational {
        const int zeros = (a == 0) + (b == 0) + (cc == 0) + (d == 0);
        if (zeros >= 3) return 0;
        if (zeros == 1) return 0;  // R_{i0kl} = -a A_kl;i = 0 for constant A
        if (zeros == 2) {
            if ((a == 0 && b == 0) || (cc == 0 && d == 0)) return 0;
            int sign = 1;
            if (a == 0) { std::swap(a, b); sign = -sign; }
            if (cc == 0) { std::swap(cc, d); sign = -sign; }
            // R_{i0k0} = a^2 sum_l A_il A_kl
            long sum = 0;
            for (long l = 0; l < m; ++l) sum += j[a - 1][l] * j[cc - 1][l];
            return Rational(sign) * t * Rational(sum);
        }
        const long i = a - 1, jj = b - 1, k = cc - 1, l = d - 1;
        const Rational base = c * Rational((i == k) * (jj == l) - (i == l) * (jj == k));
        const Rational correction =
            t * Rational(2 * j[i][jj] * j[k][l] + j[i][k] * j[jj][l] - j[i][l] * j[jj][k]);
        return base - correction;
    };

    // Ricci contraction R_ab = sum_k R_akbk over the full index range.
    auto ricci = [&](long a, long b) {
        Rational sum = 0;
        for (long k = 0; k <= m; ++k) sum += component(a, k, b, k);
        return sum;
    };

    BundleRicci out;
    out.r_fiber = ricci(0, 0);
    out.r_tangent = ricci(1, 1);
    out.r_mixed = ricci(1, 0);
    for (long a = 1; a <= m; ++a) {
        if (ricci(a, a) != out.r_tangent) throw std::logic_error("tangent Ricci not diagonal");
        if (ricci(a, 0) != 0) throw std::logic_error("mixed Ricci component nonzero");
        for (long b = a + 1; b <= m; ++b) {
            if (ricci(a, b) != 0) throw std::logic_error("off-diagonal Ricci nonzero");
        }
    }
    return out;
}

}  // namespace rigidity
