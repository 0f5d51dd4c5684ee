#include "rigidity/curvature.hpp"

#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace rigidity {

namespace {

using Complex = std::complex<double>;

double max_abs(const std::vector<double>& v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs(const std::vector<Complex>& v) {
    double m = 0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

[[noreturn]] void reject(const char* kind, const SymmetryViolation& worst) {
    std::ostringstream msg;
    msg << kind << " symmetry violated: " << worst.relation << " at (" << worst.i << ","
        << worst.j << "," << worst.k << "," << worst.l << "), magnitude " << worst.magnitude;
    throw std::invalid_argument(msg.str());
}

}  // namespace

bool within(double lhs, double rhs, double tol, double reference) {
    return std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(reference));
}

CurvatureTensor CurvatureTensor::unchecked(int m, std::vector<double> components) {
    return CurvatureTensor(m, std::move(components));
}

CurvatureTensor CurvatureTensor::from_components(int m, std::vector<double> components,
                                                 double symmetry_tol) {
    if (m < 4) throw std::invalid_argument("real dimension must be >= 4");
    const std::size_t expected = static_cast<std::size_t>(m) * m * m * m;
    if (components.size() != expected) {
        throw std::invalid_argument("component count does not match dimension");
    }
    CurvatureTensor r(m, std::move(components));
    const double scale = std::max(1.0, max_abs(r.c_));
    SymmetryViolation worst{"", 0, 0, 0, 0, 0.0};
    auto record = [&](const char* relation, int i, int j, int k, int l, double mag) {
        if (mag > worst.magnitude) worst = {relation, i, j, k, l, mag};
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    const double v = r(i, j, k, l);
                    record("R_ijkl = -R_jikl", i, j, k, l, std::abs(v + r(j, i, k, l)));
                    record("R_ijkl = -R_ijlk", i, j, k, l, std::abs(v + r(i, j, l, k)));
                    record("R_ijkl = R_klij", i, j, k, l, std::abs(v - r(k, l, i, j)));
                    record("first Bianchi", i, j, k, l,
                           std::abs(v + r(j, k, i, l) + r(k, i, j, l)));
                }
    if (worst.magnitude > symmetry_tol * scale) reject("curvature", worst);
    return r;
}

KahlerCurvatureTensor KahlerCurvatureTensor::unchecked(int n, std::vector<Complex> components) {
    return KahlerCurvatureTensor(n, std::move(components));
}

KahlerCurvatureTensor KahlerCurvatureTensor::from_components(int n,
                                                             std::vector<Complex> components,
                                                             double symmetry_tol) {
    if (n < 2) throw std::invalid_argument("complex dimension must be >= 2");
    const std::size_t expected = static_cast<std::size_t>(n) * n * n * n;
    if (components.size() != expected) {
        throw std::invalid_argument("component count does not match dimension");
    }
    KahlerCurvatureTensor r(n, std::move(components));
    const double scale = std::max(1.0, max_abs(r.c_));
    SymmetryViolation worst{"", 0, 0, 0, 0, 0.0};
    auto record = [&](const char* relation, int i, int j, int k, int l, double mag) {
        if (mag > worst.magnitude) worst = {relation, i, j, k, l, mag};
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Complex v = r(i, j, k, l);
                    record("Rc_ijkl = Rc_kjil", i, j, k, l, std::abs(v - r(k, j, i, l)));
                    record("Rc_ijkl = Rc_ilkj", i, j, k, l, std::abs(v - r(i, l, k, j)));
                    record("Rc_ijkl = conj(Rc_jilk)", i, j, k, l,
                           std::abs(v - std::conj(r(j, i, l, k))));
                }
    if (worst.magnitude > symmetry_tol * scale) reject("Kaehler curvature", worst);
    return r;
}

// --- model tensors ---

CurvatureTensor constant_curvature_tensor(int m, double c) {
    std::vector<double> v(static_cast<std::size_t>(m) * m * m * m, 0.0);
    std::size_t idx = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l, ++idx) {
                    v[idx] = c * ((i == l && j == k ? 1.0 : 0.0) - (i == k && j == l ? 1.0 : 0.0));
                }
    return CurvatureTensor::from_components(m, std::move(v));
}

CurvatureTensor zero_curvature_tensor(int m) {
    return CurvatureTensor::from_components(
        m, std::vector<double>(static_cast<std::size_t>(m) * m * m * m, 0.0));
}

CurvatureTensor random_real_curvature(int m, int terms, std::uint64_t seed) {
    if (terms < 1) throw std::invalid_argument("need at least one Gram term");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> v(static_cast<std::size_t>(m) * m * m * m, 0.0);
    std::vector<double> h(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < terms; ++a) {
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                const double x = gauss(rng);
                h[i * m + j] = x;
                h[j * m + i] = x;
            }
        std::size_t idx = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    for (int l = 0; l < m; ++l, ++idx) {
                        v[idx] += h[i * m + l] * h[j * m + k] - h[i * m + k] * h[j * m + l];
                    }
    }
    return CurvatureTensor::from_components(m, std::move(v));
}

KahlerCurvatureTensor fubini_study_tensor(int n, double c) {
    std::vector<Complex> v(static_cast<std::size_t>(n) * n * n * n, Complex(0));
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l, ++idx) {
                    v[idx] = Complex(0.5 * c * ((i == j && k == l ? 1.0 : 0.0) +
                                                (i == l && k == j ? 1.0 : 0.0)));
                }
    return KahlerCurvatureTensor::from_components(n, std::move(v));
}

KahlerCurvatureTensor zero_kahler_tensor(int n) {
    return KahlerCurvatureTensor::from_components(
        n, std::vector<Complex>(static_cast<std::size_t>(n) * n * n * n, Complex(0)));
}

KahlerCurvatureTensor random_kahler_curvature(int n, int terms, std::uint64_t seed) {
    if (terms < 1) throw std::invalid_argument("need at least one Gram term");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> v(static_cast<std::size_t>(n) * n * n * n, Complex(0));
    std::vector<Complex> h(static_cast<std::size_t>(n) * n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int a = 0; a < terms; ++a) {
        for (int i = 0; i < n; ++i) {
            h[i * n + i] = Complex(gauss(rng), 0.0);
            for (int j = i + 1; j < n; ++j) {
                const Complex z(gauss(rng) * inv_sqrt2, gauss(rng) * inv_sqrt2);
                h[i * n + j] = z;
                h[j * n + i] = std::conj(z);
            }
        }
        std::size_t idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l, ++idx) {
                        v[idx] += 0.5 * (h[i * n + j] * h[k * n + l] + h[i * n + l] * h[k * n + j]);
                    }
    }
    return KahlerCurvatureTensor::from_components(n, std::move(v));
}

// --- decompositions ---

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Complex dot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    Complex s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
    return s;
}

IdentityCheck make_check(std::string name, double lhs, double rhs, double tol, double reference) {
    IdentityCheck c{std::move(name), lhs, rhs, false};
    c.ok = within(lhs, rhs, tol, reference);
    return c;
}

IdentityCheck orthogonality_check(std::string name, double inner, double norm_a2, double norm_b2,
                                  double tol) {
    IdentityCheck c{std::move(name), inner, 0.0, false};
    c.ok = std::abs(inner) <= tol * (std::sqrt(norm_a2 * norm_b2) + 1.0);
    return c;
}

}  // namespace

RealDecomposition decompose_real(const CurvatureTensor& r, const Tolerances& tol) {
    const int m = r.dimension();
    std::vector<double> ricci(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double s = 0;
            for (int k = 0; k < m; ++k) s += r(i, k, k, j);
            ricci[i * m + j] = s;
        }
    double scalar = 0;
    for (int i = 0; i < m; ++i) scalar += ricci[i * m + i];
    std::vector<double> tricci(ricci);
    for (int i = 0; i < m; ++i) tricci[i * m + i] -= scalar / m;

    const double s_coeff = scalar / (m * (m - 1));
    const double p_coeff = 1.0 / (m - 2);
    const std::size_t size = static_cast<std::size_t>(m) * m * m * m;
    std::vector<double> sv(size), pv(size), wv(size);
    std::size_t idx = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l, ++idx) {
                    const double s_part =
                        s_coeff * ((i == l && j == k ? 1.0 : 0.0) - (i == k && j == l ? 1.0 : 0.0));
                    const double p_part =
                        p_coeff * ((i == l ? tricci[j * m + k] : 0.0) -
                                   (i == k ? tricci[j * m + l] : 0.0) +
                                   (j == k ? tricci[i * m + l] : 0.0) -
                                   (j == l ? tricci[i * m + k] : 0.0));
                    sv[idx] = s_part;
                    pv[idx] = p_part;
                    wv[idx] = r.components()[idx] - s_part - p_part;
                }

    RealDecomposition d{CurvatureTensor::unchecked(m, std::move(sv)),
                        CurvatureTensor::unchecked(m, std::move(pv)),
                        CurvatureTensor::unchecked(m, std::move(wv)),
                        std::move(ricci),
                        scalar,
                        0, 0, 0, 0, 0, 0,
                        {},
                        false};
    d.norm_total = dot(r.components(), r.components());
    d.norm_scalar_part = dot(d.scalar_part.components(), d.scalar_part.components());
    d.norm_traceless_part =
        dot(d.traceless_ricci_part.components(), d.traceless_ricci_part.components());
    d.norm_weyl_part = dot(d.weyl_part.components(), d.weyl_part.components());
    d.norm_ricci = dot(d.ricci, d.ricci);
    d.norm_traceless_ricci = dot(tricci, tricci);

    const double ref = d.norm_total;
    d.checks.push_back(make_check("|S|^2 = 2 s^2/(m(m-1))", d.norm_scalar_part,
                                  2.0 * scalar * scalar / (m * (m - 1)), tol.identity, ref));
    d.checks.push_back(make_check("|P|^2 = 4/(m-2) |tRic|^2", d.norm_traceless_part,
                                  4.0 / (m - 2) * d.norm_traceless_ricci, tol.identity, ref));
    d.checks.push_back(make_check("|Ric|^2 = |tRic|^2 + s^2/m", d.norm_ricci,
                                  d.norm_traceless_ricci + scalar * scalar / m, tol.identity,
                                  ref));
    d.checks.push_back(orthogonality_check(
        "<S,P> = 0", dot(d.scalar_part.components(), d.traceless_ricci_part.components()),
        d.norm_scalar_part, d.norm_traceless_part, tol.identity));
    d.checks.push_back(orthogonality_check(
        "<S,W> = 0", dot(d.scalar_part.components(), d.weyl_part.components()),
        d.norm_scalar_part, d.norm_weyl_part, tol.identity));
    d.checks.push_back(orthogonality_check(
        "<P,W> = 0", dot(d.traceless_ricci_part.components(), d.weyl_part.components()),
        d.norm_traceless_part, d.norm_weyl_part, tol.identity));
    double recon = 0;
    for (std::size_t i = 0; i < size; ++i) {
        recon = std::max(recon, std::abs(r.components()[i] - d.scalar_part.components()[i] -
                                         d.traceless_ricci_part.components()[i] -
                                         d.weyl_part.components()[i]));
    }
    d.checks.push_back(make_check("S+P+W = R", recon, 0.0, tol.symmetry, max_abs(r.components())));
    d.all_identities_hold = true;
    for (const auto& c : d.checks) d.all_identities_hold = d.all_identities_hold && c.ok;
    return d;
}

KahlerDecomposition decompose_kahler(const KahlerCurvatureTensor& rc, const Tolerances& tol) {
    const int n = rc.complex_dimension();
    std::vector<Complex> ricci(static_cast<std::size_t>(n) * n, Complex(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex s = 0;
            for (int k = 0; k < n; ++k) s += rc(i, j, k, k);
            ricci[i * n + j] = s;
        }
    double scalar = 0;
    for (int i = 0; i < n; ++i) scalar += 2.0 * ricci[i * n + i].real();
    std::vector<Complex> tricci(ricci);
    for (int i = 0; i < n; ++i) tricci[i * n + i] -= scalar / (2.0 * n);

    const double s_coeff = scalar / (2.0 * n * (n + 1));
    const double p_coeff = 1.0 / (n + 2);
    const std::size_t size = static_cast<std::size_t>(n) * n * n * n;
    std::vector<Complex> sv(size), pv(size), bv(size);
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l, ++idx) {
                    const Complex s_part = Complex(
                        s_coeff *
                        ((i == j && k == l ? 1.0 : 0.0) + (i == l && k == j ? 1.0 : 0.0)));
                    const Complex p_part =
                        p_coeff * ((i == j ? tricci[k * n + l] : Complex(0)) +
                                   (k == l ? tricci[i * n + j] : Complex(0)) +
                                   (i == l ? tricci[k * n + j] : Complex(0)) +
                                   (k == j ? tricci[i * n + l] : Complex(0)));
                    sv[idx] = s_part;
                    pv[idx] = p_part;
                    bv[idx] = rc.components()[idx] - s_part - p_part;
                }

    KahlerDecomposition d{KahlerCurvatureTensor::unchecked(n, std::move(sv)),
                          KahlerCurvatureTensor::unchecked(n, std::move(pv)),
                          KahlerCurvatureTensor::unchecked(n, std::move(bv)),
                          std::move(ricci),
                          scalar,
                          0, 0, 0, 0, 0, 0,
                          {},
                          false};
    d.norm_total = dot(rc.components(), rc.components()).real();
    d.norm_scalar_part = dot(d.scalar_part.components(), d.scalar_part.components()).real();
    d.norm_traceless_part =
        dot(d.traceless_ricci_part.components(), d.traceless_ricci_part.components()).real();
    d.norm_bochner_part = dot(d.bochner_part.components(), d.bochner_part.components()).real();
    d.norm_ricci = dot(d.ricci, d.ricci).real();
    d.norm_traceless_ricci = dot(tricci, tricci).real();

    const double ref = d.norm_total;
    d.checks.push_back(make_check("|Ric(w)|^2 = |tRic(w)|^2 + s^2/(4n)", d.norm_ricci,
                                  d.norm_traceless_ricci + scalar * scalar / (4.0 * n),
                                  tol.identity, ref));
    d.checks.push_back(make_check("|Sc|^2 = s^2/(2n(n+1))", d.norm_scalar_part,
                                  scalar * scalar / (2.0 * n * (n + 1)), tol.identity, ref));
    d.checks.push_back(make_check("|Pc|^2 = 4/(n+2) |tRic(w)|^2", d.norm_traceless_part,
                                  4.0 / (n + 2) * d.norm_traceless_ricci, tol.identity, ref));
    d.checks.push_back(orthogonality_check(
        "<Sc,Pc> = 0",
        std::abs(dot(d.scalar_part.components(), d.traceless_ricci_part.components())),
        d.norm_scalar_part, d.norm_traceless_part, tol.identity));
    d.checks.push_back(orthogonality_check(
        "<Sc,B> = 0", std::abs(dot(d.scalar_part.components(), d.bochner_part.components())),
        d.norm_scalar_part, d.norm_bochner_part, tol.identity));
    d.checks.push_back(orthogonality_check(
        "<Pc,B> = 0",
        std::abs(dot(d.traceless_ricci_part.components(), d.bochner_part.components())),
        d.norm_traceless_part, d.norm_bochner_part, tol.identity));
    double recon = 0;
    for (std::size_t i = 0; i < size; ++i) {
        recon = std::max(recon, std::abs(rc.components()[i] - d.scalar_part.components()[i] -
                                         d.traceless_ricci_part.components()[i] -
                                         d.bochner_part.components()[i]));
    }
    d.checks.push_back(
        make_check("Sc+Pc+B = Rc", recon, 0.0, tol.symmetry, max_abs(rc.components())));
    d.all_identities_hold = true;
    for (const auto& c : d.checks) d.all_identities_hold = d.all_identities_hold && c.ok;
    return d;
}

// --- real/Kaehler bridge ---

CurvatureTensor realify(const KahlerCurvatureTensor& rc, double symmetry_tol) {
    const int n = rc.complex_dimension();
    const int m = 2 * n;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // Coefficient of u_a (resp. conj u_a) in the frame vector: e_a expands as
    // (u_a + conj u_a)/sqrt(2), J e_a as (i u_a - i conj u_a)/sqrt(2).
    auto holo = [&](int a) {
        return a < n ? Complex(inv_sqrt2, 0.0) : Complex(0.0, inv_sqrt2);
    };
    auto base = [&](int a) { return a < n ? a : a - n; };

    std::vector<double> v(static_cast<std::size_t>(m) * m * m * m);
    double worst_imag = 0;
    std::size_t idx = 0;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z)
                for (int w = 0; w < m; ++w, ++idx) {
                    const int a = base(x), b = base(y), c = base(z), d = base(w);
                    const Complex ax = holo(x), ay = holo(y), az = holo(z), aw = holo(w);
                    const Complex bx = std::conj(ax), by = std::conj(ay), bz = std::conj(az),
                                  bw = std::conj(aw);
                    const Complex rabcd = rc(a, b, c, d);
                    const Complex rabdc = rc(a, b, d, c);
                    const Complex value = ax * by * az * bw * rabcd -
                                          ax * by * bz * aw * rabdc -
                                          bx * ay * az * bw * std::conj(rabdc) +
                                          bx * ay * bz * aw * std::conj(rabcd);
                    worst_imag = std::max(worst_imag, std::abs(value.imag()));
                    v[idx] = value.real();
                }
    const double scale = std::max(1.0, max_abs(v));
    if (worst_imag > symmetry_tol * scale) {
        throw std::invalid_argument("realified tensor has a nonreal component");
    }
    CurvatureTensor out = CurvatureTensor::from_components(m, std::move(v), symmetry_tol);

    // J-invariance: R(Jx, Jy, z, w) = R(x, y, z, w) with J e_a = e_{a+n},
    // J e_{a+n} = -e_a.
    auto jmap = [&](int a) { return a < n ? a + n : a - n; };
    auto jsign = [&](int a) { return a < n ? 1.0 : -1.0; };
    double worst = 0;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z)
                for (int w = 0; w < m; ++w) {
                    const double lhs =
                        jsign(x) * jsign(y) * out(jmap(x), jmap(y), z, w);
                    worst = std::max(worst, std::abs(lhs - out(x, y, z, w)));
                }
    if (worst > symmetry_tol * scale) {
        throw std::invalid_argument("realified tensor is not J-invariant");
    }
    return out;
}

KahlerCurvatureTensor complexify(const CurvatureTensor& r, double symmetry_tol) {
    const int m = r.dimension();
    if (m % 2 != 0) throw std::invalid_argument("complexify needs an even-dimensional tensor");
    const int n = m / 2;
    std::vector<Complex> v(static_cast<std::size_t>(n) * n * n * n);
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l, ++idx) {
                    v[idx] = Complex(r(i, j, k, l) - r(i, j + n, k, l + n),
                                     r(i, j + n, k, l) + r(i, j, k, l + n));
                }
    return KahlerCurvatureTensor::from_components(n, std::move(v), symmetry_tol);
}

BridgeReport verify_norm_bridge(const KahlerCurvatureTensor& rc, const Tolerances& tol) {
    const CurvatureTensor real = realify(rc, tol.symmetry);
    const int m = real.dimension();
    const int n = rc.complex_dimension();

    BridgeReport rep{};
    rep.norm_real = dot(real.components(), real.components());
    rep.norm_complex = dot(rc.components(), rc.components()).real();

    double ric_real2 = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double s = 0;
            for (int k = 0; k < m; ++k) s += real(i, k, k, j);
            ric_real2 += s * s;
        }
    rep.norm_ricci_real = ric_real2;

    double ric_kahler2 = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex s = 0;
            for (int k = 0; k < n; ++k) s += rc(i, j, k, k);
            ric_kahler2 += std::norm(s);
        }
    rep.norm_ricci_kahler = ric_kahler2;

    rep.riemann_identity = make_check("|R|^2 = 4 |Rc|^2", rep.norm_real, 4.0 * rep.norm_complex,
                                      tol.bridge, rep.norm_real);
    rep.ricci_identity = make_check("|Ric(g)|^2 = 2 |Ric(w)|^2", rep.norm_ricci_real,
                                    2.0 * rep.norm_ricci_kahler, tol.bridge, rep.norm_ricci_real);
    rep.ok = rep.riemann_identity.ok && rep.ricci_identity.ok;
    return rep;
}

ChernIntegrands chern_integrands(const KahlerDecomposition& dec, const Tolerances& tol) {
    const int n = dec.scalar_part.complex_dimension();
    const double s = dec.scalar;
    ChernIntegrands out{};
    out.c1_integrand = s / (2.0 * n);
    out.c1sq_integrand = (s * s / 4.0 - dec.norm_ricci) / (n * (n - 1.0));
    out.c1sq_integrand_rewritten =
        ((n - 1.0) / (4.0 * n) * s * s - dec.norm_traceless_ricci) / (n * (n - 1.0));
    out.agreement = make_check("c1^2 integrand forms agree", out.c1sq_integrand,
                               out.c1sq_integrand_rewritten, tol.symmetry,
                               std::abs(out.c1sq_integrand));
    return out;
}

// --- fixtures ---

void save_tensor(std::ostream& out, const CurvatureTensor& r) {
    out << "real " << r.dimension() << "\n";
    out.precision(17);
    for (double x : r.components()) out << x << "\n";
}

void save_tensor(std::ostream& out, const KahlerCurvatureTensor& rc) {
    out << "kahler " << rc.complex_dimension() << "\n";
    out.precision(17);
    for (const auto& x : rc.components()) out << x.real() << " " << x.imag() << "\n";
}

CurvatureTensor load_real_tensor(std::istream& in, double symmetry_tol) {
    std::string kind;
    int m = 0;
    if (!(in >> kind >> m) || kind != "real") {
        throw std::invalid_argument("expected a 'real m' tensor header");
    }
    std::vector<double> v(static_cast<std::size_t>(m) * m * m * m);
    for (auto& x : v) {
        if (!(in >> x)) throw std::invalid_argument("truncated tensor fixture");
    }
    return CurvatureTensor::from_components(m, std::move(v), symmetry_tol);
}

KahlerCurvatureTensor load_kahler_tensor(std::istream& in, double symmetry_tol) {
    std::string kind;
    int n = 0;
    if (!(in >> kind >> n) || kind != "kahler") {
        throw std::invalid_argument("expected a 'kahler n' tensor header");
    }
    std::vector<Complex> v(static_cast<std::size_t>(n) * n * n * n);
    for (auto& x : v) {
        double re = 0, im = 0;
        if (!(in >> re >> im)) throw std::invalid_argument("truncated tensor fixture");
        x = Complex(re, im);
    }
    return KahlerCurvatureTensor::from_components(n, std::move(v), symmetry_tol);
}

}  // namespace rigidity
