#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rigidity {

struct Tolerances {
    double symmetry = 1e-12;
    double identity = 1e-10;
    double bridge = 1e-9;
};

/// |lhs - rhs| <= tol * max(1, |reference|): relative above magnitude 1,
/// absolute below.
bool within(double lhs, double rhs, double tol, double reference);

struct SymmetryViolation {
    std::string relation;
    int i, j, k, l;
    double magnitude;
};

/// Dense rank-4 curvature tensor over an orthonormal frame (metric = Id).
/// Construction validates antisymmetry in both index pairs, pair symmetry
/// and the first Bianchi identity; violations are rejected with the largest
/// offending entry.
class CurvatureTensor {
public:
    static CurvatureTensor from_components(int m, std::vector<double> components,
                                           double symmetry_tol = 1e-12);

    int dimension() const { return m_; }
    double operator()(int i, int j, int k, int l) const {
        return c_[((static_cast<std::size_t>(i) * m_ + j) * m_ + k) * m_ + l];
    }
    const std::vector<double>& components() const { return c_; }

    static CurvatureTensor unchecked(int m, std::vector<double> components);

private:
    CurvatureTensor(int m, std::vector<double> c) : m_(m), c_(std::move(c)) {}
    int m_;
    std::vector<double> c_;
};

/// Dense Kaehler curvature tensor Rc[i jbar k lbar] over a unitary frame.
/// Construction validates the two index-swap symmetries and the Hermitian
/// symmetry.
class KahlerCurvatureTensor {
public:
    using Complex = std::complex<double>;

    static KahlerCurvatureTensor from_components(int n, std::vector<Complex> components,
                                                 double symmetry_tol = 1e-12);

    int complex_dimension() const { return n_; }
    Complex operator()(int i, int j, int k, int l) const {
        return c_[((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l];
    }
    const std::vector<Complex>& components() const { return c_; }

    static KahlerCurvatureTensor unchecked(int n, std::vector<Complex> components);

private:
    KahlerCurvatureTensor(int n, std::vector<Complex> c) : n_(n), c_(std::move(c)) {}
    int n_;
    std::vector<Complex> c_;
};

// --- model tensors and seeded random families ---

/// R_ijkl = c (d_il d_jk - d_ik d_jl): constant sectional curvature c with
/// Ricci contraction Ric_ij = sum_k R_ikkj.
CurvatureTensor constant_curvature_tensor(int m, double c);
CurvatureTensor zero_curvature_tensor(int m);
/// Kulkarni-Nomizu squares of seeded random symmetric matrices; satisfies
/// every curvature symmetry by construction.
CurvatureTensor random_real_curvature(int m, int terms, std::uint64_t seed);

/// Rc = (c/2)(g_ij g_kl + g_il g_kj): the constant holomorphic sectional
/// curvature model.
KahlerCurvatureTensor fubini_study_tensor(int n, double c);
KahlerCurvatureTensor zero_kahler_tensor(int n);
/// Symmetrized Hermitian Gram sums over seeded random Hermitian matrices.
KahlerCurvatureTensor random_kahler_curvature(int n, int terms, std::uint64_t seed);

// --- decompositions ---

struct IdentityCheck {
    std::string name;
    double lhs;
    double rhs;
    bool ok;
};

struct RealDecomposition {
    CurvatureTensor scalar_part;           // S
    CurvatureTensor traceless_ricci_part;  // P
    CurvatureTensor weyl_part;             // W
    std::vector<double> ricci;             // m x m, Ric_ij = sum_k R_ikkj
    double scalar;
    double norm_total;            // |R|^2
    double norm_scalar_part;      // |S|^2
    double norm_traceless_part;   // |P|^2
    double norm_weyl_part;        // |W|^2
    double norm_ricci;            // |Ric|^2
    double norm_traceless_ricci;  // |tracefree Ric|^2
    std::vector<IdentityCheck> checks;
    bool all_identities_hold;
};

/// Splits R into S + P + W and verifies the norm identities
/// |S|^2 = 2 s^2/(m(m-1)), |P|^2 = 4/(m-2) |tRic|^2,
/// |Ric|^2 = |tRic|^2 + s^2/m, plus pairwise orthogonality of the parts.
RealDecomposition decompose_real(const CurvatureTensor& r, const Tolerances& tol = {});

struct KahlerDecomposition {
    KahlerCurvatureTensor scalar_part;           // Sc
    KahlerCurvatureTensor traceless_ricci_part;  // Pc
    KahlerCurvatureTensor bochner_part;          // B
    std::vector<std::complex<double>> ricci;     // n x n, R_ij = sum_k Rc_ijkk
    double scalar;                               // s = 2 sum_i R_ii
    double norm_total;
    double norm_scalar_part;
    double norm_traceless_part;
    double norm_bochner_part;
    double norm_ricci;            // |Ric(omega)|^2
    double norm_traceless_ricci;  // |tracefree Ric(omega)|^2
    std::vector<IdentityCheck> checks;
    bool all_identities_hold;
};

/// Splits Rc into Sc + Pc + B and verifies |Ric(w)|^2 = |tRic(w)|^2 + s^2/(4n),
/// |Sc|^2 = s^2/(2n(n+1)), |Pc|^2 = 4/(n+2) |tRic(w)|^2, plus orthogonality.
KahlerDecomposition decompose_kahler(const KahlerCurvatureTensor& rc, const Tolerances& tol = {});

// --- real/Kaehler bridge ---

/// The real 2n-dimensional tensor over the frame {e_i, J e_i} whose
/// complexification reproduces Rc. The output satisfies all real curvature
/// symmetries plus J-invariance.
CurvatureTensor realify(const KahlerCurvatureTensor& rc, double symmetry_tol = 1e-12);

/// Rc_ijkl = (R_ijkl - R_{i,j+n,k,l+n}) + i (R_{i,j+n,k,l} + R_{i,j,k,l+n}).
KahlerCurvatureTensor complexify(const CurvatureTensor& r, double symmetry_tol = 1e-12);

struct BridgeReport {
    double norm_real;          // |R|^2
    double norm_complex;       // |Rc|^2
    double norm_ricci_real;    // |Ric(g)|^2
    double norm_ricci_kahler;  // |Ric(omega)|^2
    IdentityCheck riemann_identity;  // |R|^2 = 4 |Rc|^2
    IdentityCheck ricci_identity;    // |Ric(g)|^2 = 2 |Ric(omega)|^2
    bool ok;
};

BridgeReport verify_norm_bridge(const KahlerCurvatureTensor& rc, const Tolerances& tol = {});

// --- Chern-class integrands ---

struct ChernIntegrands {
    double c1_integrand;             // s/(2n)
    double c1sq_integrand;           // (s^2/4 - |Ric(w)|^2)/(n(n-1))
    double c1sq_integrand_rewritten; // ((n-1)/(4n) s^2 - |tRic(w)|^2)/(n(n-1))
    IdentityCheck agreement;
};

ChernIntegrands chern_integrands(const KahlerDecomposition& dec, const Tolerances& tol = {});

// --- fixtures ---

void save_tensor(std::ostream& out, const CurvatureTensor& r);
void save_tensor(std::ostream& out, const KahlerCurvatureTensor& rc);
CurvatureTensor load_real_tensor(std::istream& in, double symmetry_tol = 1e-12);
KahlerCurvatureTensor load_kahler_tensor(std::istream& in, double symmetry_tol = 1e-12);

}  // namespace rigidity
