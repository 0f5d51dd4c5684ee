#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rigidity {

struct SpectrumEntry {
    double eigenvalue;
    std::uint64_t multiplicity;
};

/// Finite truncation of a p-form spectrum. Eigenvalues are nondecreasing and
/// the multiplicity of 0, when present, must equal the declared Betti number.
struct SpectrumFixture {
    int dimension = 0;        // m
    int form_degree = 0;      // p
    std::uint64_t betti = 0;  // b_p
    std::string label;        // single token, no whitespace
    long truncation = 0;      // highest eigenvalue index included
    std::vector<SpectrumEntry> entries;
};

/// Line format: header "m p b_p label truncation", then one
/// "eigenvalue multiplicity" pair per line.
SpectrumFixture load_fixture(std::istream& in);
SpectrumFixture load_fixture_file(const std::string& path);
void save_fixture(std::ostream& out, const SpectrumFixture& fixture);

/// Exact 0-form spectrum of the unit round m-sphere truncated at k_max:
/// eigenvalues k(k+m-1) with multiplicity C(m+k,k) - C(m+k-2,k-2).
SpectrumFixture make_sphere_fixture(int m, int k_max);

/// Multiplies every eigenvalue by `factor` (metric rescaling moves the whole
/// spectrum by a constant).
SpectrumFixture scale_fixture(const SpectrumFixture& fixture, double factor);

struct TraceValue {
    double value;          // sum of mult * exp(-eigenvalue * t)
    double tail_estimate;  // geometric bound continuing the last gap
};

TraceValue heat_trace(const SpectrumFixture& fixture, double t);

std::vector<double> geometric_grid(double t_min, double t_max, int count);

struct ExpansionFit {
    int order = 0;
    std::vector<double> coefficients;  // a_0 .. a_N of (4 pi t)^{m/2} trace(t)
    double rms_residual = 0;
    double condition = 0;  // column-scaled condition estimate of the design
    std::vector<double> t_grid;
};

/// Least-squares fit of (4 pi t)^{m/2} trace(t) by a degree-N polynomial in
/// t over the given grid. N <= 2; grids whose scaled condition estimate
/// exceeds `condition_limit` are rejected.
ExpansionFit fit_expansion(const SpectrumFixture& fixture, int order,
                           std::span<const double> t_grid, double condition_limit = 1e8);

/// Default window established by the convergence study for the bundled
/// sphere fixtures: 40 geometric points in [0.01, 0.1].
std::vector<double> default_fit_grid();

struct GeometricConstants {
    std::optional<double> volume;
    std::optional<double> total_scalar;      // integral of s
    std::optional<double> total_riemann_sq;  // integral of |R|^2
    std::optional<double> total_ricci_sq;    // integral of |Ric|^2
    std::optional<double> total_scalar_sq;   // integral of s^2
};

struct PatodiTargets {
    double a0;
    double a1;
    double a2;
};

/// Expansion targets from the closed-form coefficient formulas: a0 needs the
/// volume, a1 the total scalar curvature, a2 the three curvature integrals.
/// Missing constants are reported by name.
PatodiTargets patodi_targets(int m, int p, const GeometricConstants& constants);

}  // namespace rigidity
