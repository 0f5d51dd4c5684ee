#include "rigidity/heat_trace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rigidity/exact.hpp"

namespace rigidity {

namespace {

void validate(const SpectrumFixture& f) {
    if (f.dimension < 1) throw std::invalid_argument("fixture dimension must be positive");
    if (f.form_degree < 0 || f.form_degree > f.dimension) {
        throw std::invalid_argument("fixture form degree out of range");
    }
    if (f.entries.empty()) throw std::invalid_argument("fixture has no eigenvalues");
    std::uint64_t zero_mult = 0;
    double prev = -1.0;
    for (const auto& e : f.entries) {
        if (e.eigenvalue < 0) throw std::invalid_argument("negative eigenvalue in fixture");
        if (e.eigenvalue < prev) throw std::invalid_argument("eigenvalues must be nondecreasing");
        if (e.multiplicity == 0) throw std::invalid_argument("zero multiplicity in fixture");
        if (e.eigenvalue == 0.0) zero_mult += e.multiplicity;
        prev = e.eigenvalue;
    }
    if (zero_mult != f.betti) {
        throw std::invalid_argument("multiplicity of eigenvalue 0 (" + std::to_string(zero_mult) +
                                    ") does not match the declared Betti number " +
                                    std::to_string(f.betti));
    }
}

}  // namespace

SpectrumFixture load_fixture(std::istream& in) {
    SpectrumFixture f;
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("empty fixture stream");
    std::istringstream hs(header);
    if (!(hs >> f.dimension >> f.form_degree >> f.betti >> f.label >> f.truncation)) {
        throw std::invalid_argument("bad fixture header, expected 'm p b_p label truncation'");
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        SpectrumEntry e{};
        if (!(ls >> e.eigenvalue >> e.multiplicity)) {
            throw std::invalid_argument("bad fixture line: " + line);
        }
        f.entries.push_back(e);
    }
    validate(f);
    return f;
}

SpectrumFixture load_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fixture file " + path);
    return load_fixture(in);
}

void save_fixture(std::ostream& out, const SpectrumFixture& f) {
    out << f.dimension << " " << f.form_degree << " " << f.betti << " " << f.label << " "
        << f.truncation << "\n";
    out.precision(17);
    for (const auto& e : f.entries) out << e.eigenvalue << " " << e.multiplicity << "\n";
}

SpectrumFixture make_sphere_fixture(int m, int k_max) {
    if (m < 1) throw std::invalid_argument("sphere dimension must be >= 1");
    if (k_max < 0) throw std::invalid_argument("truncation must be >= 0");
    SpectrumFixture f;
    f.dimension = m;
    f.form_degree = 0;
    f.betti = 1;  // connected: the constants are the only harmonic functions
    f.label = "S" + std::to_string(m) + "-p0";
    f.truncation = k_max;
    for (int k = 0; k <= k_max; ++k) {
        const double eigenvalue = static_cast<double>(k) * (k + m - 1);
        // dimension of the degree-k harmonic space
        const BigInt mult = binomial(m + k, k) - binomial(m + k - 2, k - 2);
        f.entries.push_back({eigenvalue, mult.get_ui()});
    }
    validate(f);
    return f;
}

SpectrumFixture scale_fixture(const SpectrumFixture& fixture, double factor) {
    if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
    SpectrumFixture f = fixture;
    for (auto& e : f.entries) e.eigenvalue *= factor;
    return f;
}

TraceValue heat_trace(const SpectrumFixture& fixture, double t) {
    validate(fixture);
    if (!(t > 0)) throw std::invalid_argument("heat trace needs t > 0");
    // Kahan summation in ascending term order (descending eigenvalue)
    double sum = 0, comp = 0;
    for (auto it = fixture.entries.rbegin(); it != fixture.entries.rend(); ++it) {
        const double term =
            static_cast<double>(it->multiplicity) * std::exp(-it->eigenvalue * t);
        const double y = term - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    // Geometric tail: continue the last eigenvalue gap with the last
    // multiplicity. An estimate, not a certified bound.
    const auto& last = fixture.entries.back();
    double gap = last.eigenvalue;
    if (fixture.entries.size() >= 2) {
        gap = last.eigenvalue - fixture.entries[fixture.entries.size() - 2].eigenvalue;
    }
    double tail = 0;
    if (gap > 0) {
        const double ratio = std::exp(-gap * t);
        tail = static_cast<double>(last.multiplicity) * std::exp(-last.eigenvalue * t) * ratio /
               (1.0 - ratio);
    }
    return {sum, tail};
}

std::vector<double> geometric_grid(double t_min, double t_max, int count) {
    if (!(0 < t_min && t_min < t_max) || count < 2) {
        throw std::invalid_argument("grid needs 0 < t_min < t_max and count >= 2");
    }
    std::vector<double> grid(count);
    const double step = std::log(t_max / t_min) / (count - 1);
    for (int i = 0; i < count; ++i) grid[i] = t_min * std::exp(step * i);
    return grid;
}

std::vector<double> default_fit_grid() { return geometric_grid(0.01, 0.1, 40); }

namespace {

// Householder QR least squares for a handful of columns; returns the
// coefficient vector and reports the scaled condition estimate.
struct LeastSquares {
    std::vector<double> coefficients;
    double rms_residual;
    double condition;
};

LeastSquares solve_least_squares(std::vector<std::vector<double>> columns,
                                 std::vector<double> rhs) {
    const std::size_t rows = rhs.size();
    const std::size_t cols = columns.size();
    std::vector<double> scale(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        double norm = 0;
        for (double x : columns[c]) norm += x * x;
        scale[c] = std::sqrt(norm);
        if (scale[c] == 0) throw std::invalid_argument("degenerate design column");
        for (double& x : columns[c]) x /= scale[c];
    }
    // In-place Householder on the column-scaled design
    std::vector<double> diag(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        double norm = 0;
        for (std::size_t r = c; r < rows; ++r) norm += columns[c][r] * columns[c][r];
        norm = std::sqrt(norm);
        if (columns[c][c] > 0) norm = -norm;
        diag[c] = norm;
        if (norm == 0) throw std::invalid_argument("rank-deficient design");
        const double head = columns[c][c] - norm;
        for (std::size_t r = c + 1; r < rows; ++r) columns[c][r] /= head;
        columns[c][c] = head;
        // apply reflector to remaining columns and to rhs
        const double tau = -head / norm;
        for (std::size_t c2 = c + 1; c2 <= cols; ++c2) {
            std::vector<double>& target = (c2 < cols) ? columns[c2] : rhs;
            double dot = target[c];
            for (std::size_t r = c + 1; r < rows; ++r) dot += columns[c][r] * target[r];
            dot *= tau;
            target[c] -= dot;
            for (std::size_t r = c + 1; r < rows; ++r) target[r] -= dot * columns[c][r];
        }
    }
    double dmin = std::abs(diag[0]), dmax = std::abs(diag[0]);
    for (double d : diag) {
        dmin = std::min(dmin, std::abs(d));
        dmax = std::max(dmax, std::abs(d));
    }
    LeastSquares out;
    out.condition = dmax / dmin;
    out.coefficients.assign(cols, 0.0);
    for (std::size_t c = cols; c-- > 0;) {
        double v = rhs[c];
        for (std::size_t c2 = c + 1; c2 < cols; ++c2) v -= /*R[c][c2]*/ columns[c2][c] * out.coefficients[c2];
        out.coefficients[c] = v / diag[c];
    }
    double resid = 0;
    for (std::size_t r = cols; r < rows; ++r) resid += rhs[r] * rhs[r];
    out.rms_residual = std::sqrt(resid / rows);
    for (std::size_t c = 0; c < cols; ++c) out.coefficients[c] /= scale[c];
    return out;
}

}  // namespace

ExpansionFit fit_expansion(const SpectrumFixture& fixture, int order,
                           std::span<const double> t_grid, double condition_limit) {
    if (order < 0 || order > 2) {
        throw std::invalid_argument("only orders 0..2 carry closed-form coefficients");
    }
    if (t_grid.size() < static_cast<std::size_t>(order) + 2) {
        throw std::invalid_argument("grid too small for the requested order");
    }
    for (double t : t_grid) {
        if (!(t > 0)) throw std::invalid_argument("grid points must be positive");
    }

    const double half_m = fixture.dimension / 2.0;
    std::vector<double> rhs(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        rhs[i] = std::pow(4.0 * std::numbers::pi * t, half_m) * heat_trace(fixture, t).value;
    }
    std::vector<std::vector<double>> columns(order + 1,
                                             std::vector<double>(t_grid.size(), 1.0));
    for (int c = 1; c <= order; ++c) {
        for (std::size_t i = 0; i < t_grid.size(); ++i) {
            columns[c][i] = columns[c - 1][i] * t_grid[i];
        }
    }
    LeastSquares ls = solve_least_squares(std::move(columns), std::move(rhs));
    if (ls.condition > condition_limit) {
        throw std::invalid_argument("fit grid rejected: condition estimate " +
                                    std::to_string(ls.condition) + " exceeds limit " +
                                    std::to_string(condition_limit));
    }
    ExpansionFit fit;
    fit.order = order;
    fit.coefficients = std::move(ls.coefficients);
    fit.rms_residual = ls.rms_residual;
    fit.condition = ls.condition;
    fit.t_grid.assign(t_grid.begin(), t_grid.end());
    return fit;
}

PatodiTargets patodi_targets(int m, int p, const GeometricConstants& constants) {
    std::string missing;
    auto need = [&missing](const std::optional<double>& v, const char* name) {
        if (!v) {
            if (!missing.empty()) missing += ", ";
            missing += name;
        }
        return v.value_or(0.0);
    };
    const double vol = need(constants.volume, "volume");
    const double total_s = need(constants.total_scalar, "total_scalar");
    const double total_r2 = need(constants.total_riemann_sq, "total_riemann_sq");
    const double total_ric2 = need(constants.total_ricci_sq, "total_ricci_sq");
    const double total_s2 = need(constants.total_scalar_sq, "total_scalar_sq");
    if (!missing.empty()) {
        throw std::invalid_argument("patodi_targets missing constants: " + missing);
    }

    if (m < 1 || p < 0 || p > m) throw std::invalid_argument("bad (m, p) for targets");
    // The coefficient formulas hold for every m >= 1 (out-of-range binomials
    // vanish); the m >= 4 gate of the coefficient module belongs to the
    // decomposition arguments, not to the trace expansion.
    const Rational b0(binomial(m, p)), b1(binomial(m - 2, p - 1)), b2(binomial(m - 4, p - 2));
    const Rational l1 = make_rational(1, 180) * b0 - make_rational(1, 12) * b1 +
                        make_rational(1, 2) * b2;
    const Rational l2 = make_rational(-1, 180) * b0 + make_rational(1, 2) * b1 -
                        Rational(2) * b2;
    const Rational l3 = make_rational(1, 72) * b0 - make_rational(1, 6) * b1 +
                        make_rational(1, 2) * b2;
    PatodiTargets out{};
    out.a0 = b0.get_d() * vol;
    out.a1 = Rational(make_rational(1, 6) * b0 - b1).get_d() * total_s;
    out.a2 = l1.get_d() * total_r2 + l2.get_d() * total_ric2 + l3.get_d() * total_s2;
    return out;
}

}  // namespace rigidity
