// Python surface over the core operations: exact values cross the boundary
// as canonical fraction strings, big integers as decimal strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "rigidity/circle_bundle.hpp"
#include "rigidity/curvature.hpp"
#include "rigidity/exact.hpp"
#include "rigidity/heat_coefficients.hpp"
#include "rigidity/heat_trace.hpp"
#include "rigidity/pell.hpp"
#include "rigidity/positivity.hpp"

namespace py = pybind11;
using namespace rigidity;

namespace {

std::string frac(const Rational& q) { return fraction_string(q); }

py::dict lambdas_dict(long m, long p) {
    const PatodiTriple t = patodi_lambdas(m, p);
    py::dict d;
    d["m"] = m;
    d["p"] = p;
    d["lambda1"] = frac(t.lambda1);
    d["lambda2"] = frac(t.lambda2);
    d["lambda3"] = frac(t.lambda3);
    return d;
}

py::dict kahler_dict(long n, long p) {
    const HeatCoefficientReport r = kahler_a2_coefficients(n, p);
    py::dict d;
    d["n"] = n;
    d["p"] = p;
    d["a0_coeff"] = frac(r.a0_coeff);
    d["a1_coeff"] = frac(r.a1_coeff);
    d["kahler_s2"] = frac(r.kahler_s2);
    d["kahler_ric"] = frac(r.kahler_ric);
    d["kahler_bochner"] = frac(r.kahler_bochner);
    d["key_combination"] = frac(r.key_combination);
    return d;
}

py::dict identity_dict(long n) {
    const IdentityCertificate c = verify_key_combination_identity(n);
    py::dict d;
    d["n"] = n;
    d["certified"] = c.certified;
    d["degrees_checked"] = c.degrees_checked;
    py::list failures;
    for (const auto& f : c.failures) {
        py::dict fd;
        fd["component"] = f.component;
        fd["lhs"] = f.lhs;
        fd["rhs"] = f.rhs;
        failures.append(fd);
    }
    d["failures"] = failures;
    return d;
}

py::dict certify_dict(long m_min, long m_max) {
    const PositivityCertificate c = certify_proposition(m_min, m_max);
    py::dict d;
    d["m_min"] = c.m_min;
    d["m_max"] = c.m_max;
    d["pairs_checked"] = c.pairs_checked;
    py::list lam;
    for (const auto& e : c.lambda1_equalities) lam.append(py::make_tuple(e.p, e.m));
    d["lambda1_equalities"] = lam;
    py::list key;
    for (const auto& e : c.key_equalities) key.append(py::make_tuple(e.p, e.m));
    d["key_equalities"] = key;
    d["ok"] = c.ok;
    return d;
}

py::dict closed_forms_dict(long m) {
    const ClosedFormCheck c = verify_closed_forms(m);
    py::dict d;
    d["m"] = m;
    d["ok"] = c.ok;
    if (!c.ok) {
        d["failed"] = c.failed_name;
        d["lhs"] = c.lhs;
        d["rhs"] = c.rhs;
    }
    return d;
}

py::list exceptional_list(int count) {
    py::list out;
    for (const auto& pr : exceptional_pairs(count)) {
        py::dict d;
        d["k"] = pr.index;
        d["n"] = pr.n.get_str();
        d["p"] = pr.p.get_str();
        d["mirror"] = pr.mirror.get_str();
        out.append(d);
    }
    return out;
}

py::list scan_list(const std::string& n_max) {
    BigInt bound;
    if (bound.set_str(n_max, 10) != 0) throw std::invalid_argument("n_max must be an integer");
    py::list out;
    for (const auto& [n, p] : brute_force_scan(bound)) {
        out.append(py::make_tuple(n.get_str(), p.get_str()));
    }
    return out;
}

py::dict classify_dict(const std::string& degree) {
    BigInt p;
    if (p.set_str(degree, 10) != 0) throw std::invalid_argument("p must be an integer");
    const DegreeClassification c = classify_degree(p);
    py::dict d;
    d["p"] = c.p.get_str();
    d["exceptional"] = c.exceptional;
    if (c.exceptional) {
        d["generation"] = *c.generation;
        d["exceptional_dimension"] = c.exceptional_dimension->get_str();
    }
    py::list unresolved;
    for (const auto& n : c.unresolved_dimensions) unresolved.append(n.get_str());
    d["unresolved_dimensions"] = unresolved;
    return d;
}

py::dict bundle_dict(long n, const std::string& s_text, long fano_index) {
    const Rational s = parse_fraction(s_text);
    const PiScaled a2 = einstein_parameter_squared(n, s, fano_index);
    const BundleRicci r = bundle_ricci(n, s, fano_index, a2);
    py::dict d;
    d["n"] = n;
    d["s_g"] = frac(s);
    d["fano_index"] = fano_index;
    d["connection_square"] = connection_square(n, s, fano_index).str();
    d["a_squared"] = a2.str();
    d["ricci_tangent"] = frac(r.r_tangent);
    d["ricci_fiber"] = frac(r.r_fiber);
    d["einstein"] = (r.r_tangent == r.r_fiber);
    return d;
}

py::dict volume_dict(long n, long fano_index) {
    const VolumeBound b = volume_bound(n, fano_index);
    py::dict d;
    d["ratio"] = frac(b.ratio);
    d["degree_bound"] = frac(b.degree_bound);
    return d;
}

py::dict curvature_selftest_dict(int n, int trials, std::uint64_t seed) {
    Tolerances tol;
    int failed = 0;
    double worst_identity = 0, worst_bridge = 0;
    const auto fs_dec = decompose_kahler(fubini_study_tensor(n, 2.0), tol);
    const bool fs_degenerate =
        fs_dec.norm_traceless_part < 1e-24 && fs_dec.norm_bochner_part < 1e-24;
    if (!fs_degenerate) ++failed;
    for (int trial = 0; trial < trials; ++trial) {
        const auto rc = random_kahler_curvature(n, n + 1, seed + trial);
        const auto dec = decompose_kahler(rc, tol);
        const auto bridge = verify_norm_bridge(rc, tol);
        const auto real_dec = decompose_real(realify(rc), tol);
        if (!dec.all_identities_hold || !bridge.ok || !real_dec.all_identities_hold) ++failed;
        for (const auto& c : dec.checks) {
            worst_identity = std::max(worst_identity, std::abs(c.lhs - c.rhs));
        }
        worst_bridge = std::max(
            worst_bridge, std::abs(bridge.riemann_identity.lhs - bridge.riemann_identity.rhs));
    }
    py::dict d;
    d["n"] = n;
    d["trials"] = trials;
    d["seed"] = seed;
    d["fs_degenerate"] = fs_degenerate;
    d["failed_checks"] = failed;
    d["worst_identity_residual"] = worst_identity;
    d["worst_bridge_residual"] = worst_bridge;
    d["ok"] = (failed == 0);
    return d;
}

py::dict fit_dict(const SpectrumFixture& fixture, int order) {
    const ExpansionFit fit = fit_expansion(fixture, order, default_fit_grid());
    py::dict d;
    d["label"] = fixture.label;
    d["m"] = fixture.dimension;
    d["p"] = fixture.form_degree;
    d["order"] = fit.order;
    d["coefficients"] = fit.coefficients;
    d["rms_residual"] = fit.rms_residual;
    d["condition"] = fit.condition;
    return d;
}

}  // namespace

PYBIND11_MODULE(rigidity, m) {
    m.doc() = "exact and numerical verification routines for spectral-rigidity computations";

    m.def("patodi_lambdas", &lambdas_dict, py::arg("m"), py::arg("p"),
          "exact heat-coefficient weights at (m, p), as fraction strings");
    m.def(
        "a1_coefficient", [](long m, long p) { return frac(a1_coefficient(m, p)); },
        py::arg("m"), py::arg("p"));
    m.def("kahler_a2_coefficients", &kahler_dict, py::arg("n"), py::arg("p"));
    m.def(
        "key_combination", [](long n, long p) { return frac(key_combination(n, p)); },
        py::arg("n"), py::arg("p"));
    m.def("verify_key_combination_identity", &identity_dict, py::arg("n"));

    m.def(
        "eval_f",
        [](long p, long m, const std::string& alpha, const std::string& beta,
           const std::string& gamma) {
            return frac(eval_f(p, m,
                               {parse_fraction(alpha), parse_fraction(beta),
                                parse_fraction(gamma)}));
        },
        py::arg("p"), py::arg("m"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"));
    m.def("verify_closed_forms", &closed_forms_dict, py::arg("m"));
    m.def("certify_proposition", &certify_dict, py::arg("m_min"), py::arg("m_max"));

    m.def("exceptional_pairs", &exceptional_list, py::arg("count"));
    m.def("brute_force_scan", &scan_list, py::arg("n_max"));
    m.def("classify_degree", &classify_dict, py::arg("p"));

    m.def("bundle_report", &bundle_dict, py::arg("n"), py::arg("s_g"), py::arg("fano_index"));
    m.def("volume_bound", &volume_dict, py::arg("n"), py::arg("fano_index"));

    m.def("curvature_selftest", &curvature_selftest_dict, py::arg("n") = 3,
          py::arg("trials") = 50, py::arg("seed") = 7);

    m.def(
        "fit_sphere_expansion",
        [](int m, int k_max, int order) { return fit_dict(make_sphere_fixture(m, k_max), order); },
        py::arg("m") = 2, py::arg("k_max") = 200, py::arg("order") = 2);
    m.def(
        "fit_fixture_file",
        [](const std::string& path, int order) { return fit_dict(load_fixture_file(path), order); },
        py::arg("path"), py::arg("order") = 2);
    m.def(
        "sphere_heat_trace",
        [](int m, int k_max, double t) {
            const TraceValue v = heat_trace(make_sphere_fixture(m, k_max), t);
            return py::make_tuple(v.value, v.tail_estimate);
        },
        py::arg("m"), py::arg("k_max"), py::arg("t"));
}
