"""Smoke tests for the extension module: pinned exact values and basic shapes."""

import math
import os
from fractions import Fraction

import pytest

rigidity = pytest.importorskip("rigidity")


def test_patodi_lambdas_pinned():
    t = rigidity.patodi_lambdas(4, 2)
    assert Fraction(t["lambda1"]) == Fraction(11, 30)
    assert Fraction(t["lambda2"]) == Fraction(-31, 30)
    assert Fraction(t["lambda3"]) == Fraction(1, 4)
    assert Fraction(rigidity.patodi_lambdas(16, 2)["lambda1"]) == 0


def test_a1_coefficient():
    assert Fraction(rigidity.a1_coefficient(96, 20)) == 0
    assert Fraction(rigidity.a1_coefficient(6, 2)) == Fraction(-3, 2)
    with pytest.raises(ValueError):
        rigidity.a1_coefficient(5, 2)


def test_key_combination_both_routes():
    assert Fraction(rigidity.key_combination(5, 4)) == Fraction(67, 42)
    # closed-form weights at m = 10; eval_f returns the polynomial normal
    # form, which differs from the binomial combination by (m-4)!/(p!(m-p)!)
    f_value = rigidity.eval_f(4, 10, "53/3780", "5/126", "-5/21")
    prefactor = Fraction(math.factorial(6), math.factorial(4) * math.factorial(6))
    assert Fraction(f_value) * prefactor == Fraction(rigidity.key_combination(5, 4))


def test_identity_certificate():
    report = rigidity.verify_key_combination_identity(8)
    assert report["certified"] is True
    assert report["degrees_checked"] == 7
    assert report["failures"] == []


def test_certify_proposition():
    report = rigidity.certify_proposition(4, 100)
    assert report["ok"] is True
    assert report["lambda1_equalities"] == [(2, 16)]
    assert report["key_equalities"] == []


def test_closed_forms():
    assert rigidity.verify_closed_forms(16)["ok"] is True


def test_exceptional_pairs():
    pairs = rigidity.exceptional_pairs(3)
    assert [(p["n"], p["p"]) for p in pairs] == [
        ("48", "20"),
        ("9408", "3976"),
        ("1825200", "771420"),
    ]
    assert pairs[0]["mirror"] == "76"


def test_brute_force_scan():
    assert rigidity.brute_force_scan("100") == [("48", "20"), ("48", "76")]
    assert rigidity.brute_force_scan("47") == []


def test_classify_degree():
    c = rigidity.classify_degree("20")
    assert c["exceptional"] is True
    assert c["exceptional_dimension"] == "48"
    assert c["unresolved_dimensions"] == ["10", "48"]
    assert rigidity.classify_degree("2")["unresolved_dimensions"] == ["1"]


def test_bundle_report():
    report = rigidity.bundle_report(1, "8", 2)
    assert report["a_squared"] == "4/1 * pi^2"
    assert report["einstein"] is True
    assert Fraction(report["ricci_tangent"]) == 2


def test_volume_bound():
    b = rigidity.volume_bound(3, 1)
    assert Fraction(b["ratio"]) == 4
    assert Fraction(b["degree_bound"]) == 256


def test_curvature_selftest():
    report = rigidity.curvature_selftest(n=2, trials=10, seed=5)
    assert report["ok"] is True
    assert report["fs_degenerate"] is True


def test_sphere_fit():
    fit = rigidity.fit_sphere_expansion(m=2, k_max=200, order=2)
    a0, a1, a2 = fit["coefficients"]
    assert abs(a0 - 4 * math.pi) / (4 * math.pi) < 0.01
    assert abs(a1 - 4 * math.pi / 3) / (4 * math.pi / 3) < 0.02
    assert abs(a2 - 4 * math.pi / 15) / (4 * math.pi / 15) < 0.05


def test_fixture_file_fit():
    fixture_dir = os.environ.get("RIGIDITY_FIXTURE_DIR")
    if not fixture_dir:
        pytest.skip("fixture directory not provided")
    fit = rigidity.fit_fixture_file(os.path.join(fixture_dir, "s2_p0.txt"))
    assert abs(fit["coefficients"][0] - 4 * math.pi) / (4 * math.pi) < 0.01


def test_trace_value():
    value, tail = rigidity.sphere_heat_trace(2, 200, 0.1)
    # classical small-t behaviour: 1/t + 1/3 + t/15 + ...
    assert abs(value - (10 + 1 / 3 + 0.1 / 15)) < 1e-3
    assert tail < 1e-15
