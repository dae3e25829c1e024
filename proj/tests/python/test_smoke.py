import math

import pytest

import cuspidal_radon as cr


def test_space_constants():
    s = cr.space(4, 2)
    assert s["rho"] == "5/2"
    assert s["case"] == "A"
    assert (s["alpha"], s["beta"]) == (0, 1)
    assert cr.space(1, 3)["degenerate_x"]


def test_classify_matches_cli_example():
    rows = cr.classify(1, 5, "3")
    assert [r["lambda"] for r in rows] == ["1/2", "3/2", "5/2"]
    assert [r["tag"] for r in rows] == ["ExceptionalOdd", "SphericalNonCuspidal", "Cuspidal"]


def test_spherical_transform_is_pi_exp_minus_s():
    rows = cr.radon(1, 3, "1/2", s=[0.0, 1.0], rel_tol=1e-12)
    assert rows[0]["value"].real == pytest.approx(math.pi, rel=1e-10)
    assert rows[1]["value"].real == pytest.approx(math.pi / math.e, rel=1e-10)


def test_bump_support():
    rows = cr.radon(4, 2, bump=1.0, s=[-1.5, 1.5])
    assert all(abs(r["value"]) <= 1e-13 for r in rows)


def test_profile_verdicts():
    assert cr.profile(2, 2, "1/2")["verdict"] == "CuspidalNumeric"
    odd = cr.profile(1, 5, "1/2")
    assert odd["verdict"] == "NonCuspidalNumeric"
    assert odd["exponent"] == pytest.approx(-2.0, abs=1e-3)


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        cr.space(0, 3)
    with pytest.raises(ValueError):
        cr.radon(2, 2, "1/3")
    with pytest.raises(ValueError):
        cr.radon(2, 2, "1/2", substitution="nope")


def test_classification_suite_passes():
    checks = cr.verify("classification")
    assert len(checks) == 36
    assert all(c["passed"] for c in checks)
    assert "decay" in cr.suite_names()
