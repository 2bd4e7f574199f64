"""Smoke tests for the python bindings (PYTHONPATH points at the build tree)."""
import math
from fractions import Fraction

import pytest

import kummerkit as kk


def test_eval_0f1_matches_sinh():
    value, terms = kk.eval_0f1(1.5, 0.25)
    assert math.isclose(value, math.sinh(1.0), rel_tol=1e-12)
    assert terms >= 5


def test_eval_1f1_exact_returns_fraction_string():
    text, _ = kk.eval_1f1_exact("1", "2", "1", tol=1e-15)
    assert math.isclose(float(Fraction(text)), math.e - 1.0, rel_tol=1e-14)


def test_frobenius_dict():
    sol = kk.frobenius(1, "1", n=4)
    assert sol["coefficients"][:4] == ["1", "-1/3", "1/6", "-1/30"]
    assert sol["residual_zero"] is True
    assert sol["log_case"] is False
    assert sol["beta"] == "3"
    assert sol["integer_gap"] == 2
    assert kk.frobenius(1, "1/4")["integer_gap"] is None


def test_certify_family():
    assert kk.certify_family("M1-λ2-2a", "1/4", 64) == (True, -1)
    assert kk.closed_coeff("P1-λ0", "1", 2) == "1/6"


def test_verify_identity():
    report = kk.verify_identity("Kummer2", [1.0, 2.5], [-1.0, 0.5, 2.0], tol=1e-10)
    assert report["pass"] is True
    assert len(report["points"]) == 6


def test_connection_constants():
    assert kk.connection_constants("ContigPlus", "1/3", 8) == ("1", "0", "series-matching")


def test_lhs_series_is_even_for_kummer2():
    coeffs = kk.lhs_series_exact("kummer2", "1/3", 9)
    assert coeffs[0] == "1"
    assert all(coeffs[n] == "0" for n in range(1, 10, 2))


def test_excluded_parameter_is_value_error():
    with pytest.raises(kk.ExcludedParameterError):
        kk.lhs_series_exact("ContigPlus", "-1/2", 8)
    assert issubclass(kk.ExcludedParameterError, ValueError)
    with pytest.raises(ValueError):
        kk.certify_family("P1-λ-2a", "1/2")


def test_name_lists():
    assert len(kk.families()) == 6
    assert set(kk.identities()) == {"Kummer2", "ContigPlus", "ContigMinus"}
