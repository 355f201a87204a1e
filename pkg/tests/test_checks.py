import math
from fractions import Fraction

import pytest

from qcdist.checks import SUITES, complement_residual, mu_symmetry_defect, run_suites
from qcdist.report import check, not_applicable, record


def test_report_semantics():
    r = check("x", 1.0, 2.0)
    assert r.passed and r.margin == 1.0
    assert check("x", 1.0, 1.0, strict=True).passed is False
    assert check("x", 1.0 + 1e-13, 1.0).passed
    assert check("x", 1.0 + 1e-10, 1.0).failed
    assert check("x", 1.0 + 1e-15, 1.0, rtol=1e-14).passed
    assert record("x", 1, 2).passed is None
    na = not_applicable("x", "K > 17")
    assert na.passed is None and na.validity_note.startswith("not applicable")
    d = check("x", 0.0, math.inf, K=2.0).to_dict()
    assert d["pass"] is True and d["rhs"] == "inf" and d["params"] == {"K": 2.0}


def test_complement_residual():
    # binary 0.6 and 0.8 are not exact; the residual is the true one, not the float one
    exact = (Fraction(1) - Fraction(0.6) ** 2 - Fraction(0.8) ** 2) / (2 * Fraction(0.8))
    assert complement_residual(0.6, 0.8) == pytest.approx(float(exact), rel=1e-15)
    assert complement_residual(0.0, 1.0) == 0.0


def test_mu_symmetry_defect():
    corrected, raw = mu_symmetry_defect(1e-4)
    assert abs(corrected) < 1e-11
    # raw value is limited by the rounding of r'
    assert abs(raw) > abs(corrected)


@pytest.mark.parametrize("name", list(SUITES))
def test_suite_green(name):
    reps = [r for _, r in run_suites([name], points=20, seed=1)]
    assert reps
    bad = [r.line() for r in reps if r.failed]
    assert not bad, bad


def test_run_suites_deterministic():
    a = [r.to_dict() for _, r in run_suites(["witness-maps", "ball"], points=10, seed=5)]
    b = [r.to_dict() for _, r in run_suites(["witness-maps", "ball"], points=10, seed=5)]
    assert a == b
