import math

import pytest
from hypothesis import given, strategies as st

from qcdist.errors import DomainError
from qcdist.mn_lemma import (
    MNParams, compute_M, dp_func, iterate_a, p_func, p_inverse, q_func,
    quadratic_residual, upper_cap,
)

P = MNParams(3, 2)
M_32 = 1.3253802517526509615


def test_M():
    M = compute_M(P)
    assert M == pytest.approx(M_32, rel=1e-14)
    assert abs(quadratic_residual(P, M)) < 1e-10
    assert compute_M((1, 1)) > 1


def test_params_validation():
    with pytest.raises(DomainError):
        MNParams(0.5, 2)
    with pytest.raises(DomainError):
        p_func(P, 0.9)


def test_p_closed_form():
    for x in (1.0, 2.0, 5.5):
        direct = math.log(2 ** (3 * x - 2) * x ** (2 * x) - 1)
        assert p_func(P, x) == pytest.approx(direct, rel=1e-13)
    assert p_func(P, 1.0) == q_func(P, 1.0) == 0.0


def test_dp_matches_finite_difference():
    for x in (1.2, 3.0, 10.0):
        h = 1e-6
        assert dp_func(P, x) == pytest.approx((p_func(P, x + h) - p_func(P, x - h)) / (2 * h), rel=1e-7)


@given(st.floats(1.0, 40.0))
def test_p_inverse_roundtrip(x):
    assert p_inverse(P, p_func(P, x)) == pytest.approx(x, rel=1e-12)


def test_p_inverse_edges():
    assert p_inverse(P, 0.0) == 1.0
    assert p_func(P, p_inverse(P, 1e4)) == pytest.approx(1e4, rel=1e-12)
    with pytest.raises(DomainError):
        p_inverse(P, -1.0)


def test_iteration():
    tr = iterate_a(P)
    seq = tr.sequence
    assert tr.converged
    assert seq[0] == compute_M(P)
    assert all(b > a for a, b in zip(seq, seq[1:]))
    assert seq[36] > 17
    assert max(seq) < 2 ** 3 * math.e ** 2 == pytest.approx(upper_cap(P))
    a = tr.limit_estimate
    assert abs(p_func(P, a) - q_func(P, a)) < 1e-9
    assert a == pytest.approx(17.155792514167146, rel=1e-10)
    assert len(tr) == 184


def test_iteration_budget():
    tr = iterate_a(P, max_steps=5)
    assert not tr.converged and len(tr) == 6
    with pytest.raises(DomainError):
        iterate_a(P, max_steps=0)


@pytest.mark.parametrize("mn", [(1, 1), (2, 1), (5, 4)])
def test_other_params(mn):
    p = MNParams(*mn)
    tr = iterate_a(p)
    assert tr.converged
    assert tr.limit_estimate < upper_cap(p)
    assert q_func(p, compute_M(p)) >= p_func(p, compute_M(p))
