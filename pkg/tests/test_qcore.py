import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qchanghee import DomainError, QParams, binomial, q_bracket, q_power
from qchanghee.qcore import Q_LIMIT_THRESHOLD


def test_bracket_examples():
    assert q_bracket(0, 0.5) == 0
    assert q_bracket(2, 0.5) == pytest.approx(1.5, abs=1e-15)
    assert q_bracket(3.7 + 0j, 1) == 3.7


def test_bracket_limit_branch_threshold():
    assert q_bracket(2.5, 1 + 0.5 * Q_LIMIT_THRESHOLD) == 2.5
    # just outside the threshold the ordinary formula is used
    assert q_bracket(2.5, 1 - 1e-6) == pytest.approx(2.5, rel=1e-5)


def test_bracket_q_zero():
    assert q_bracket(1.5, 0) == 1
    assert q_bracket(0, 0) == 0
    with pytest.raises(DomainError):
        q_bracket(-1, 0)


def test_power_examples():
    assert q_power(2, 0.5) == pytest.approx(0.25, abs=1e-16)
    assert q_power(0, 0.3 + 0.2j) == 1
    assert q_power(0.5, 0.25) == pytest.approx(0.5, abs=1e-16)
    with pytest.raises(DomainError):
        q_power(1, 0)


def test_power_principal_branch():
    # Log(-1) = i pi, so (-1)^(1/2) = i
    assert q_power(0.5, -1) == pytest.approx(1j, abs=1e-15)


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert all(binomial(n, 0) == 1 for n in range(30))
    assert binomial(4, 7) == 0


def test_pascal_rule_exact():
    for n in range(1, 61):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


disk = st.builds(
    lambda r, t: cmath.rect(r, t),
    st.floats(0.05, 0.95),
    st.floats(-math.pi + 1e-3, math.pi),
)
moderate = st.builds(complex, st.floats(-4, 4), st.floats(-1, 1))


@settings(max_examples=300, deadline=None)
@given(x=moderate, q=disk)
def test_bracket_identity(x, q):
    lhs = q_bracket(x, q) * (1 - q) + q_power(x, q)
    assert abs(lhs - 1) <= 1e-13 * max(1.0, abs(q_power(x, q)))


@settings(max_examples=300, deadline=None)
@given(x=moderate, y=moderate, q=disk)
def test_q_addition_law(x, y, q):
    # keep clear of the branch cut: |Im| below pi/|Log q|
    bound = math.pi / abs(cmath.log(q))
    if max(abs(x.imag), abs(y.imag), abs((x + y).imag)) >= bound:
        return
    lhs = q_bracket(x + y, q)
    rhs = q_bracket(x, q) + q_power(x, q) * q_bracket(y, q)
    scale = max(1.0, abs(lhs), abs(q_power(x, q) * q_bracket(y, q)))
    assert abs(lhs - rhs) <= 1e-12 * scale


def test_qparams_validation():
    p = QParams(0.5, 0.3, 1, (1, 2), (1, 1))
    assert p.rank == 2
    assert p.weights == (1 + 0j, 2 + 0j)
    for bad in (
        dict(q=1.0, u=0.3),
        dict(q=0, u=0.3),
        dict(q=0.5, u=1.2),
        dict(q=0.5, u=0.3, w=-1),
        dict(q=0.5, u=0.3, weights=(1, 2), dampings=(1,)),
        dict(q=0.5, u=0.3, weights=(-1,), dampings=(1,)),
        dict(q=0.5, u=0.3, weights=(1,), dampings=(0,)),
        dict(q=float("nan"), u=0.3),
    ):
        with pytest.raises(DomainError):
            QParams(**bad)


def test_qparams_helpers():
    p = QParams.single(0.25, 0.5, 1, 2, 3)
    assert p.damping_ratios() == pytest.approx((0.125,))
    assert p.weight_growths() == pytest.approx((0.0625,))
    assert p.replace(u=0.1).u == 0.1
    assert p.as_dict()["weights"] == [{"re": 2.0, "im": 0.0}]
