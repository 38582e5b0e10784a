import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from oracles import mp_closed, mp_direct
from qchanghee import (
    DomainError,
    PoleError,
    QParams,
    Route,
    ToleranceError,
    changhee_number,
    f_eval,
    h_multiple_closed,
    h_poly_closed,
    h_series_oracle,
    h_series_values,
    h_single_closed,
    q_bracket,
    q_power,
)
from qchanghee.verify import disk_draw


def test_single_examples():
    p = QParams(0.5, 1 / 3, 0, (1,), (1,))
    assert h_single_closed(0, p) == pytest.approx(1, abs=1e-15)
    q, u = Fraction(1, 2), Fraction(1, 3)
    hand = (1 - u) / (1 - q) * (1 / (1 - u) - 1 / (1 - q * u))
    assert hand == Fraction(2, 5)
    assert abs(h_single_closed(1, p) - 0.4) < 1e-15
    p3 = QParams(0.4, 0.2, 0, (2,), (1.5,))
    assert abs(h_single_closed(0, p3) - 0.8 / (1 - 0.2 ** 1.5)) < 1e-15


def test_single_against_series():
    p = QParams(0.4, 0.2, 0, (2,), (1,))
    x = h_single_closed(3, p)
    assert abs(x - h_series_oracle(3, p, tol=1e-13).value) < 1e-11
    assert abs(x - mp_closed(3, p)) < 1e-14


def test_single_ignores_shift_and_checks_rank():
    p = QParams(0.4, 0.2, 1.5, (2,), (1,))
    assert h_single_closed(2, p) == h_single_closed(2, p.replace(w=0))
    with pytest.raises(DomainError):
        h_single_closed(1, QParams(0.4, 0.2, 0, (1, 1), (1, 1)))
    with pytest.raises(DomainError):
        h_poly_closed(1, QParams(0.4, 0.2, 0, (1, 1), (1, 1)))
    with pytest.raises(DomainError):
        h_multiple_closed(-1, p)


def test_poly_examples():
    p = QParams(0.5, 0.25, 0, (1,), (2,))
    for n in range(6):
        assert h_poly_closed(n, p) == h_single_closed(n, p)
    p1 = p.replace(w=1)
    assert h_poly_closed(0, p1) == pytest.approx(0.75 / (1 - 0.25 ** 2), abs=1e-15)
    direct = mp_direct(p1, 2, L=30)
    assert abs(h_poly_closed(2, p1) - direct) < 1e-11


def test_multiple_examples():
    p = QParams(0.3 + 0.2j, 0.5 - 0.1j, 0.7, (1.3,), (0.8,))
    for n in range(13):
        assert h_multiple_closed(n, p) == h_poly_closed(n, p)
    p2 = QParams(0.3, 0.6, 1.2, (1, 2.5), (0.5, 2))
    expected = (1 - 0.6) ** 2 / ((1 - 0.6 ** 0.5) * (1 - 0.6 ** 2))
    assert abs(h_multiple_closed(0, p2) - expected) < 1e-15
    for n in range(9):
        assert abs(h_multiple_closed(n, p2) - mp_closed(n, p2)) <= 1e-13 * max(1, abs(mp_closed(n, p2)))


def test_permutation_invariance():
    p = QParams(0.35, 0.45, 0.6, (1.1, 2.7, 0.4), (0.9, 1.3, 2.2))
    swapped = QParams(0.35, 0.45, 0.6, (2.7, 0.4, 1.1), (1.3, 2.2, 0.9))
    for n in range(9):
        a, b = h_multiple_closed(n, p), h_multiple_closed(n, swapped)
        assert abs(a - b) <= 1e-15 * abs(a)


def test_pole_named():
    lq = math.log(0.5) + 3j
    weight = (math.log(2) + 2j * math.pi) / lq
    p = QParams(cmath.rect(0.5, 3), 0.5, 0, (weight,), (1,))
    assert h_multiple_closed(0, p) is not None
    with pytest.raises(PoleError, match="l=1, j=0"):
        h_multiple_closed(1, p)


def test_argument_shift_law():
    for q, u, w, a, v in ((0.5, 0.3, 0.8, 1.2, 0.7), (0.3 + 0.4j, 0.2 - 0.5j, 1.7, 0.6, 2.1)):
        p = QParams(q, u, w, (a,), (v,))
        h0 = [h_single_closed(k, p) for k in range(9)]
        bw, qw = q_bracket(w, q), q_power(w, q)
        for n in range(9):
            rhs = sum(math.comb(n, k) * bw ** (n - k) * qw ** k * h0[k] for k in range(n + 1))
            assert abs(h_poly_closed(n, p) - rhs) <= 1e-10 * max(1, abs(rhs))


def test_series_oracle_examples():
    p = QParams(0.5, 1 / 3, 0, (1,), (1,))
    ev0 = h_series_oracle(0, p, tol=1e-12)
    assert abs(ev0.value - 1) <= 1e-12
    ev1 = h_series_oracle(1, p, tol=1e-12)
    assert abs(ev1.value - 0.4) <= 1e-12
    assert ev1.tail_bound <= 1e-12
    assert ev1.terms_used == math.prod(L + 1 for L in ev1.truncation)
    p2 = QParams(0.3, 0.2, 1, (1, 1), (1, 1))
    assert abs(h_series_oracle(1, p2, tol=1e-12).value - h_multiple_closed(1, p2)) <= 1e-12


def test_series_oracle_forced_box():
    p = QParams(0.4, 0.3, 0.5, (1, 2), (1, 1))
    ev = h_series_oracle(2, p, cutoffs=(8, 8))
    assert ev.truncation == (8, 8) and ev.terms_used == 81
    assert abs(ev.value - mp_direct(p, 2, L=8)) < 1e-13
    assert abs(ev.value - h_multiple_closed(2, p)) <= ev.tail_bound
    with pytest.raises(DomainError):
        h_series_oracle(2, p, cutoffs=(8,))


def test_series_values_shared_sweep():
    p = QParams(0.6, 0.5, 0.9, (0.7, 1.4), (1.0, 0.6))
    evs = h_series_values(range(5), p, tol=1e-12)
    for n, ev in enumerate(evs):
        assert abs(ev.value - h_multiple_closed(n, p)) <= 1e-11
        assert ev.tail_bound <= 1e-12


def test_route_agreement_complex_draws():
    rng = np.random.default_rng(23)
    for k in range(9):
        p = disk_draw(rng, 1 + k % 3)
        for n, ev in enumerate(h_series_values(range(9), p, tol=1e-12)):
            assert abs(ev.value - h_multiple_closed(n, p)) <= 1e-10


def test_extended_and_binary64_agree():
    p = QParams(0.5 + 0.3j, -0.4 + 0.2j, 1.1, (0.8,), (1.3,))
    a = h_series_oracle(4, p, extended=True).value
    b = h_series_oracle(4, p, extended=False).value
    assert abs(a - b) < 1e-11


def test_term_budget(monkeypatch):
    monkeypatch.setenv("CHANGHEE_MAX_TERMS", "10")
    with pytest.raises(ToleranceError):
        h_series_oracle(2, QParams(0.5, 0.7, 0, (1, 1), (1, 1)), tol=1e-12)


def test_f_eval_at_zero():
    assert abs(f_eval(0, QParams(0.5, 0.3)).value - 1) < 1e-14
    p = QParams(0.4, 0.6, 0.5, (1, 2), (0.5, 1.5))
    expected = (1 - 0.6) ** 2 / ((1 - 0.6 ** 0.5) * (1 - 0.6 ** 1.5))
    assert abs(f_eval(0, p).value - expected) < 1e-13


def test_f_eval_derivative():
    h = 1e-5
    for p in (QParams(0.5, 0.3, 0.4, (1,), (1,)), QParams(0.3, 0.5, 1.0, (1, 0.5), (1, 2))):
        fd = (f_eval(h, p).value - f_eval(-h, p).value) / (2 * h)
        assert abs(fd - h_multiple_closed(1, p)) < 1e-8


def test_f_eval_against_direct_sum():
    import mpmath

    p = QParams(0.5, 0.4, 0.3, (1.5,), (1,))
    t = -0.7 + 0.2j
    ref = 0.6 * sum(mpmath.mpf(0.4) ** n * mpmath.exp(((1 - mpmath.mpf(0.5) ** (0.3 + 1.5 * n)) / 0.5) * t)
                    for n in range(80))
    assert abs(f_eval(t, p).value - complex(ref)) < 1e-13


def test_changhee_number_routes():
    p = QParams(0.45, 0.35, 0.6, (1, 1.5), (1, 1))
    closed = changhee_number(4, p)
    assert closed.route is Route.CLOSED_FORM and closed.error_bound == 0
    for route in ("series_oracle", "gf_coeff"):
        other = changhee_number(4, p, route, tol=1e-12)
        assert other.route is Route(route)
        assert abs(other.value - closed.value) <= 1e-10
