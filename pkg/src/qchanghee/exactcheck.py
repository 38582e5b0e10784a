"""Exact rational oracle for the q-Euler numbers.

With rational ``q, u`` and integer ``w, w_j, v_j`` every power in the closed
form is rational, so both routes can be carried out without rounding:

* :func:`exact_h_multiple` evaluates the finite binomial closed form;
* :func:`exact_gf_coeff` builds the generating function
  ``(1-u)^r exp(t/(1-q)) * G(t)`` as truncated rational series, where
  ``G(t) = sum_j (-t/(1-q))^j q^{jw} / j! * prod_i M_i(j)`` and
  ``M_i(j) = sum_m u^{m v_i} q^{j m w_i} = 1/(1 - q^{j w_i} u^{v_i})`` is
  the damping sum of one axis, and reads off ``n!`` times the coefficient
  of ``t^n`` after a Cauchy product.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .powerseries import TruncatedSeries, exp_series, series_mul
from .qcore import DomainError, PoleError


def _validate(q, u, w, weights, dampings):
    q, u = Fraction(q), Fraction(u)
    if not 0 < q < 1:
        raise DomainError(f"exact mode needs 0 < q < 1, got {q}")
    if not 0 < u < 1:
        raise DomainError(f"exact mode needs 0 < u < 1, got {u}")
    ints = [w, *weights, *dampings]
    if any(not isinstance(k, int) or isinstance(k, bool) for k in ints):
        raise DomainError("exact mode needs integer w, weights and dampings")
    if w < 0 or any(k <= 0 for k in [*weights, *dampings]):
        raise DomainError("exact mode needs w >= 0 and positive weights, dampings")
    if not weights or len(weights) != len(dampings):
        raise DomainError("weights and dampings must have equal nonzero length")
    return q, u


def _axis_factor(q: Fraction, u: Fraction, j: int, a: int, b: int, axis: int) -> Fraction:
    f = 1 - q ** (j * a) * u ** b
    if f == 0:
        raise PoleError(f"exact pole at l={j}, j={axis}")
    return f


def exact_h_multiple(n: int, q, u, w: int, weights: Sequence[int],
                     dampings: Sequence[int]) -> Fraction:
    """Closed form ``(1-u)^r/(1-q)^n sum_l C(n,l)(-1)^l q^{lw} / prod_j (1 - q^{l w_j} u^{v_j})``."""
    q, u = _validate(q, u, w, weights, dampings)
    total = Fraction(0)
    for l in range(n + 1):
        den = Fraction(1)
        for j, (a, b) in enumerate(zip(weights, dampings)):
            den *= _axis_factor(q, u, l, a, b, j)
        total += math.comb(n, l) * (-1) ** l * q ** (l * w) / den
    return (1 - u) ** len(weights) * total / (1 - q) ** n


def exact_gf_coeff(n: int, q, u, w: int, weights: Sequence[int],
                   dampings: Sequence[int]) -> Fraction:
    """``n!`` times the ``t^n`` coefficient of the generating function, exactly."""
    q, u = _validate(q, u, w, weights, dampings)
    c = 1 / (1 - q)
    g = []
    for j in range(n + 1):
        m = Fraction(1)
        for i, (a, b) in enumerate(zip(weights, dampings)):
            m /= _axis_factor(q, u, j, a, b, i)
        g.append((-c) ** j * q ** (j * w) * m / math.factorial(j))
    series = series_mul(exp_series(c, n), TruncatedSeries(g))
    return (1 - u) ** len(weights) * math.factorial(n) * series[n]


FIXTURES = (
    # (q, u, w, weights, dampings)
    (Fraction(1, 2), Fraction(1, 3), 0, (1,), (1,)),
    (Fraction(2, 5), Fraction(1, 7), 0, (1, 2), (1, 1)),
    (Fraction(2, 5), Fraction(1, 7), 1, (1, 2), (1, 1)),
    (Fraction(1, 3), Fraction(1, 2), 2, (3,), (2,)),
    (Fraction(3, 4), Fraction(2, 3), 1, (1, 1), (1, 2)),
    (Fraction(1, 10), Fraction(4, 5), 3, (2, 5), (3, 1)),
    (Fraction(5, 7), Fraction(1, 4), 1, (1, 2, 3), (1, 1, 1)),
    (Fraction(2, 3), Fraction(3, 5), 0, (2, 1, 1), (1, 2, 3)),
    (Fraction(1, 5), Fraction(1, 9), 4, (1,), (5,)),
    (Fraction(7, 9), Fraction(1, 2), 2, (3, 2), (2, 2)),
)
