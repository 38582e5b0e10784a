"""Changhee q-Euler numbers and polynomials of Barnes type.

Three routes reach the same numbers ``H_{n,q}^{(r)}(u^{-1}, w | w_1..w_r; v_1..v_r)``:

* the finite binomial closed forms (``h_single_closed``, ``h_poly_closed``,
  ``h_multiple_closed``),
* direct summation of the damped lattice series
  ``(1-u)^r sum u^{sum n_i v_i} [w + sum n_i w_i]_q^n`` (``h_series_oracle``),
* Taylor coefficients of the generating function, see
  :func:`qchanghee.powerseries.gf_changhee_coeffs`.

The closed forms are ``1 / (1 - q)^n`` times an ``n``-th finite difference,
which cancels badly in binary64 (about ``(2/|1-q|)^n`` ulps), so they are
summed with extended working precision and rounded once.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import mpmath
import numpy as np

from .lattice import (
    Accumulator,
    Evaluation,
    all_real,
    box_cutoffs,
    const,
    lattice_sum,
    tail_bound,
    work_dtype,
)
from .qcore import (
    Q_LIMIT_THRESHOLD,
    DomainError,
    PoleError,
    QParams,
    binomial,
    one_minus_exp,
)

POLE_THRESHOLD = 1e-13
# working digits of the closed forms; the alternating sum loses about
# log10(2^n / |1-q|^n) digits, far below this margin for n <= 40
CLOSED_FORM_DPS = 40


class Route(enum.Enum):
    CLOSED_FORM = "closed_form"
    SERIES_ORACLE = "series_oracle"
    GF_COEFF = "gf_coeff"


@dataclass(frozen=True)
class ChangheeNumber:
    n: int
    value: complex
    route: Route
    error_bound: float = 0.0


def _check_rank_one(p: QParams, op: str) -> None:
    if p.rank != 1:
        raise DomainError(f"{op} needs rank 1, got rank {p.rank}")


def _check_order(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise DomainError(f"index n={n!r} must be a nonnegative integer")


def _closed_sum(n: int, q: complex, u: complex, w: complex,
                weights: Sequence[complex], dampings: Sequence[complex],
                dps: int | None = CLOSED_FORM_DPS) -> complex:
    """``(1-u)^r/(1-q)^n sum_l C(n,l) (-1)^l q^{lw} / prod_j (1 - q^{l w_j} u^{v_j})``.

    The float inputs are taken as exact binary values and the sum is formed
    with *dps* decimal digits, then rounded once; ``dps=None`` runs the same
    sum in binary64 with compensated accumulation.
    """
    _check_order(n)
    if abs(1 - q) < Q_LIMIT_THRESHOLD:
        raise DomainError(f"closed form needs |1 - q| >= {Q_LIMIT_THRESHOLD:g}, q={q}")
    if dps is None:
        return _closed_sum_double(n, q, u, w, weights, dampings)
    with mpmath.workdps(dps):
        mq, mu, mw = mpmath.mpc(q), mpmath.mpc(u), mpmath.mpc(w)
        lq, lu = mpmath.log(mq), mpmath.log(mu)
        pairs = [(mpmath.mpc(a), mpmath.mpc(b)) for a, b in zip(weights, dampings)]
        total = mpmath.mpc(0)
        for l in range(n + 1):
            den = mpmath.mpc(1)
            for j, (a, b) in enumerate(pairs):
                factor = 1 - mpmath.exp(l * a * lq + b * lu)
                if abs(factor) < POLE_THRESHOLD:
                    raise PoleError(
                        f"pole at l={l}, j={j}: |1 - q^(l w_j) u^(v_j)| = {float(abs(factor)):.3g}"
                    )
                den *= factor
            total += binomial(n, l) * (-1) ** l * mpmath.exp(l * mw * lq) / den
        return complex((1 - mu) ** len(pairs) / (1 - mq) ** n * total)


def _closed_sum_double(n, q, u, w, weights, dampings) -> complex:
    lq = cmath.log(q)
    lu = cmath.log(u)
    acc = Accumulator()
    for l in range(n + 1):
        num = binomial(n, l) * (-1) ** l * (cmath.exp(l * w * lq) if l else 1.0)
        den = 1.0 + 0j
        for j, (a, b) in enumerate(zip(weights, dampings)):
            factor = one_minus_exp(l * a * lq + b * lu)
            if abs(factor) < POLE_THRESHOLD:
                raise PoleError(
                    f"pole at l={l}, j={j}: |1 - q^(l w_j) u^(v_j)| = {abs(factor):.3g}"
                )
            den *= factor
        acc.add(num / den)
    return (1 - u) ** len(weights) / (1 - q) ** n * acc.value


def h_single_closed(n: int, p: QParams, dps: int | None = CLOSED_FORM_DPS) -> complex:
    """Changhee q-Euler number ``H_{n,q}(u^{-1} | w_1; v_1)`` (shift zero).

    The binomial sum is finite: ``C(n, j)`` vanishes for ``j > n``. The shift
    ``p.w`` is not used.
    """
    _check_rank_one(p, "h_single_closed")
    return _closed_sum(n, p.q, p.u, 0j, p.weights, p.dampings, dps)


def h_poly_closed(n: int, p: QParams, dps: int | None = CLOSED_FORM_DPS) -> complex:
    """Changhee q-Euler polynomial ``H_{n,q}(u^{-1}, w | w_1; v_1)``."""
    _check_rank_one(p, "h_poly_closed")
    return _closed_sum(n, p.q, p.u, p.w, p.weights, p.dampings, dps)


def h_multiple_closed(n: int, p: QParams, dps: int | None = CLOSED_FORM_DPS) -> complex:
    """Barnes-type multiple Changhee q-Euler polynomial, closed form.

    Parameters
    ----------
    n : int
        Index, ``n >= 0``.
    p : QParams
        Parameters of any rank.
    dps : int or None
        Working decimal digits; ``None`` evaluates in binary64.

    Returns
    -------
    complex
        ``(1-u)^r / (1-q)^n * sum_{l=0}^n C(n,l) (-1)^l q^{lw}
        / prod_j (1 - q^{l w_j} u^{v_j})``.

    Raises
    ------
    PoleError
        When some ``|1 - q^{l w_j} u^{v_j}|`` drops below ``1e-13``.
    """
    return _closed_sum(n, p.q, p.u, p.w, p.weights, p.dampings, dps)


# --- lattice series -------------------------------------------------------


def sweep_dtype(p: QParams, *extra, extended: bool = True) -> np.dtype:
    """Real dtype when ``q, u`` are positive reals and every other input is real."""
    real = (p.q.imag == 0 and p.q.real > 0 and p.u.imag == 0 and p.u.real > 0
            and all_real(p.w, *p.weights, *p.dampings, *extra))
    return work_dtype(real, extended)


def brackets(x: np.ndarray, q: complex) -> np.ndarray:
    """Vectorised ``[x]_q`` on the principal branch, in the dtype of *x*."""
    x = np.asarray(x)
    if x.dtype.kind not in "fc":
        x = x.astype(complex)
    if abs(complex(q) - 1) < Q_LIMIT_THRESHOLD:
        return x
    qc = const(q, x.dtype)
    return -np.expm1(x * np.log(qc)) / (1 - qc)


def bracket_power_bound(p: QParams, exponent: complex) -> Tuple[float, Tuple[float, ...]]:
    """Majorant for ``|u^{sum n_i v_i} [w + sum n_i w_i]_q^exponent|``.

    Returns ``(A, rho)`` with the term bounded by ``A * prod rho_i**n_i``.
    With ``g = |q^w|`` and ``gamma_i = |q^{w_i}|`` the bracket modulus lies
    in ``[(1-g)/|1-q|, (1+g) prod max(1, gamma_i)^{n_i} / |1-q|]``, the lower
    end valid only when ``g < 1`` and every ``gamma_i <= 1``. The argument
    of a principal power contributes at most ``exp(pi |Im exponent|)``.
    """
    e = complex(exponent)
    g = math.exp((p.w * cmath.log(p.q)).real)
    gammas = p.weight_growths()
    rhos = p.damping_ratios()
    one_q = abs(1 - p.q)
    phase = math.exp(math.pi * abs(e.imag))
    if e.real >= 0:
        A = ((1 + g) / one_q) ** e.real * phase
        ratios = tuple(rho * max(1.0, gm) ** e.real for rho, gm in zip(rhos, gammas))
    else:
        if g >= 1 or any(gm > 1 for gm in gammas):
            raise DomainError(
                "no certified lower bound on |[x]_q| (need |q^w| < 1 and |q^w_i| <= 1) "
                f"for exponent {e}"
            )
        A = ((1 - g) / one_q) ** e.real * phase
        ratios = rhos
    for i, rho in enumerate(ratios):
        if not rho < 1:
            raise DomainError(f"axis {i}: effective damping ratio {rho:.6g} >= 1, series diverges")
    return A, ratios


def _int_power(b: np.ndarray, k: int, cache: dict) -> np.ndarray:
    # square-and-multiply, memoised per chunk
    if k in cache:
        return cache[k]
    if k == 1:
        out = b
    elif k % 2:
        out = _int_power(b, k - 1, cache) * b
    else:
        half = _int_power(b, k // 2, cache)
        out = half * half
    cache[k] = out
    return out


def power_rows(x: np.ndarray, d: np.ndarray, q: complex, exponents: Sequence[complex]) -> np.ndarray:
    """Rows ``exp(d) * [x]_q ** e`` for every exponent, sharing the bracket table."""
    b = brackets(x, q)
    ed = np.exp(d)
    cache: dict = {}
    logb = None
    rows = []
    for e in exponents:
        e = complex(e)
        if e == 0:
            rows.append(ed)
        elif e.imag == 0 and e.real == int(e.real) and e.real > 0:
            rows.append(ed * _int_power(b, int(e.real), cache))
        else:
            if logb is None:
                if np.any(b == 0):
                    raise DomainError(f"zero q-bracket raised to exponent {e}")
                logb = np.log(b)
            rows.append(np.exp(d + const(e, b.dtype) * logb))
    return np.stack(rows)


def _decay_constants(p: QParams, dtype: np.dtype) -> list:
    lu = np.log(const(p.u, dtype))
    return [const(b, dtype) * lu for b in p.dampings]


def changhee_lattice(p: QParams, exponents: Sequence[complex], cutoffs: Sequence[int],
                     extended: bool = True) -> list:
    """Raw sums ``sum u^{sum n_i v_i} [w + sum n_i w_i]_q^e`` over one box, one per exponent."""
    exps = [complex(e) for e in exponents]
    dtype = sweep_dtype(p, *exps, extended=extended)

    def term(x, d):
        return power_rows(x, d, p.q, exps)

    return lattice_sum(p.w, p.weights, _decay_constants(p, dtype), cutoffs, term,
                       rows=len(exps), dtype=dtype)


def h_series_values(ns: Sequence[int], p: QParams, tol: float = 1e-12,
                    cutoffs: Sequence[int] | None = None,
                    extended: bool = True) -> List[Evaluation]:
    """Direct-series ``H_{n,q}^{(r)}`` for several ``n`` from one lattice sweep."""
    for n in ns:
        _check_order(n)
    pref = abs(1 - p.u) ** p.rank
    bounds = [bracket_power_bound(p, n) for n in ns]
    if cutoffs is None:
        cutoffs = tuple(max(c) for c in zip(*(box_cutoffs(pref * A, rho, tol)[0] for A, rho in bounds)))
    else:
        cutoffs = tuple(int(L) for L in cutoffs)
        if len(cutoffs) != p.rank:
            raise DomainError(f"{len(cutoffs)} cutoffs given for rank {p.rank}")
    raw = changhee_lattice(p, list(ns), cutoffs, extended)
    terms = math.prod(L + 1 for L in cutoffs)
    return [
        Evaluation((1 - p.u) ** p.rank * v, tail_bound(pref * A, rho, cutoffs), terms, cutoffs)
        for v, (A, rho) in zip(raw, bounds)
    ]


def h_series_oracle(n: int, p: QParams, tol: float = 1e-12,
                    cutoffs: Sequence[int] | None = None, extended: bool = True) -> Evaluation:
    """Direct summation of ``(1-u)^r sum u^{sum n_i v_i} [w + sum n_i w_i]_q^n``.

    The box cutoffs are the smallest ones whose certified tail is below
    *tol*; pass *cutoffs* to force a box (the reported bound then follows
    that box). Terms are formed in x87 extended precision unless
    ``extended=False``: with complex ``q, u`` the terms rotate and cancel,
    and binary64 terms then cost several digits.
    """
    return h_series_values([n], p, tol, cutoffs, extended)[0]


def _f_bound(t: complex, p: QParams) -> Tuple[float, Tuple[float, ...]]:
    # Re([x] t) <= Re(t/(1-q)) + |t| |q^x| / |1-q|, |q^x| <= |q^w| when every |q^w_i| <= 1
    rhos = p.damping_ratios()
    if t == 0:
        return 1.0, rhos
    if any(gm > 1 for gm in p.weight_growths()):
        raise DomainError("generating function tail not certified: some |q^w_i| > 1")
    g = math.exp((p.w * cmath.log(p.q)).real)
    growth = (t / (1 - p.q)).real + abs(t) * g / abs(1 - p.q)
    return math.exp(growth), rhos


def f_eval(t: complex, p: QParams, tol: float = 1e-14, extended: bool = True) -> Evaluation:
    """Point value of ``F(t, w) = (1-u)^r sum u^{sum n_i v_i} exp([w + sum n_i w_i]_q t)``."""
    t = complex(t)
    A, ratios = _f_bound(t, p)
    scale = abs(1 - p.u) ** p.rank * A
    cutoffs, bound = box_cutoffs(scale, ratios, tol)
    dtype = sweep_dtype(p, t, extended=extended)
    tc = const(t, dtype)

    def term(x, d):
        return np.exp(d + brackets(x, p.q) * tc)

    (raw,) = lattice_sum(p.w, p.weights, _decay_constants(p, dtype), cutoffs, term, dtype=dtype)
    return Evaluation((1 - p.u) ** p.rank * raw, bound, math.prod(L + 1 for L in cutoffs), cutoffs)


def changhee_number(n: int, p: QParams, route: Route | str = Route.CLOSED_FORM,
                    tol: float = 1e-12) -> ChangheeNumber:
    """Evaluate ``H_{n,q}^{(r)}`` through the chosen route."""
    route = Route(route)
    if route is Route.CLOSED_FORM:
        return ChangheeNumber(n, h_multiple_closed(n, p), route, 0.0)
    if route is Route.SERIES_ORACLE:
        ev = h_series_oracle(n, p, tol)
        return ChangheeNumber(n, ev.value, route, ev.tail_bound)
    from .powerseries import gf_changhee_coeffs

    values, bound = gf_changhee_coeffs(n, p, tol=tol, with_bound=True)
    return ChangheeNumber(n, values[n], route, bound)
