"""Truncated formal power series and generating-function coefficients.

A :class:`TruncatedSeries` holds ``a_0..a_N`` of ``sum a_n t^n``. Scalars are
either Python ``complex`` or :class:`fractions.Fraction`; arithmetic never
mixes in floats when every input is rational, so the rational mode is exact.

The classical generating functions (Bernoulli, Frobenius-Euler,
Euler-Barnes) are exponential generating functions, so the numbers are
``n! * a_n``.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from .qcore import DomainError, QParams

Scalar = Union[complex, Fraction]

# n! is exact in binary64 well past this; beyond it float extraction is refused
FLOAT_FACTORIAL_LIMIT = 20


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def _exact_mode(*values) -> bool:
    return all(_is_exact(v) for v in values)


def _scalar(x, exact: bool) -> Scalar:
    return Fraction(x) if exact else complex(x)


class TruncatedSeries:
    """Immutable truncated power series ``a_0 + a_1 t + ... + a_N t^N``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise DomainError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def coeffs(self) -> Tuple[Scalar, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def exact(self) -> bool:
        return all(_is_exact(c) for c in self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, n: int) -> Scalar:
        return self._coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self._coeffs)!r})"

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _same_order(self, other)
        return TruncatedSeries(a + b for a, b in zip(self._coeffs, other._coeffs))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _same_order(self, other)
        return TruncatedSeries(a - b for a, b in zip(self._coeffs, other._coeffs))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-a for a in self._coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries(a * other for a in self._coeffs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_div(self, other)
        return TruncatedSeries(a / other for a in self._coeffs)

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            raise DomainError("negative powers: use series_div")
        result = one(self.order, self.exact)
        base = self
        while k:
            if k & 1:
                result = series_mul(result, base)
            base = series_mul(base, base)
            k >>= 1
        return result

    def egf_values(self) -> List[Scalar]:
        """``n! * a_n`` for every stored degree."""
        if not self.exact and self.order > FLOAT_FACTORIAL_LIMIT:
            raise DomainError(
                f"float extraction limited to n <= {FLOAT_FACTORIAL_LIMIT}; use rational inputs"
            )
        return [math.factorial(n) * a for n, a in enumerate(self._coeffs)]


def _same_order(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise DomainError(f"truncation orders differ: {a.order} vs {b.order}")


def one(order: int, exact: bool = False) -> TruncatedSeries:
    zero = Fraction(0) if exact else 0j
    return TruncatedSeries([zero + 1] + [zero] * order)


def monomial(order: int, degree: int = 1, coeff: Scalar = 1, exact: bool = False) -> TruncatedSeries:
    zero = Fraction(0) if exact else 0j
    coeffs = [zero] * (order + 1)
    if degree <= order:
        coeffs[degree] = zero + coeff
    return TruncatedSeries(coeffs)


def exp_series(alpha, order: int) -> TruncatedSeries:
    """Coefficients of ``exp(alpha t)``: ``alpha^n / n!``."""
    exact = _is_exact(alpha)
    alpha = _scalar(alpha, exact)
    coeffs = []
    term = _scalar(1, exact)
    for n in range(order + 1):
        coeffs.append(term)
        term = term * alpha / (n + 1)
    return TruncatedSeries(coeffs)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    _same_order(a, b)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for n in range(len(ac)):
        s = ac[0] * bc[n]
        for k in range(1, n + 1):
            s += ac[k] * bc[n - k]
        out.append(s)
    return TruncatedSeries(out)


def series_div(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """Quotient ``num / den``; ``den`` must have a nonzero constant term."""
    _same_order(num, den)
    d = den.coeffs
    if d[0] == 0:
        raise DomainError("series_div: denominator has zero constant term")
    out: List[Scalar] = []
    for n, a in enumerate(num.coeffs):
        s = a
        for k in range(n):
            s -= out[k] * d[n - k]
        out.append(s / d[0])
    return TruncatedSeries(out)


# --- classical generating functions --------------------------------------


def gf_frobenius_euler(n_max: int, u, x=0, r: int = 1) -> List[Scalar]:
    """Frobenius-Euler polynomials of order r, ``H_0^{(r)}(u, x) .. H_{n_max}^{(r)}(u, x)``.

    Coefficients of ``((1-u)/(e^t - u))^r e^{xt}`` times ``n!``. Exact when
    ``u`` and ``x`` are rationals. At ``u = -1, x = 0, r = 1`` these are the
    Euler numbers of ``2/(e^t + 1)``.
    """
    exact = _exact_mode(u, x)
    u, x = _scalar(u, exact), _scalar(x, exact)
    if u == 1:
        raise DomainError("gf_frobenius_euler: u = 1 makes the constant term 1 - u vanish")
    if r < 0:
        raise DomainError(f"order r={r} must be nonnegative")
    den = exp_series(_scalar(1, exact), n_max) - monomial(n_max, 0, u, exact)
    base = series_div(one(n_max, exact) * (1 - u), den)
    return (base ** r * exp_series(x, n_max)).egf_values()


def gf_euler_barnes(n_max: int, u, w, a: Sequence, include_shift: bool = True) -> List[Scalar]:
    """Euler-Barnes polynomials ``H_n^{(r)}(w, u | a_1..a_r)``, ``n = 0..n_max``.

    Coefficients of ``(1-u)^r e^{wt} / prod_j (e^{a_j t} - u)`` times ``n!``.
    With ``include_shift=False`` the factor ``e^{wt}`` is dropped, which is
    the literal printed form of the definition; both agree at ``w = 0``.
    """
    a = list(a)
    exact = _exact_mode(u, w, *a)
    u, w = _scalar(u, exact), _scalar(w, exact)
    a = [_scalar(aj, exact) for aj in a]
    if u == 1:
        raise DomainError("gf_euler_barnes: u = 1 is a pole of every factor")
    for j, aj in enumerate(a):
        if aj == 0:
            raise DomainError(f"gf_euler_barnes: a[{j}] = 0")
    acc = exp_series(w, n_max) if include_shift else one(n_max, exact)
    for aj in a:
        den = exp_series(aj, n_max) - monomial(n_max, 0, u, exact)
        acc = series_div(acc * (1 - u), den)
    return acc.egf_values()


def gf_barnes_bernoulli(n_max: int, x, a: Sequence) -> List[Scalar]:
    """Barnes multiple Bernoulli polynomials ``B_n(x, r | a_1..a_r)``.

    ``t^r e^{xt} / prod (e^{a_j t} - 1)``: each factor is rewritten as
    ``a_j t g_j(t)`` with ``g_j(t) = sum a_j^k t^k / (k+1)!`` so the powers of
    ``t`` cancel before any division.
    """
    a = list(a)
    exact = _exact_mode(x, *a)
    x = _scalar(x, exact)
    a = [_scalar(aj, exact) for aj in a]
    acc = exp_series(x, n_max)
    for j, aj in enumerate(a):
        if aj == 0:
            raise DomainError(f"gf_barnes_bernoulli: a[{j}] = 0")
        # g_j(t) = (e^{a t} - 1) / (a t)
        shifted = exp_series(aj, n_max + 1).coeffs[1:]
        g = TruncatedSeries(c / aj for c in shifted)
        acc = series_div(acc, g) / aj
    return acc.egf_values()


# --- Changhee generating function ----------------------------------------


def default_damping_cutoff(p: QParams, eps: float = 1e-15) -> int:
    """``ceil(log(eps) / log |u^{v}|)`` for the slowest damping axis."""
    rho = max(p.damping_ratios())
    if not rho < 1:
        raise DomainError(f"damping ratio {rho} >= 1: series does not converge")
    return max(0, math.ceil(math.log(eps) / math.log(rho)))


def gf_changhee_coeffs(n_max: int, p: QParams, L: int | None = None, tol: float = 1e-14,
                       with_bound: bool = False):
    """``H_{n,q}^{(r)}(u^{-1}, w | w; v)`` for ``n = 0..n_max`` from the generating function.

    Expanding every exponential of
    ``F(t) = (1-u)^r sum u^{sum n_i v_i} exp([w + sum n_i w_i]_q t)`` in ``t``
    gives ``(1-u)^r sum u^{...} [w + sum n_i w_i]_q^n`` as the coefficient of
    ``t^n / n!``. All ``n`` are read off one lattice sweep. With ``L`` unset
    the box is the smallest one certifying *tol* for the largest ``n``.
    """
    from .changhee import bracket_power_bound, changhee_lattice
    from .lattice import box_cutoffs, tail_bound

    if n_max < 0:
        raise DomainError(f"n_max={n_max} must be nonnegative")
    bounds = [bracket_power_bound(p, n) for n in range(n_max + 1)]
    pref = abs(1 - p.u) ** p.rank
    if L is None:
        # the largest n has the slowest effective decay and the largest scale
        cutoffs = tuple(
            max(c) for c in zip(*(box_cutoffs(pref * A, rho, tol)[0] for A, rho in bounds))
        )
    else:
        cutoffs = (int(L),) * p.rank
    bound = max(tail_bound(pref * A, rho, cutoffs) for A, rho in bounds)
    raw = changhee_lattice(p, list(range(n_max + 1)), cutoffs)
    values = [(1 - p.u) ** p.rank * v for v in raw]
    if with_bound:
        return values, bound
    return values
