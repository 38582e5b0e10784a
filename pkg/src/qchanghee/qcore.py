"""Foundational q-arithmetic: q-brackets, principal-branch powers, binomials.

All complex powers use the principal logarithm, ``q**x = exp(x * Log q)``
with ``Im(Log q)`` in ``(-pi, pi]``. Every evaluator in the package builds
its powers through :func:`q_power` (or its vectorised twin in
:mod:`qchanghee.lattice`) so that closed forms and series agree on the
branch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Tuple, Union

Number = Union[int, float, complex]

# |q - 1| below this switches [x]_q to its q -> 1 limit x
Q_LIMIT_THRESHOLD = 1e-12


class ChangheeError(Exception):
    """Base class for all errors raised by qchanghee."""


class DomainError(ChangheeError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class PoleError(DomainError):
    """A closed form hit (or came within 1e-13 of) a denominator zero."""


class ToleranceError(ChangheeError, ArithmeticError):
    """A requested tolerance cannot be certified within the term budget."""


def as_complex(x: Number, name: str = "value") -> complex:
    """Coerce *x* to a finite ``complex`` or raise :class:`DomainError`."""
    if isinstance(x, Fraction):
        x = float(x)
    try:
        z = complex(x)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name}={x!r} is not a number") from exc
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"{name}={x!r} is not finite")
    return z


def q_power(x: Number, q: Number) -> complex:
    """Principal-branch power ``exp(x * Log q)``.

    Raises
    ------
    DomainError
        If ``q == 0`` (the logarithm is undefined).
    """
    x = complex(x)
    q = complex(q)
    if q == 0:
        raise DomainError("q_power: base q=0 has no logarithm")
    if x == 0:
        return 1 + 0j
    return cmath.exp(x * cmath.log(q))


def q_bracket(x: Number, q: Number) -> complex:
    """The q-number ``[x]_q = (1 - q**x) / (1 - q)``.

    Passing another base ``z`` as *q* gives the two-parameter bracket
    ``[x:z] = (1 - z**x) / (1 - z)``. When ``|q - 1| < 1e-12`` the analytic
    limit ``x`` is returned instead of the cancelling quotient.

    >>> q_bracket(2, 0.5)
    (1.5+0j)
    """
    x = complex(x)
    q = complex(q)
    if abs(q - 1) < Q_LIMIT_THRESHOLD:
        return x
    if q == 0:
        if x == 0:
            return 0j
        if x.real > 0:
            return 1 + 0j
        raise DomainError(f"q_bracket: q=0 with Re(x)={x.real} <= 0")
    return (1 - q_power(x, q)) / (1 - q)


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient, ``0`` when ``k > n``."""
    if n < 0 or k < 0:
        raise DomainError(f"binomial({n}, {k}): arguments must be nonnegative")
    return math.comb(n, k)


def one_minus_exp(z: complex) -> complex:
    """``1 - exp(z)`` without cancellation for small ``|z|``."""
    x, y = z.real, z.imag
    # exp(x+iy) - 1 = expm1(x) cos y - 2 sin^2(y/2) + i e^x sin y
    re = math.expm1(x) * math.cos(y) - 2.0 * math.sin(0.5 * y) ** 2
    im = math.exp(x) * math.sin(y)
    return complex(-re, -im)


@dataclass(frozen=True)
class QParams:
    """Validated parameter bundle shared by the q-Euler and q-zeta evaluators.

    Parameters
    ----------
    q : complex
        Base, ``0 < |q| < 1``.
    u : complex
        Damping base, ``0 < |u| < 1``.
    w : complex
        Shift, ``Re(w) >= 0``. The value ``w = 0`` is admitted because the
        q-Euler *numbers* live there; the zeta evaluators reject it.
    weights, dampings : sequence of complex
        ``w_1..w_r`` and ``v_1..v_r``, all with positive real part and of
        equal length ``r >= 1``.
    """

    q: complex
    u: complex
    w: complex = 0j
    weights: Tuple[complex, ...] = (1 + 0j,)
    dampings: Tuple[complex, ...] = (1 + 0j,)
    rank: int = field(init=False)

    def __post_init__(self) -> None:
        q = as_complex(self.q, "q")
        u = as_complex(self.u, "u")
        w = as_complex(self.w, "w")
        weights = tuple(as_complex(a, f"weights[{i}]") for i, a in enumerate(_seq(self.weights)))
        dampings = tuple(as_complex(b, f"dampings[{i}]") for i, b in enumerate(_seq(self.dampings)))
        if not 0 < abs(q) < 1:
            raise DomainError(f"q={q} must satisfy 0 < |q| < 1")
        if not 0 < abs(u) < 1:
            raise DomainError(f"u={u} must satisfy 0 < |u| < 1")
        if w.real < 0:
            raise DomainError(f"w={w} must have Re(w) >= 0")
        if len(weights) == 0 or len(weights) != len(dampings):
            raise DomainError(
                f"weights (len {len(weights)}) and dampings (len {len(dampings)}) "
                "must have equal nonzero length"
            )
        for i, a in enumerate(weights):
            if a.real <= 0:
                raise DomainError(f"weights[{i}]={a} must have Re > 0")
        for i, b in enumerate(dampings):
            if b.real <= 0:
                raise DomainError(f"dampings[{i}]={b} must have Re > 0")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "dampings", dampings)
        object.__setattr__(self, "rank", len(weights))

    @classmethod
    def single(cls, q: Number, u: Number, w: Number = 0, weight: Number = 1,
               damping: Number = 1) -> "QParams":
        """Rank-one shorthand."""
        return cls(q, u, w, (weight,), (damping,))

    def replace(self, **changes) -> "QParams":
        kw = dict(q=self.q, u=self.u, w=self.w, weights=self.weights, dampings=self.dampings)
        kw.update(changes)
        return QParams(**kw)

    def damping_ratios(self) -> Tuple[float, ...]:
        """``|u**v_i|`` for each axis; every one must be below 1 for convergence."""
        lu = cmath.log(self.u)
        return tuple(math.exp((b * lu).real) for b in self.dampings)

    def weight_growths(self) -> Tuple[float, ...]:
        """``|q**w_i|`` for each axis."""
        lq = cmath.log(self.q)
        return tuple(math.exp((a * lq).real) for a in self.weights)

    def as_dict(self) -> dict:
        return {
            "q": _cplx_json(self.q),
            "u": _cplx_json(self.u),
            "w": _cplx_json(self.w),
            "weights": [_cplx_json(a) for a in self.weights],
            "dampings": [_cplx_json(b) for b in self.dampings],
        }


def _seq(x) -> Sequence:
    if isinstance(x, (int, float, complex, Fraction)):
        return (x,)
    return tuple(x)


def _cplx_json(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}
