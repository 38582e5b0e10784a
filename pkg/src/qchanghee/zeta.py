"""Single and multiple Changhee q-zeta functions and the Euler-Barnes zeta.

For ``|u| < 1`` the damping ``u^{sum v_i n_i}`` makes

    zeta_q^{(r)}(s) = sum_{n in N^r} u^{sum v_i n_i} / [w + sum n_i w_i]_q^s

absolutely convergent for every complex ``s``, so the series itself is the
evaluator everywhere; no contour deformation is needed. Values at ``s = -n``
are also available in closed form through the q-Euler numbers
(:func:`zeta_neg_int`).
"""

from __future__ import annotations

import math
from typing import List, Sequence

import numpy as np

from .changhee import bracket_power_bound, changhee_lattice, h_multiple_closed
from .lattice import Evaluation, all_real, box_cutoffs, const, lattice_sum, tail_bound, work_dtype
from .qcore import DomainError, QParams, as_complex


def _check_shift(p: QParams) -> None:
    if p.w.real <= 0:
        raise DomainError(f"zeta needs Re(w) > 0, got w={p.w} (the n=0 bracket would vanish)")


def zeta_values(s_values: Sequence[complex], p: QParams, tol: float = 1e-12,
                cutoffs: Sequence[int] | None = None,
                extended: bool = False) -> List[Evaluation]:
    """Multiple Changhee q-zeta at several ``s`` from one lattice sweep.

    The box is the union of the boxes each ``s`` needs on its own, so every
    returned tail bound is at most *tol*. ``extended=True`` forms the terms
    in x87 extended precision.
    """
    _check_shift(p)
    s_values = [as_complex(s, "s") for s in s_values]
    bounds = [bracket_power_bound(p, -s) for s in s_values]
    if cutoffs is None:
        cutoffs = tuple(max(c) for c in zip(*(box_cutoffs(A, rho, tol)[0] for A, rho in bounds)))
    else:
        cutoffs = tuple(int(L) for L in cutoffs)
        if len(cutoffs) != p.rank:
            raise DomainError(f"{len(cutoffs)} cutoffs given for rank {p.rank}")
    raw = changhee_lattice(p, [-s for s in s_values], cutoffs, extended)
    terms = math.prod(L + 1 for L in cutoffs)
    return [
        Evaluation(v, tail_bound(A, rho, cutoffs), terms, cutoffs)
        for v, (A, rho) in zip(raw, bounds)
    ]


def zeta_multiple(s: complex, p: QParams, tol: float = 1e-12,
                  cutoffs: Sequence[int] | None = None) -> Evaluation:
    """``zeta_q^{(r)}(s, u, w | w_1..w_r; v_1..v_r)`` by certified truncation.

    Parameters
    ----------
    s : complex
        Any complex argument.
    p : QParams
        Parameters with ``Re(w) > 0``.
    tol : float
        Absolute bound on the discarded tail.
    cutoffs : sequence of int, optional
        Force the per-axis box ``[0, L_i]`` instead of choosing it from *tol*.

    Returns
    -------
    Evaluation
    """
    return zeta_values([s], p, tol, cutoffs)[0]


def zeta_single(s: complex, p: QParams, tol: float = 1e-12,
                cutoffs: Sequence[int] | None = None) -> Evaluation:
    """``zeta_q(s, w, u | w_1; v_1) = sum_{n>=0} u^{v_1 n} / [w + w_1 n]_q^s``."""
    if p.rank != 1:
        raise DomainError(f"zeta_single needs rank 1, got rank {p.rank}")
    return zeta_multiple(s, p, tol, cutoffs)


def zeta_neg_int(n: int, p: QParams) -> complex:
    """Closed-form value at ``s = -n``: ``H_{n,q}^{(r)}(u^{-1}, w | ...) / (1-u)^r``."""
    return h_multiple_closed(n, p) / (1 - p.u) ** p.rank


def _euler_barnes_bound(s: complex, w: complex, a: Sequence[complex], u: complex):
    """Majorant ``(A, rho)`` for ``|u^{-sum m_i} (w + sum m_i a_i)^{-s}|``."""
    rho0 = 1.0 / abs(u)
    sig = -s.real
    phase = math.exp(0.5 * math.pi * abs(s.imag))  # |arg x| < pi/2 since Re x > 0
    if sig <= 0:
        # |x| >= Re(x) >= Re(w)
        return w.real ** sig * phase, (rho0,) * len(a)
    # |x|^sig <= |w|^sig prod (1 + m_i |a_i|/|w|)^sig and
    # (1 + y)^sig <= C e^{k y}, C = (sig/k)^sig e^{k - sig} for sig > k
    A = abs(w) ** sig * phase
    ratios = []
    half_gap = 0.5 * -math.log(rho0)
    for aj in a:
        k = half_gap * abs(w) / abs(aj)
        if sig > k:
            A *= (sig / k) ** sig * math.exp(k - sig)
        ratios.append(math.sqrt(rho0))
    return A, tuple(ratios)


def euler_barnes_zeta(s: complex, w: complex, u: complex, a: Sequence[complex],
                      tol: float = 1e-12, cutoffs: Sequence[int] | None = None) -> Evaluation:
    """``zeta_r(s, w, u | a) = sum_m u^{-(m_1+..+m_r)} / (w + sum m_i a_i)^s`` for ``|u| > 1``."""
    s = as_complex(s, "s")
    w = as_complex(w, "w")
    u = as_complex(u, "u")
    a = [as_complex(aj, f"a[{j}]") for j, aj in enumerate(a)]
    if not abs(u) > 1:
        raise DomainError(f"euler_barnes_zeta needs |u| > 1, got u={u}")
    if w.real <= 0:
        raise DomainError(f"euler_barnes_zeta needs Re(w) > 0, got w={w}")
    if not a:
        raise DomainError("euler_barnes_zeta needs at least one parameter a_i")
    for j, aj in enumerate(a):
        if aj.real <= 0:
            raise DomainError(f"a[{j}]={aj} must have Re > 0")
    A, ratios = _euler_barnes_bound(s, w, a, u)
    if cutoffs is None:
        cutoffs, bound = box_cutoffs(A, ratios, tol)
    else:
        cutoffs = tuple(int(L) for L in cutoffs)
        bound = tail_bound(A, ratios, cutoffs)
    dtype = work_dtype(u.real > 0 and all_real(s, w, u, *a), False)
    lu = np.log(const(u, dtype))
    sc = const(s, dtype)

    def term(x, d):
        if s == 0:
            return np.exp(d)
        return np.exp(d - sc * np.log(x))

    (value,) = lattice_sum(w, a, [-lu] * len(a), cutoffs, term, dtype=dtype)
    return Evaluation(value, bound, math.prod(L + 1 for L in cutoffs), cutoffs)
