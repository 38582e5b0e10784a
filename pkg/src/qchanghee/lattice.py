"""Deterministic r-fold lattice sums with certified box truncation.

Every damped series in the package has the shape

    sum over n in N^r of  exp(sum_i n_i d_i) * g(w + sum_i n_i a_i)

with ``|exp(d_i)| < 1``. Terms are generated in lexicographic (C) order in
fixed-size chunks of the flattened box ``[0, L_1] x ... x [0, L_r]``; each
chunk is reduced by an error-free pairwise TwoSum tree and the chunk totals,
kept in the working dtype, go through the same tree once more. The result
depends only on the inputs and the cutoffs, never on timing or thread
layout.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

import numpy as np

from .qcore import DomainError, ToleranceError

CHUNK = 1 << 16
DEFAULT_MAX_TERMS = 10 ** 8


@dataclass(frozen=True)
class Evaluation:
    """A series value with its certified truncation bound.

    ``terms_used`` is the number of lattice points summed, i.e.
    ``prod(L_i + 1)`` over ``truncation``.
    """

    value: complex
    tail_bound: float
    terms_used: int
    truncation: Tuple[int, ...]


MAX_TERMS_ENV = "CHANGHEE_MAX_TERMS"


def max_terms() -> int:
    """Term budget per lattice sweep; ``CHANGHEE_MAX_TERMS`` overrides."""
    raw = os.environ.get(MAX_TERMS_ENV)
    if raw is None:
        return DEFAULT_MAX_TERMS
    try:
        value = int(float(raw))
    except ValueError as exc:
        raise DomainError(f"CHANGHEE_MAX_TERMS={raw!r} is not an integer") from exc
    if value < 1:
        raise DomainError(f"CHANGHEE_MAX_TERMS={value} must be positive")
    return value


class Accumulator:
    """Running Neumaier sum of complex numbers."""

    __slots__ = ("_s", "_c")

    def __init__(self, value: complex = 0j) -> None:
        self._s = complex(value)
        self._c = 0j

    def add(self, x: complex) -> None:
        s = self._s
        t = s + x
        # componentwise Neumaier branch
        re = (s.real - t.real) + x.real if abs(s.real) >= abs(x.real) else (x.real - t.real) + s.real
        im = (s.imag - t.imag) + x.imag if abs(s.imag) >= abs(x.imag) else (x.imag - t.imag) + s.imag
        self._c += complex(re, im)
        self._s = t

    @property
    def value(self) -> complex:
        return self._s + self._c


def compensated_sum(values: np.ndarray) -> np.ndarray:
    """Sum along the last axis with a pairwise error-free TwoSum tree.

    The rounding error of every addition is carried in a parallel
    correction array, so the result is accurate to about one ulp of the
    total plus ``O(n eps^2)`` of the absolute sum.
    """
    s = np.asarray(values)
    if s.shape[-1] == 0:
        return np.zeros(s.shape[:-1], dtype=s.dtype)
    c = np.zeros_like(s)
    while s.shape[-1] > 1:
        if s.shape[-1] % 2:
            pad = [(0, 0)] * (s.ndim - 1) + [(0, 1)]
            s = np.pad(s, pad)
            c = np.pad(c, pad)
        a, b = s[..., 0::2], s[..., 1::2]
        t = a + b
        bp = t - a
        err = (a - (t - bp)) + (b - bp)
        c = c[..., 0::2] + c[..., 1::2] + err
        s = t
    return s[..., 0] + c[..., 0]


def tail_bound(scale: float, ratios: Sequence[float], cutoffs: Sequence[int]) -> float:
    """Bound on ``scale * sum of prod ratios_i**n_i`` outside the box."""
    total = scale
    log_kept = 0.0
    for rho, L in zip(ratios, cutoffs):
        total /= 1.0 - rho
        log_kept += math.log1p(-(rho ** (L + 1)))
    return total * -math.expm1(log_kept)


def box_cutoffs(scale: float, ratios: Sequence[float], tol: float,
                budget: int | None = None) -> Tuple[Tuple[int, ...], float]:
    """Smallest per-axis cutoffs whose product-geometric tail is at most *tol*.

    Each axis gets an equal share ``tol / r`` of the tail; the returned bound
    is the exact product-geometric tail for the chosen cutoffs.
    """
    if tol <= 0:
        raise DomainError(f"tolerance {tol} must be positive")
    for rho in ratios:
        if not rho < 1:
            raise DomainError(f"damping ratio {rho} >= 1: series does not converge")
    r = len(ratios)
    full = scale
    for rho in ratios:
        full /= 1.0 - rho
    cutoffs = []
    for rho in ratios:
        # axis i tail <= full * rho**(L+1); solve full * rho**(L+1) <= tol / r
        need = tol / (r * full) if full > 0 else 1.0
        if need >= 1.0 or rho == 0.0:
            cutoffs.append(0)
        else:
            cutoffs.append(max(0, math.ceil(math.log(need) / math.log(rho)) - 1))
    cutoffs = tuple(cutoffs)
    bound = tail_bound(scale, ratios, cutoffs)
    budget = max_terms() if budget is None else budget
    terms = math.prod(L + 1 for L in cutoffs)
    if terms > budget:
        raise ToleranceError(
            f"tolerance {tol:g} needs {terms} terms (cutoffs {cutoffs}), "
            f"over the budget of {budget}"
        )
    return cutoffs, bound


TermFn = Callable[[np.ndarray, np.ndarray], np.ndarray]


def work_dtype(real: bool, extended: bool) -> np.dtype:
    """Array dtype for a sweep: float or complex, binary64 or x87 extended."""
    if real:
        return np.dtype(np.longdouble if extended else np.float64)
    return np.dtype(np.clongdouble if extended else np.complex128)


def const(value: complex, dtype: np.dtype):
    """Convert a scalar exactly into *dtype*; real dtypes reject nonzero imaginary parts."""
    if isinstance(value, np.generic) and value.dtype == dtype:
        return value
    if dtype.kind == "f" and isinstance(value, np.floating):
        return dtype.type(value)
    if isinstance(value, np.complexfloating) and value.dtype.itemsize > 16:
        if dtype.kind == "f":
            if value.imag != 0:
                raise DomainError(f"complex constant {value} in a real sweep")
            return dtype.type(value.real)
        return dtype.type(value)
    value = complex(value)
    if dtype.kind == "f":
        if value.imag != 0:
            raise DomainError(f"complex constant {value} in a real sweep")
        return dtype.type(value.real)
    return dtype.type(value)


def all_real(*values) -> bool:
    return all(complex(v).imag == 0 for v in values)


def lattice_sum(shift: complex, steps: Sequence[complex], log_decay: Sequence[complex],
                cutoffs: Sequence[int], term: TermFn, rows: int = 1,
                dtype: np.dtype = np.dtype(np.complex128)) -> List[complex]:
    """Sum ``term(x, d)`` over the box in lexicographic order.

    ``x = shift + sum n_i steps_i`` and ``d = sum n_i log_decay_i`` are
    passed as flat arrays of *dtype*; *term* returns an array of shape
    ``(rows, m)`` (or ``(m,)`` when ``rows == 1``). Chunk totals are kept in
    *dtype* and reduced once more at the end, so an extended sweep keeps its
    extra digits until the final rounding to ``complex``.
    """
    dtype = np.dtype(dtype)
    shape = tuple(int(L) + 1 for L in cutoffs)
    total = math.prod(shape)
    shift = const(shift, dtype)
    steps = [const(a, dtype) for a in steps]
    log_decay = [const(c, dtype) for c in log_decay]
    partials = []
    for start in range(0, total, CHUNK):
        flat = np.arange(start, min(start + CHUNK, total))
        idx = np.unravel_index(flat, shape)
        x = np.full(flat.shape, shift, dtype=dtype)
        d = np.zeros(flat.shape, dtype=dtype)
        for i, n in enumerate(idx):
            n = n.astype(dtype)
            x += n * steps[i]
            d += n * log_decay[i]
        vals = np.asarray(term(x, d)).reshape(rows, -1)
        partials.append(compensated_sum(vals))
    totals = compensated_sum(np.stack(partials, axis=-1))
    return [complex(v) for v in totals]
