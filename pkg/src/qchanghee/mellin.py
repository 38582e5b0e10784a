"""Mellin-transform check of the q-zeta series by adaptive quadrature.

For ``Re(s) > 1``

    zeta_q^{(r)}(s) = 1 / ((1-u)^r Gamma(s)) * int_0^inf F(-t, w) t^{s-1} dt

where ``F`` is the Changhee generating function. The integrand is computed
from the same lattice box for every node, so one quadrature costs one
bracket table plus a dense ``nodes x lattice`` exponential.
"""

from __future__ import annotations

import cmath
import heapq
import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .changhee import brackets
from .lattice import Accumulator, box_cutoffs, compensated_sum
from .qcore import DomainError, QParams, ToleranceError, as_complex

# Lanczos approximation, g = 7, n = 9
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_fn(s: complex) -> complex:
    """Gamma function for complex ``s`` (Lanczos g=7; reflection for Re(s) < 1/2)."""
    s = as_complex(s, "s")
    if s.imag == 0 and s.real <= 0 and s.real == math.floor(s.real):
        raise DomainError(f"gamma_fn: pole at s={s.real:g}")
    if s.real < 0.5:
        return math.pi / (cmath.sin(math.pi * s) * gamma_fn(1 - s))
    z = s - 1
    x = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        x += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * cmath.exp((z + 0.5) * cmath.log(t) - t) * x


# Gauss-Kronrod 7/15 nodes on [-1, 1]; Gauss nodes are the odd-indexed ones
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_W = np.concatenate([_WGK[:-1], _WGK[::-1]])
GAUSS_W = np.zeros(15)
GAUSS_W[[1, 3, 5, 7, 9, 11, 13]] = np.concatenate([_WG[:-1], _WG[::-1]])


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    abs_error_estimate: float
    panels: int


def gauss_kronrod(f, a: float, b: float, tol: float, max_panels: int = 4000,
                  initial: int = 1) -> QuadratureResult:
    """Adaptive G7/K15 integration of a vectorised *f* over ``[a, b]``.

    The panel with the largest ``|K15 - G7|`` is bisected until the summed
    estimate drops below *tol*. Panels are totalled in left-endpoint order.
    """
    def panel(lo, hi):
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        vals = np.asarray(f(mid + half * NODES), dtype=complex)
        k = half * compensated_sum(vals * KRONROD_W)
        g = half * compensated_sum(vals * GAUSS_W)
        return complex(k), abs(complex(k - g))

    edges = np.linspace(a, b, initial + 1)
    heap: List[Tuple[float, float, float, complex]] = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        k, e = panel(lo, hi)
        heapq.heappush(heap, (-e, lo, hi, k))
    total_err = sum(-h[0] for h in heap)
    while total_err > tol:
        if len(heap) >= max_panels:
            raise ToleranceError(
                f"quadrature error {total_err:.3g} above {tol:.3g} after {len(heap)} panels"
            )
        neg_e, lo, hi, _ = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        for sub in ((lo, mid), (mid, hi)):
            k, e = panel(*sub)
            heapq.heappush(heap, (-e, sub[0], sub[1], k))
        total_err = sum(-h[0] for h in heap)
    acc = Accumulator()
    for _, _, _, k in sorted(heap, key=lambda h: h[1]):
        acc.add(k)
    return QuadratureResult(acc.value, total_err, len(heap))


def _decay_constant(p: QParams) -> float:
    """Lower bound ``c`` on ``Re([x]_q)`` over the lattice, so ``|F(-t)| <= M e^{-ct}``."""
    if any(gm > 1 for gm in p.weight_growths()):
        raise DomainError("decay constant undefined: some |q^w_i| > 1")
    g = math.exp((p.w * cmath.log(p.q)).real)
    c = (1 / (1 - p.q)).real - g / abs(1 - p.q)
    if not c > 0:
        raise DomainError(f"decay constant {c:.3g} <= 0: F(-t) is not certified to decay")
    return c


def _upper_gamma_tail(sigma: float, c: float, T: float) -> float:
    """Bound on ``int_T^inf t^{sigma-1} e^{-ct} dt`` for ``T > (sigma-1)/c``."""
    return T ** (sigma - 1) * math.exp(-c * T) / (c - max(0.0, sigma - 1) / T)


def mellin_zeta_quadrature(s: complex, p: QParams, tol: float = 1e-9) -> QuadratureResult:
    """``1/((1-u)^r Gamma(s)) int_0^inf F(-t, w) t^{s-1} dt`` by quadrature.

    Parameters
    ----------
    s : complex
        ``Re(s) > 1``.
    p : QParams
        Parameters with ``Re(w) > 0`` and a positive decay constant.
    tol : float
        Target absolute error of the returned value, split between the
        lattice truncation of ``F``, the cut at ``T`` and the panels.
    """
    s = as_complex(s, "s")
    if not s.real > 1:
        raise DomainError(f"mellin quadrature needs Re(s) > 1, got s={s}")
    if p.w.real <= 0:
        raise DomainError(f"mellin quadrature needs Re(w) > 0, got w={p.w}")
    c = _decay_constant(p)
    sigma = s.real
    norm = abs((1 - p.u) ** p.rank * gamma_fn(s))
    budget = tol * norm
    # integral of the dropped lattice weights: <= w_tail * Gamma(sigma) / c^sigma
    weight_tol = budget / 4 / (math.gamma(sigma) / c ** sigma)
    cutoffs, weight_tail = box_cutoffs(abs(1 - p.u) ** p.rank, p.damping_ratios(), weight_tol)
    shape = tuple(L + 1 for L in cutoffs)
    idx = np.unravel_index(np.arange(math.prod(shape)), shape)
    x = np.full(idx[0].shape, p.w, dtype=complex)
    d = np.zeros(idx[0].shape, dtype=complex)
    lu = cmath.log(p.u)
    for i, n in enumerate(idx):
        x += n * p.weights[i]
        d += n * (p.dampings[i] * lu)
    weights = (1 - p.u) ** p.rank * np.exp(d)
    b = brackets(x, p.q)

    mass = abs(1 - p.u) ** p.rank
    for rho in p.damping_ratios():
        mass /= 1 - rho
    T = max(1.0, 2 * max(0.0, sigma - 1) / c)
    while mass * _upper_gamma_tail(sigma, c, T) > budget / 4:
        T *= 1.5

    def integrand(t):
        t = np.asarray(t, dtype=float)
        vals = compensated_sum(weights * np.exp(-np.outer(t, b)))
        return vals * np.exp((s - 1) * np.log(t))

    head = gauss_kronrod(integrand, 0.0, 1.0, budget / 4)
    body = gauss_kronrod(integrand, 1.0, T, budget / 4, initial=max(1, int(T // 4)))
    total = (head.value + body.value) / ((1 - p.u) ** p.rank * gamma_fn(s))
    certified = weight_tail * math.gamma(sigma) / c ** sigma + mass * _upper_gamma_tail(sigma, c, T)
    err = (head.abs_error_estimate + body.abs_error_estimate + certified) / norm
    return QuadratureResult(total, err, head.panels + body.panels)
