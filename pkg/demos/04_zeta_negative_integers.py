"""
q-zeta values and the negative integers
=======================================

For |u| < 1 the damped series  sum u^{sum v_i n_i} / [w + sum n_i w_i]_q^s
converges for every complex s. At s = -n it reproduces the q-Euler numbers
divided by (1-u)^r.
"""

import numpy as np

from qchanghee import QParams, zeta_multiple, zeta_neg_int, zeta_single, zeta_values

p1 = QParams(0.5, 1 / 3, 1.0)
print("zeta(0) =", zeta_single(0, p1).value.real, " expected 1/(1-u) =", 1 / (1 - 1 / 3))

p = QParams(0.4, 0.25, 1.0, (1.0, 2.0), (1.0, 1.0))
evs = zeta_values([-n for n in range(7)], p, tol=1e-12)
for n, ev in enumerate(evs):
    print(f"s={-n}: series {ev.value.real:.12f}  closed {zeta_neg_int(n, p).real:.12f}")

# the series is entire in s: a coarse grid shows smooth behaviour, no pole at s = 1
grid = np.array([[zeta_single(complex(a, b), p1).value for b in (-1, 0, 1)] for a in (0.5, 1.0, 1.5)])
print(np.round(np.abs(grid), 6))

# every value carries a certified truncation bound
ev = zeta_multiple(2 + 3j, p, tol=1e-10)
print("zeta(2+3i) =", ev.value, "bound", ev.tail_bound, "box", ev.truncation)
