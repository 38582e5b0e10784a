"""
The q -> 1 limit
================

As q -> 1 (all dampings v_i = 1) the q-Euler numbers approach the classical
Euler-Barnes polynomials. Halving 1-q halves the deviation, but only when the
classical value is taken at u^-1; at u itself the deviation does not shrink.
"""

from qchanghee import QParams, gf_euler_barnes, h_multiple_closed

p = QParams(0.5, 0.4, 0.7, (1.2, 0.8), (1.0, 1.0))
n = 3
for label, uc in (("u", p.u), ("u^-1", 1 / p.u)):
    classical = gf_euler_barnes(n, uc, p.w, p.weights)[n]
    devs = [abs(h_multiple_closed(n, p.replace(q=1 - eps)) - classical) for eps in (1e-2, 5e-3, 2.5e-3, 1.25e-3)]
    ratios = [a / b for a, b in zip(devs, devs[1:])]
    print(f"classical at {label:>4}: deviations {['%.2e' % d for d in devs]}  ratios {['%.3f' % r for r in ratios]}")
