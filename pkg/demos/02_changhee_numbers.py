"""
Changhee q-Euler numbers by three routes
========================================

H_{n,q}^{(r)} can be computed from the finite binomial closed form, by
summing the damped lattice series directly, or by reading coefficients off
the generating function. The three routes should agree.
"""

from qchanghee import QParams, changhee_number, gf_changhee_coeffs, h_multiple_closed, h_series_values

# the rank-one worked value: q = 1/2, u = 1/3, w = 0 gives exactly 2/5 at n = 1
p = QParams(0.5, 1 / 3)
print("H_1 =", h_multiple_closed(1, p).real)

# a rank-two example with a shift
p = QParams(q=0.45, u=0.35, w=0.6, weights=(1.0, 1.5), dampings=(1.0, 1.0))
closed = [h_multiple_closed(n, p) for n in range(7)]
series = h_series_values(range(7), p, tol=1e-12)
coeffs = gf_changhee_coeffs(6, p)

print(f"{'n':>2} {'closed form':>22} {'|series-closed|':>16} {'bound':>9} {'|gf-closed|':>12}")
for n in range(7):
    print(f"{n:>2} {closed[n].real:22.15f} {abs(series[n].value - closed[n]):16.2e} "
          f"{series[n].tail_bound:9.1e} {abs(coeffs[n] - closed[n]):12.2e}")
print("lattice box used by the series:", series[0].truncation, "terms:", series[0].terms_used)

# complex parameters work the same way
pc = QParams(q=0.5 + 0.3j, u=-0.4 + 0.2j, w=1.1, weights=(0.8, 2.0), dampings=(1.3, 0.7))
for route in ("closed_form", "series_oracle", "gf_coeff"):
    h = changhee_number(5, pc, route)
    print(f"{route:>13}: {h.value:.12f}  (bound {h.error_bound:.1e})")
