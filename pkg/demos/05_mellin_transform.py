"""
The Mellin transform of the generating function
===============================================

For Re(s) > 1 the zeta series equals
    1/((1-u)^r Gamma(s)) * int_0^inf F(-t) t^(s-1) dt
where F is the generating function of the q-Euler numbers. Adaptive
Gauss-Kronrod quadrature gives an independent check.
"""

from qchanghee import QParams, f_eval, gamma_fn, mellin_zeta_quadrature, zeta_multiple

print("Gamma(5) =", gamma_fn(5).real, " Gamma(1/2)^2 =", (gamma_fn(0.5) ** 2).real)

p = QParams(0.5, 1 / 3, 1.0, (1.0, 2.0), (1.0, 1.0))
print("F(0) =", f_eval(0, p).value.real, " F(-2) =", f_eval(-2, p).value.real)

for s in (2, 3, 3.5, 2 + 1j):
    quad = mellin_zeta_quadrature(s, p, tol=1e-9)
    series = zeta_multiple(s, p).value
    print(f"s={s}: quadrature {quad.value:.10f} ({quad.panels} panels, est {quad.abs_error_estimate:.1e})"
          f"  |diff| {abs(quad.value - series):.1e}")
