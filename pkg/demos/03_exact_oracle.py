"""
Exact rational arithmetic
=========================

With rational q, u and integer weights every quantity in the closed form is
rational. Two independent exact derivations must then agree to the last
digit, and the floating-point evaluator can be measured against them.
"""

from fractions import Fraction

from qchanghee import QParams, exact_gf_coeff, exact_h_multiple, h_multiple_closed

q, u = Fraction(2, 5), Fraction(1, 7)
weights, dampings = (1, 2), (1, 1)

for n in range(7):
    a = exact_h_multiple(n, q, u, 0, weights, dampings)
    b = exact_gf_coeff(n, q, u, 0, weights, dampings)
    print(f"n={n}: {a}  (routes equal: {a == b})")

# float drift: compare at the binary64 values the float code actually sees
qf, uf = Fraction(float(q)), Fraction(float(u))
p = QParams(float(q), float(u), 0, weights, dampings)
for n in (4, 8, 12):
    ref = exact_h_multiple(n, qf, uf, 0, weights, dampings)
    rel = abs(Fraction(h_multiple_closed(n, p).real) - ref) / abs(ref)
    print(f"n={n}: relative float error {float(rel):.2e}")
