"""
Classical anchors
=================

Bernoulli, Euler and Frobenius-Euler numbers, the Euler-Barnes polynomials
and the Euler-Barnes zeta function (damping |u| > 1). Rational inputs give
exact rational outputs.
"""

from fractions import Fraction

from qchanghee import euler_barnes_zeta, gf_barnes_bernoulli, gf_euler_barnes, gf_frobenius_euler

print("Bernoulli:", [str(b) for b in gf_barnes_bernoulli(8, 0, [1])])
print("Euler (u=-1):", [str(e) for e in gf_frobenius_euler(8, -1)])
print("Frobenius-Euler at u=1/3, x=1/2:", [str(h) for h in gf_frobenius_euler(4, Fraction(1, 3), Fraction(1, 2))])
print("Barnes-Bernoulli r=2, a=(1,2):", [str(b) for b in gf_barnes_bernoulli(4, 0, [1, 2])])
print("Euler-Barnes r=2, u=-1, w=1/2:", [str(h) for h in gf_euler_barnes(4, -1, Fraction(1, 2), [1, 2])])

# sum 2^-m (1+m) = 4
print("Euler-Barnes zeta(-1; w=1, u=2) =", euler_barnes_zeta(-1, 1, 2, [1]).value.real)
print("Euler-Barnes zeta(2; w=1, u=3, a=(1,1)) =", euler_barnes_zeta(2, 1, 3, [1, 1]).value.real)
