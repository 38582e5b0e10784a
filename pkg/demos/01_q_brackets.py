"""
q-brackets and principal powers
===============================

The q-analogue of a number, [x]_q = (1 - q^x)/(1 - q), is the building block
of everything else in the package. Complex powers use the principal branch.
"""

from qchanghee import q_bracket, q_power

# integers: [n]_q = 1 + q + ... + q^(n-1)
for n in range(5):
    print(f"[{n}]_0.5 = {q_bracket(n, 0.5).real:.6f}")

# as q -> 1 the bracket tends to x; within 1e-12 of 1 the limit is returned as is
for q in (0.9, 0.99, 0.999, 1.0):
    print(f"q={q}: [3.7]_q = {q_bracket(3.7, q).real:.6f}")

# complex base: the defining identity [x](1-q) + q^x = 1 holds on the principal branch
q, x = 0.6 * (0.8 + 0.6j), 1.5 - 0.4j
print("identity residual:", abs(q_bracket(x, q) * (1 - q) + q_power(x, q) - 1))

# q-addition law [x+y] = [x] + q^x [y]
y = 0.7 + 0.2j
lhs = q_bracket(x + y, q)
rhs = q_bracket(x, q) + q_power(x, q) * q_bracket(y, q)
print("addition law residual:", abs(lhs - rhs))
