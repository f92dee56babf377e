"""
Exact Laurent polynomial arithmetic
===================================

Integer-coefficient polynomials in q, negative powers allowed.
"""

from qapery import LaurentPoly, q_int

q = LaurentPoly.monomial(1)
f = 1 + q + q ** 2          # [3]_q
g = LaurentPoly.monomial(-2) - 3 * q

print(f * g)
print((f * g).eval_one(), f.eval_one() * g.eval_one())

# negative q-integers are Laurent polynomials
print(q_int(-3))
print(q_int(3).shift(-3) + q_int(-3))   # q^-3 [3]_q == -[-3]_q

# monic division; remainders are exact integers, never floats
quot, rem = (q ** 7 - 1).divrem_monic(f)
print(quot, "|", rem)

# divisibility of a Laurent polynomial clears the negative powers first
print((LaurentPoly.monomial(-4) * f * g).is_divisible_by(f))

# JSON uses decimal strings so big coefficients survive any consumer
big = (1 + 2 * q) ** 200
print(len(big.to_json()["coeffs"][100]), "digits in the middle coefficient")
