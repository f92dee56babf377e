"""
Gaussian binomials and cyclotomic polynomials
=============================================

q-binomials for any integer upper index, cyclotomic factors of [n]_q,
and the q-Lucas congruence.
"""

from qapery import binom, cyclotomic, q_binom, q_int
from qapery.qcomb import divisors, q_lucas_check

print(q_binom(4, 2))
print(q_binom(-1, 2))       # upper index below zero gives a Laurent polynomial
print(q_binom(10, 4).eval_one(), binom(10, 4))

for d in (1, 2, 3, 4, 6, 12):
    print(d, cyclotomic(d))

# [12]_q is the product of Phi_d over the divisors d > 1
prod = 1
for d in divisors(12)[1:]:
    prod = cyclotomic(d) * prod
print(prod == q_int(12))

# reducing [7 choose 4]_q modulo Phi_3 leaves binom(2, 1) * [1 choose 1]_q = 2
_, rem = (q_binom(7, 4) - 2).divrem_monic(cyclotomic(3))
print(rem.is_zero(), q_lucas_check(2, 1, 1, 1, 3))
