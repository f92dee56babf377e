"""
Apéry, Delannoy and q-Apéry polynomials
=======================================
"""

from qapery import apery_number, apery_poly, delannoy_poly, q_apery_poly
from qapery.apery import eta_product_coeffs

print([apery_number(n) for n in range(8)])
print(apery_poly(3, 2))
print([delannoy_poly(n)(1) for n in range(8)])

# exponent alpha = 3
print(apery_poly(2, 3).coeffs)

# the q-version collapses to the integer one at q = 1
A = q_apery_poly(3, 2)
for j, c in enumerate(A.coeffs):
    print(j, c)
print(A.eval_one() == apery_poly(3, 2))

# coefficients of q prod (1 - q^{2n})^4 (1 - q^{4n})^4
eta = eta_product_coeffs(40)
print([eta[n] for n in range(1, 41, 2)])
