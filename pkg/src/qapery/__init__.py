"""Exact verification of divisibility properties of (q-)Apéry polynomial sums."""

from .apery import (apery_number, apery_poly, b_poly, delannoy_poly, eta_product_coeffs,
                    q_apery_poly, q_apery_poly_alt)
from .exact_arith import IntXPoly, LaurentPoly, XPoly
from .qcomb import (CyclotomicCache, binom, cyclotomic, cyclotomic_lemma_check, euler_phi,
                    q_binom, q_int, q_int_factorization_check, q_lucas_check)
from .verify import Status, TheoremId, VerificationReport

__version__ = "0.1.0"
