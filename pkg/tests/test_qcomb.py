import math
from functools import lru_cache

import pytest
import sympy

from qapery.exact_arith import LaurentPoly
from qapery.qcomb import (CyclotomicCache, binom, cyclotomic, cyclotomic_lemma_check, divisors,
                          euler_phi, q_binom, q_int, q_int_factorization_check, q_lucas_check)

L = LaurentPoly.from_dict


@lru_cache(maxsize=None)
def pascal_qbinom(n: int, k: int) -> LaurentPoly:
    """Oracle: [n+1, k] = q^k [n, k] + [n, k-1], for n >= 0."""
    if k < 0 or k > n:
        return LaurentPoly()
    if k == 0 or k == n:
        return LaurentPoly.const(1)
    return pascal_qbinom(n - 1, k).shift(k) + pascal_qbinom(n - 1, k - 1)


def sympy_cyclotomic(d: int) -> LaurentPoly:
    x = sympy.Symbol("x")
    coeffs = sympy.Poly(sympy.cyclotomic_poly(d, x), x).all_coeffs()[::-1]
    return LaurentPoly(0, [int(c) for c in coeffs])


# -- q_int --------------------------------------------------------------------

def test_q_int_examples():
    assert q_int(3) == LaurentPoly(0, [1, 1, 1])
    assert q_int(0).is_zero()
    assert q_int(1) == 1
    assert q_int(-2) == L({-2: -1, -1: -1})


@pytest.mark.parametrize("n", range(-8, 9))
def test_q_int_definition(n):
    # (1 - q) [n]_q == 1 - q^n
    assert q_int(n) * LaurentPoly(0, [1, -1]) == LaurentPoly.const(1) - LaurentPoly.monomial(n)


# -- q_binom ------------------------------------------------------------------

def test_q_binom_examples():
    assert q_binom(4, 2) == LaurentPoly(0, [1, 1, 2, 1, 1])
    assert q_binom(4, 2) == pascal_qbinom(4, 2)
    assert q_binom(7, 0) == 1 and q_binom(-3, 0) == 1
    assert q_binom(3, -1).is_zero()
    assert q_binom(-1, 2) == L({-3: 1})


def test_q_binom_matches_pascal_oracle():
    for n in range(0, 22):
        for k in range(0, n + 3):
            assert q_binom(n, k) == pascal_qbinom(n, k), (n, k)


def test_pascal_recurrence():
    for n in range(0, 21):
        for k in range(0, n + 1):
            assert q_binom(n + 1, k) == q_binom(n, k).shift(k) + q_binom(n, k - 1)


def test_specialization_to_binomials():
    for n in range(-10, 21):
        for k in range(0, 11):
            assert q_binom(n, k).eval_one() == binom(n, k), (n, k)


def test_binom_negative_upper():
    for a in range(0, 8):
        for s in range(0, 8):
            assert binom(-a - 1, s) == (-1) ** s * math.comb(a + s, s)
    assert binom(5, 7) == 0 and binom(5, -1) == 0
    for n in range(0, 15):
        for k in range(0, 15):
            assert binom(n, k) == math.comb(n, k)


def test_reflection_identity():
    for k in range(0, 13):
        for j in range(0, k + 1):
            rhs = q_binom(-k - 1, j).shift(j * k + j * (j + 1) // 2) * (-1) ** j
            assert q_binom(k + j, j) == rhs, (k, j)


def test_nonnegative_qbinom_polynomial_nonneg_coeffs():
    for n in range(0, 16):
        for k in range(0, n + 1):
            f = q_binom(n, k)
            assert f.offset == 0
            assert all(c >= 0 for c in f.coeffs)


# -- cyclotomic ---------------------------------------------------------------

def test_cyclotomic_examples():
    assert cyclotomic(1) == LaurentPoly(0, [-1, 1])
    assert cyclotomic(2) == LaurentPoly(0, [1, 1])
    assert cyclotomic(6) == LaurentPoly(0, [1, -1, 1])
    assert cyclotomic(12) == LaurentPoly(0, [1, 0, -1, 0, 1])


@pytest.mark.parametrize("d", list(range(1, 61)) + [105, 210])
def test_cyclotomic_matches_sympy(d):
    assert cyclotomic(d) == sympy_cyclotomic(d)


def test_cache_invariants_and_degree():
    cache = CyclotomicCache()
    for d in range(1, 51):
        phi = cyclotomic(d, cache)
        assert phi.leading == 1
        assert phi.coeff(0) in (-1, 1)
        assert phi.degree == euler_phi(d)
    assert len(cache) == 50 and 7 in cache


def test_cyclotomic_product_is_q_n_minus_one():
    for n in range(1, 201):
        prod = LaurentPoly.const(1)
        for d in divisors(n):
            prod = prod * cyclotomic(d)
        assert prod == LaurentPoly.monomial(n) - 1


def test_q_int_factorization():
    assert q_int_factorization_check(2)
    assert q_int_factorization_check(6)
    assert all(q_int_factorization_check(n) for n in range(2, 201))
    with pytest.raises(ValueError):
        q_int_factorization_check(1)


# -- euler_phi ----------------------------------------------------------------

def test_euler_phi_brute_force():
    assert euler_phi(1) == 1
    assert euler_phi(12) == 4
    for d in range(1, 300):
        assert euler_phi(d) == sum(1 for r in range(1, d + 1) if math.gcd(r, d) == 1)


# -- q-Lucas ------------------------------------------------------------------

def test_q_lucas_worked_example():
    # [7 choose 4]_q == 2 * [1 choose 1]_q == 2 (mod Phi_3)
    assert q_lucas_check(2, 1, 1, 1, 3)
    _, rem = (q_binom(7, 4) - 2).shift(0).divrem_monic(cyclotomic(3))
    assert rem.is_zero()


def test_q_lucas_vanishing_case():
    assert q_lucas_check(1, 2, 3, 1, 4)


def test_q_lucas_detects_wrong_constant():
    # changing binom(a,h) to a wrong integer must break divisibility
    diff = q_binom(7, 4) - 3
    assert not diff.is_divisible_by(cyclotomic(3))


def test_q_lucas_small_exhaustive():
    for d in range(2, 7):
        for a in range(0, 4):
            for h in range(0, 4):
                for b in range(d):
                    for l in range(d):
                        assert q_lucas_check(a, b, h, l, d)


def test_q_lucas_preconditions():
    with pytest.raises(ValueError):
        q_lucas_check(1, 3, 1, 0, 3)
    with pytest.raises(ValueError):
        q_lucas_check(1, 0, 1, 0, 1)


# -- Lemma on Phi_d(q^2) ------------------------------------------------------

def test_cyclotomic_lemma_examples():
    assert cyclotomic(3).subst_power(2) == LaurentPoly(0, [1, 0, 1, 0, 1])
    assert cyclotomic(3).subst_power(2) == cyclotomic(3) * cyclotomic(6)
    assert cyclotomic(2).subst_power(2) == cyclotomic(4)
    assert cyclotomic_lemma_check(3) and cyclotomic_lemma_check(2)


def test_cyclotomic_lemma_sweep():
    assert all(cyclotomic_lemma_check(d) for d in range(2, 51))


def test_odd_case_quotient_is_phi_2d():
    # independent of the check itself: for odd d, Phi_d(q^2) = Phi_d(q) Phi_2d(q)
    for d in range(3, 40, 2):
        assert cyclotomic(d).subst_power(2) == cyclotomic(d) * cyclotomic(2 * d)


def test_q_binom_shortcuts_agree_with_product():
    # symmetry and k > n shortcuts against the plain running product
    def plain(n, k):
        acc = LaurentPoly.const(1)
        for j in range(1, k + 1):
            acc = acc * q_int(n - j + 1)
            if j > 1:
                acc = acc.exact_div(q_int(j))
        return acc
    for n in range(-6, 15):
        for k in range(0, 18):
            assert q_binom(n, k) == plain(n, k), (n, k)
    assert q_binom(1200, 1195) == q_binom(1200, 5)
