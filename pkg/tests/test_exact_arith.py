import json

import pytest
from hypothesis import given, settings, strategies as st

from qapery.exact_arith import (IntXPoly, LaurentPoly, NotMonicError, XPoly, convolve,
                                convolve_schoolbook, lp_add, lp_divrem_monic, lp_eval_one,
                                lp_is_divisible, lp_mul, lp_pow, lp_subst_q2, xp_eval_one,
                                xp_first_nondivisible, xp_is_divisible, xp_mul, xp_pow, xp_scale)
from qapery.qcomb import cyclotomic, q_binom, q_int

L = LaurentPoly.from_dict
Q = LaurentPoly.monomial(1)


laurents = st.builds(
    LaurentPoly,
    st.integers(-4, 4),
    st.lists(st.integers(-9, 9), max_size=8),
)
xpolys = st.builds(XPoly, st.lists(laurents, max_size=4))


def monic_polys(min_deg=1, max_deg=6):
    return st.lists(st.integers(-9, 9), min_size=min_deg, max_size=max_deg).map(
        lambda cs: LaurentPoly(0, cs + [1]))


# -- lp_add -----------------------------------------------------------------

def test_add_merges_terms():
    assert lp_add(L({1: 1, 0: 1}), L({-1: 1, 0: -1})) == L({1: 1, -1: 1})


def test_add_zero_identity():
    f = L({-2: 3, 5: -1})
    assert lp_add(f, LaurentPoly()) == f


def test_add_cancellation_canonical_zero():
    z = lp_add(L({0: 1, 1: 1}), L({0: -1, 1: -1}))
    assert z.coeffs == () and z.offset == 0
    assert z == LaurentPoly()


# -- lp_mul -----------------------------------------------------------------

def test_mul_difference_of_squares():
    assert lp_mul(L({0: 1, 1: 1}), L({0: 1, 1: -1})) == L({0: 1, 2: -1})


def test_mul_shift():
    assert lp_mul(L({-1: 1}), L({0: 1, 1: 1})) == L({-1: 1, 0: 1})


def test_mul_convolution_oracle():
    assert lp_mul(LaurentPoly(0, [1, 1, 1]), LaurentPoly(0, [1, 1])) == LaurentPoly(0, [1, 2, 2, 1])


@given(st.lists(st.integers(-10**30, 10**30), max_size=60),
       st.lists(st.integers(-10**30, 10**30), max_size=60))
@settings(max_examples=200)
def test_kronecker_matches_schoolbook(a, b):
    assert convolve(a, b) == convolve_schoolbook(a, b)


@pytest.mark.parametrize("sign", [1, -1])
def test_kronecker_extreme_cancellation(sign):
    a = [sign * 10**40] * 30
    b = [10**40, -10**40] * 15
    assert convolve(a, b) == convolve_schoolbook(a, b)


# -- lp_pow -----------------------------------------------------------------

def test_pow_square():
    assert lp_pow(LaurentPoly(0, [1, 1]), 2) == LaurentPoly(0, [1, 2, 1])


def test_pow_zero_is_one_even_for_zero():
    assert lp_pow(L({3: 7}), 0) == 1
    assert lp_pow(LaurentPoly(), 0) == 1


def test_pow_matches_repeated_mul():
    f = L({-1: 1, 0: 1})
    assert lp_pow(f, 3) == f * f * f == L({-3: 1, -2: 3, -1: 3, 0: 1})


# -- subst / eval -----------------------------------------------------------

def test_subst_q2():
    assert lp_subst_q2(LaurentPoly(0, [1, 1])) == L({0: 1, 2: 1})
    assert lp_subst_q2(L({-1: 1})) == L({-2: 1})
    assert lp_subst_q2(q_int(3)) == L({0: 1, 2: 1, 4: 1})


def test_eval_one():
    assert lp_eval_one(q_int(5)) == 5
    assert lp_eval_one(LaurentPoly()) == 0
    assert lp_eval_one(q_binom(4, 2)) == 6


# -- division ---------------------------------------------------------------

def test_divrem_self():
    g = LaurentPoly(0, [3, -1, 1])
    assert lp_divrem_monic(g, g) == (1, 0)


def test_divrem_long_division():
    assert lp_divrem_monic(LaurentPoly(0, [1, 1, 1]), LaurentPoly(0, [1, 1])) == (Q, 1)


def test_divrem_cyclotomic_six():
    _, r = lp_divrem_monic(q_int(6), LaurentPoly(0, [1, -1, 1]))
    assert r.is_zero()


def test_divrem_rejects_non_monic_and_constant():
    with pytest.raises(NotMonicError):
        lp_divrem_monic(q_int(3), LaurentPoly(0, [1, 2]))
    with pytest.raises(NotMonicError):
        lp_divrem_monic(q_int(3), LaurentPoly.const(1))


@given(st.lists(st.integers(-50, 50), max_size=15), monic_polys())
def test_divrem_reconstruction(fc, g):
    f = LaurentPoly(0, fc)
    quot, rem = lp_divrem_monic(f, g)
    assert quot * g + rem == f
    assert rem.degree < g.degree


def test_is_divisible_examples():
    assert lp_is_divisible(LaurentPoly(), LaurentPoly(0, [1, 1]))
    assert lp_is_divisible(L({-1: 1, 0: 1}), LaurentPoly(0, [1, 1]))
    assert not lp_is_divisible(LaurentPoly(0, [1, 1]), cyclotomic(3))


def test_is_divisible_rejects_zero_constant_term():
    with pytest.raises(NotMonicError):
        lp_is_divisible(q_int(3), L({1: 1, 2: 1}))


@pytest.mark.parametrize("n", range(2, 9))
def test_q_int_congruence(n):
    for a in range(1, 31):
        for b in range(a, 31, n):
            assert lp_is_divisible(q_int(a) - q_int(b), q_int(n))


def test_q_int_noncongruent_not_divisible():
    assert not lp_is_divisible(q_int(4) - q_int(2), q_int(3))


@given(laurents, laurents)
def test_exact_div_roundtrip(f, h):
    g = LaurentPoly(0, [1, 2, 1]) if h.is_zero() else LaurentPoly(0, [-1, 0, 1])
    assert (f * g).exact_div(g) == f


# -- ring axioms and canonical form -----------------------------------------

@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + (-f)).is_zero()


@given(laurents)
def test_canonical_idempotent(f):
    again = LaurentPoly(f.offset, f.coeffs)
    assert again == f and again.offset == f.offset and again.coeffs == f.coeffs
    if f.coeffs:
        assert f.coeffs[0] != 0 and f.coeffs[-1] != 0
    else:
        assert f.offset == 0


def test_padded_input_normalizes():
    assert LaurentPoly(-3, [0, 0, 5, 0]) == L({-1: 5})
    assert LaurentPoly(7, [0, 0]).offset == 0


@given(laurents, laurents)
def test_eval_one_homomorphism(f, g):
    assert (f * g).eval_one() == f.eval_one() * g.eval_one()
    assert (f + g).eval_one() == f.eval_one() + g.eval_one()


@given(xpolys, xpolys, xpolys)
@settings(max_examples=60)
def test_xpoly_ring_axioms(p, r, s):
    assert p + r == r + p
    assert p * r == r * p
    assert (p * r) * s == p * (r * s)
    assert p * (r + s) == p * r + p * s
    assert (p - p).is_zero()


# -- XPoly -------------------------------------------------------------------

def test_xp_pow_zero():
    assert xp_pow(XPoly([Q, 1]), 0) == XPoly([1])


def test_xp_scale():
    assert xp_scale(XPoly([1, 1]), Q) == XPoly([Q, Q])


def test_xp_mul():
    assert xp_mul(XPoly([1, 1]), XPoly([1, -1])) == XPoly([1, 0, -1])


def test_xp_pow_matches_mul():
    p = XPoly([L({-1: 1}), L({0: 2, 3: 1})])
    assert xp_pow(p, 3) == p * p * p


def test_xp_is_divisible():
    g = LaurentPoly(0, [1, 1])
    assert xp_is_divisible(XPoly(), g)
    p = XPoly([g, g])
    assert xp_is_divisible(p, g)
    bad = XPoly([g, LaurentPoly.const(1), g])
    assert not xp_is_divisible(bad, g)
    j, rem = xp_first_nondivisible(bad, g)
    assert j == 1 and rem == 1


def test_xp_eval_one():
    from qapery.apery import q_apery_poly
    assert xp_eval_one(q_apery_poly(1, 2)) == IntXPoly([1, 4])
    assert xp_eval_one(XPoly()) == IntXPoly()
    assert xp_eval_one(q_apery_poly(2, 2)) == IntXPoly([1, 36, 36])


# -- IntXPoly ----------------------------------------------------------------

def test_intxpoly_arith():
    p = IntXPoly([1, 2])
    assert p ** 2 == IntXPoly([1, 4, 4])
    assert p(3) == 7
    assert (p - p).is_zero()
    assert IntXPoly([4, 6]).exact_div(2) == IntXPoly([2, 3])
    assert IntXPoly([4, 7]).first_nondivisible(2) == (1, 1)


# -- serialization -------------------------------------------------------------

@given(laurents)
def test_laurent_json_roundtrip(f):
    obj = json.loads(json.dumps(f.to_json()))
    assert all(isinstance(c, str) for c in obj["coeffs"])
    assert LaurentPoly.from_json(obj) == f


@given(xpolys)
def test_xpoly_json_roundtrip(p):
    assert XPoly.from_json(json.loads(json.dumps(p.to_json()))) == p


def test_json_shapes():
    assert cyclotomic(6).to_json() == {"offset": 0, "coeffs": ["1", "-1", "1"]}
    assert IntXPoly([1, 36, 36]).to_json() == {"coeffs": ["1", "36", "36"]}
    big = IntXPoly([10**40])
    assert IntXPoly.from_json(big.to_json()) == big


def test_immutable():
    f = LaurentPoly(0, [1])
    with pytest.raises(AttributeError):
        f.offset = 3
