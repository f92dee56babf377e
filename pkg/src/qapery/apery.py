"""Apéry-type polynomial families and the eta-product coefficient stream."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exact_arith import ONE, IntXPoly, LaurentPoly, XPoly
from .qcomb import binom, q_binom

__all__ = [
    "EtaCoefficients",
    "apery_poly",
    "apery_number",
    "delannoy_poly",
    "q_apery_poly",
    "q_apery_poly_alt",
    "b_poly",
    "eta_product_coeffs",
]


@lru_cache(maxsize=None)
def apery_poly(n: int, alpha: int = 2) -> IntXPoly:
    """``sum_k (binom(n,k) binom(n+k,k))**alpha x**k``."""
    if n < 0 or alpha < 1:
        raise ValueError("need n >= 0 and alpha >= 1")
    coeffs = []
    c = 1  # binom(n, k) * binom(n + k, k), updated multiplicatively
    for k in range(n + 1):
        coeffs.append(c ** alpha)
        c = c * (n - k) * (n + k + 1) // ((k + 1) * (k + 1))
    return IntXPoly(coeffs)


def apery_number(n: int) -> int:
    """Classical Apéry number: 1, 5, 73, 1445, ..."""
    return apery_poly(n, 2)(1)


def delannoy_poly(n: int) -> IntXPoly:
    """Central Delannoy polynomial; the alpha = 1 member of :func:`apery_poly`."""
    return apery_poly(n, 1)


@lru_cache(maxsize=None)
def _qbinom_cached(n: int, k: int) -> LaurentPoly:
    return q_binom(n, k)


@lru_cache(maxsize=None)
def q_apery_poly(k: int, alpha: int = 2) -> XPoly:
    """q-Apéry polynomial in x with Laurent coefficients in q.

    The x**j coefficient is
    ``q**(alpha*(binom(j,2) - j*k)) * [k choose j]_q**alpha * [k+j choose j]_q**alpha``.
    The power of q carries the factor alpha; without it the divisibility by
    ``[n]_q`` fails from alpha = 2 on.
    """
    if k < 0 or alpha < 1:
        raise ValueError("need k >= 0 and alpha >= 1")
    coeffs = []
    for j in range(k + 1):
        body = (_qbinom_cached(k, j) * _qbinom_cached(k + j, j)) ** alpha
        coeffs.append(body.shift(alpha * (j * (j - 1) // 2 - j * k)))
    return XPoly(coeffs)


def q_apery_poly_alt(k: int, alpha: int = 2) -> XPoly:
    """Same polynomial via negative upper index:
    ``sum_j (-1)**(alpha j) q**(alpha j^2) ([k choose j]_q [-k-1 choose j]_q)**alpha x**j``.

    Built independently of :func:`q_apery_poly` so the two can check each other.
    """
    if k < 0 or alpha < 1:
        raise ValueError("need k >= 0 and alpha >= 1")
    coeffs = []
    for j in range(k + 1):
        body = (q_binom(k, j) * q_binom(-k - 1, j)) ** alpha
        sign = -1 if (alpha * j) % 2 else 1
        coeffs.append(body.shift(alpha * j * j) * sign)
    return XPoly(coeffs)


def b_poly(a: int, b: int, d: int, alpha: int = 2) -> XPoly:
    """Reduced form of the q-Apéry polynomial at index ``a*d + b`` modulo Phi_d.

    ``sum_{s,t} (-1)**(alpha(sd+t)) q**(alpha t^2) (binom(a,s) [b choose t]_q
    binom(-a-1,s) [d-b-1 choose t]_q)**alpha x**(sd+t)`` over ``0 <= s <= a``,
    ``0 <= t <= d-1``.
    """
    if d < 2 or not 0 <= b <= d - 1:
        raise ValueError("need d >= 2 and 0 <= b <= d-1")
    if a < 0 or alpha < 1:
        raise ValueError("need a >= 0 and alpha >= 1")
    # t-part is independent of s
    t_part = []
    for t in range(d):
        body = (_qbinom_cached(b, t) * _qbinom_cached(d - b - 1, t)) ** alpha
        sign = -1 if (alpha * t) % 2 else 1
        t_part.append(body.shift(alpha * t * t) * sign)
    coeffs = [LaurentPoly()] * (a * d + d)
    for s in range(a + 1):
        c = (binom(a, s) * binom(-a - 1, s)) ** alpha
        if (alpha * s * d) % 2:
            c = -c
        for t, tp in enumerate(t_part):
            coeffs[s * d + t] = coeffs[s * d + t] + tp * c
    return XPoly(coeffs)


@dataclass(frozen=True)
class EtaCoefficients:
    """Coefficients ``a[1..limit]`` of ``q prod (1-q^{2n})^4 (1-q^{4n})^4``."""

    limit: int
    coeffs: tuple[int, ...]  # coeffs[0] is the q^0 term (always 0)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise IndexError(n)
        return self.coeffs[n]

    def as_list(self) -> list[int]:
        return list(self.coeffs[1:])


def eta_product_coeffs(N: int) -> EtaCoefficients:
    """Expand ``q * prod_{n>=1} (1 - q^{2n})^4 (1 - q^{4n})^4`` through q**N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    size = N  # the product itself, degrees 0..N-1
    series = [1] + [0] * (size - 1)
    taps = [(i, (-1) ** i * binom(4, i)) for i in range(1, 5)]  # (1 - q^e)^4
    for step in (2, 4):
        for e in range(step, size, step):
            # in place, high degrees first, so each read sees the old series
            for deg in range(size - 1, e - 1, -1):
                acc = series[deg]
                for i, c in taps:
                    if i * e > deg:
                        break
                    acc += c * series[deg - i * e]
                series[deg] = acc
    return EtaCoefficients(N, tuple([0] + series))
