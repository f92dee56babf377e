"""q-integers, Gaussian binomials, cyclotomic polynomials and the q-Lucas check."""

from __future__ import annotations

import threading
from functools import lru_cache

from .exact_arith import ONE, ZERO, InexactDivisionError, LaurentPoly

__all__ = [
    "CyclotomicCache",
    "binom",
    "q_int",
    "q_binom",
    "cyclotomic",
    "euler_phi",
    "divisors",
    "q_int_factorization_check",
    "q_lucas_check",
    "cyclotomic_lemma_check",
    "DEFAULT_CACHE",
]


def binom(n: int, k: int) -> int:
    """Binomial coefficient for any integer ``n`` (falling-factorial convention).

    ``binom(n, k) = 0`` for ``k < 0``; for negative ``n`` this gives
    ``binom(-a-1, s) = (-1)**s * binom(a+s, s)``.
    """
    if k < 0:
        return 0
    if n >= 0:
        if k > n:
            return 0
        k = min(k, n - k)
    acc = 1
    for i in range(k):
        acc = acc * (n - i) // (i + 1)
    return acc


def q_int(n: int) -> LaurentPoly:
    """The q-integer ``(1 - q**n) / (1 - q)`` for any integer ``n``.

    >>> str(q_int(3))
    '1 + q + q^2'
    >>> str(q_int(-2))
    '-q^-2 - q^-1'
    """
    if n >= 0:
        return LaurentPoly(0, [1] * n)
    return LaurentPoly(n, [-1] * (-n))


def q_binom(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial ``[n choose k]_q`` for any integers n, k.

    Built as the running product ``prod_{j<=k} [n-j+1]_q / [j]_q``, dividing
    exactly at every step so each partial product is itself a q-binomial.
    Partial products are memoized, so a whole row costs one step per entry.
    """
    if k < 0 or 0 <= n < k:
        return ZERO
    if n >= 0 and 2 * k > n:
        k = n - k
    acc = ONE
    for j in range(1, k + 1):  # in order, so the memo never recurses deeply
        acc = _q_binom_step(n, j)
    return acc


@lru_cache(maxsize=1 << 14)
def _q_binom_step(n: int, k: int) -> LaurentPoly:
    if k == 0:
        return ONE
    acc = _q_binom_step(n, k - 1) * q_int(n - k + 1)
    if k == 1 or acc.is_zero():
        return acc
    try:
        return acc.exact_div(q_int(k))
    except InexactDivisionError as exc:  # pragma: no cover - kernel bug
        raise AssertionError(f"q_binom({n}, {k}): inexact step") from exc


def divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(d: int) -> int:
    if d < 1:
        raise ValueError("euler_phi needs d >= 1")
    result = d
    for p in _factorize(d):
        result = result // p * (p - 1)
    return result


class CyclotomicCache:
    """Thread-safe memo of cyclotomic polynomials keyed by d."""

    def __init__(self):
        self._store: dict[int, LaurentPoly] = {}
        self._lock = threading.RLock()

    def __contains__(self, d: int) -> bool:
        return d in self._store

    def __len__(self) -> int:
        return len(self._store)

    def get(self, d: int) -> LaurentPoly:
        if d < 1:
            raise ValueError("cyclotomic index must be >= 1")
        with self._lock:
            hit = self._store.get(d)
            if hit is not None:
                return hit
            num = LaurentPoly(0, [-1] + [0] * (d - 1) + [1])  # q^d - 1
            for e in divisors(d)[:-1]:
                num = _exact_poly_div(num, self.get(e), d)
            self._store[d] = num
            return num


def _exact_poly_div(f: LaurentPoly, g: LaurentPoly, d: int) -> LaurentPoly:
    quot, rem = f.divrem_monic(g)
    if rem:  # pragma: no cover - kernel bug
        raise AssertionError(f"inexact division while building Phi_{d}")
    return quot


DEFAULT_CACHE = CyclotomicCache()


def cyclotomic(d: int, cache: CyclotomicCache | None = None) -> LaurentPoly:
    """The d-th cyclotomic polynomial as an ordinary polynomial in q."""
    return (DEFAULT_CACHE if cache is None else cache).get(d)


def q_int_factorization_check(n: int, cache: CyclotomicCache | None = None) -> bool:
    """Check ``[n]_q == prod_{d | n, d > 1} Phi_d(q)`` exactly."""
    if n < 2:
        raise ValueError("n must be >= 2")
    prod = ONE
    for d in divisors(n)[1:]:
        prod = prod * cyclotomic(d, cache)
    return prod == q_int(n)


def q_lucas_check(a: int, b: int, h: int, l: int, d: int,
                  cache: CyclotomicCache | None = None) -> bool:
    """q-Lucas: ``[ad+b choose hd+l]_q == binom(a,h) [b choose l]_q (mod Phi_d)``."""
    if d <= 1:
        raise ValueError("d must be > 1")
    if not (0 <= b < d and 0 <= l < d):
        raise ValueError("need 0 <= b, l <= d-1")
    if a < 0 or h < 0:
        raise ValueError("need a, h >= 0")
    diff = q_binom(a * d + b, h * d + l) - q_binom(b, l) * binom(a, h)
    return diff.is_divisible_by(cyclotomic(d, cache))


def cyclotomic_lemma_check(d: int, cache: CyclotomicCache | None = None) -> bool:
    """Phi_d(q) | Phi_d(q^2) for odd d; Phi_d(q^2) == Phi_2d(q) and q^d = -1 mod Phi_2d for even d."""
    if d < 2:
        raise ValueError("d must be >= 2")
    phi = cyclotomic(d, cache)
    phi_sq = phi.subst_power(2)
    if d % 2:
        return phi_sq.is_divisible_by(phi)
    phi_2d = cyclotomic(2 * d, cache)
    q_d_plus_one = LaurentPoly(0, [1] + [0] * (d - 1) + [1])
    return phi_sq == phi_2d and q_d_plus_one.is_divisible_by(phi_2d)
