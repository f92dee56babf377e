"""Exact arithmetic kernel.

Three immutable value types:

* :class:`LaurentPoly` -- Laurent polynomial in ``q`` over the integers, stored
  densely as ``offset`` plus a tuple of coefficients.  A LaurentPoly with
  ``offset >= 0`` doubles as an ordinary polynomial in Z[q] (an "IntPoly").
* :class:`XPoly` -- polynomial in ``x`` whose coefficients are LaurentPoly.
* :class:`IntXPoly` -- polynomial in ``x`` over the integers.

Coefficients are Python ints, so everything is exact.  The module-level
``lp_*`` / ``xp_*`` functions are thin aliases of the operator methods.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

__all__ = [
    "LaurentPoly",
    "XPoly",
    "IntXPoly",
    "NotMonicError",
    "InexactDivisionError",
    "convolve",
    "convolve_schoolbook",
    "lp_add",
    "lp_mul",
    "lp_pow",
    "lp_shift",
    "lp_subst_q2",
    "lp_eval_one",
    "lp_divrem_monic",
    "lp_is_divisible",
    "xp_add",
    "xp_mul",
    "xp_pow",
    "xp_scale",
    "xp_is_divisible",
    "xp_first_nondivisible",
    "xp_eval_one",
]


class NotMonicError(ValueError):
    """Divisor is not monic, is constant, or vanishes at q = 0."""


class InexactDivisionError(ArithmeticError):
    """An exact division left a nonzero remainder."""


# ---------------------------------------------------------------------------
# integer convolution
# ---------------------------------------------------------------------------

# Below this length schoolbook wins over packing into one big integer.
KRONECKER_THRESHOLD = 12


def convolve_schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _pack(coeffs: Sequence[int], width: int) -> int:
    pos = b"".join((c if c > 0 else 0).to_bytes(width, "little") for c in coeffs)
    neg = b"".join((-c if c < 0 else 0).to_bytes(width, "little") for c in coeffs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _unpack(value: int, width: int, length: int) -> list[int]:
    negative = value < 0
    raw = abs(value).to_bytes(width * length, "little")
    base = 1 << (8 * width)
    half = base >> 1
    out = []
    carry = 0
    for i in range(length):
        v = int.from_bytes(raw[i * width:(i + 1) * width], "little") + carry
        if v >= half:
            v -= base
            carry = 1
        else:
            carry = 0
        out.append(v)
    assert carry == 0
    return [-v for v in out] if negative else out


def convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Exact product of two integer coefficient sequences.

    Long inputs go through Kronecker substitution: both sides are packed into
    a single big integer with balanced digits wide enough that no product
    coefficient can overflow its slot, multiplied once, and unpacked.
    """
    if not a or not b:
        return []
    if min(len(a), len(b)) < KRONECKER_THRESHOLD:
        return convolve_schoolbook(a, b)
    bound_bits = (
        max(abs(c) for c in a).bit_length()
        + max(abs(c) for c in b).bit_length()
        + min(len(a), len(b)).bit_length()
        + 1
    )
    width = bound_bits // 8 + 1
    length = len(a) + len(b) - 1
    return _unpack(_pack(a, width) * _pack(b, width), width, length)


def _divrem_dense(f: Sequence[int], g: Sequence[int]) -> tuple[list[int], list[int]]:
    """Long division of dense coefficient lists (low degree first), g monic."""
    dg = len(g) - 1
    rem = list(f)
    if len(rem) <= dg:
        return [], rem
    quot = [0] * (len(rem) - dg)
    taps = [(i, c) for i, c in enumerate(g[:-1]) if c]
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if c:
            base = k - dg
            quot[base] = c
            for i, gi in taps:
                rem[base + i] -= c * gi
    return quot, rem[:dg]


# ---------------------------------------------------------------------------
# LaurentPoly
# ---------------------------------------------------------------------------

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """Laurent polynomial ``sum coeffs[i] * q**(offset + i)``.

    Always canonical: no leading or trailing zero coefficients, and zero is
    ``LaurentPoly(0, ())``.
    """

    __slots__ = ("offset", "coeffs", "_hash")

    def __init__(self, offset: int = 0, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        lo, hi = 0, len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        while lo < hi and cs[lo] == 0:
            lo += 1
        if lo == hi:
            offset, cs = 0, []
        else:
            offset, cs = offset + lo, cs[lo:hi]
        object.__setattr__(self, "offset", int(offset))
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls(0, (c,))

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> LaurentPoly:
        return cls(e, (c,))

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> LaurentPoly:
        """Build from ``{exponent: coefficient}``."""
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        return cls(lo, (terms.get(e, 0) for e in range(lo, hi + 1)))

    # -- views --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_polynomial(self) -> bool:
        """True when there are no negative exponents (an element of Z[q])."""
        return self.offset >= 0 or self.is_zero()

    @property
    def degree(self) -> int:
        """Highest exponent; -1 for zero by convention."""
        if not self.coeffs:
            return -1
        return self.offset + len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Lowest exponent (the offset)."""
        return self.offset

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, e: int) -> int:
        i = e - self.offset
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def terms(self) -> dict[int, int]:
        return {self.offset + i: c for i, c in enumerate(self.coeffs) if c}

    def dense(self, start: int = 0) -> list[int]:
        """Coefficients of q**start, q**(start+1), ... up to the degree."""
        if start > self.offset:
            raise ValueError("start exceeds the lowest exponent")
        return [0] * (self.offset - start) + list(self.coeffs)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: Scalar) -> LaurentPoly:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.offset, other.offset)
        hi = max(self.degree, other.degree)
        out = [0] * (hi - lo + 1)
        for src in (self, other):
            base = src.offset - lo
            for i, c in enumerate(src.coeffs):
                out[base + i] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.offset, (-c for c in self.coeffs))

    def __sub__(self, other: Scalar) -> LaurentPoly:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly(self.offset, (c * other for c in self.coeffs))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        return LaurentPoly(self.offset + other.offset, convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LaurentPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q**k."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.offset + k, self.coeffs)

    def subst_power(self, r: int) -> LaurentPoly:
        """Substitute q -> q**r for r >= 1."""
        if r < 1:
            raise ValueError("r must be positive")
        if r == 1 or not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * r + 1)
        out[::r] = self.coeffs
        return LaurentPoly(self.offset * r, out)

    def eval_one(self) -> int:
        """Value at q = 1."""
        return sum(self.coeffs)

    def __call__(self, q):
        """Evaluate at a number (int, Fraction, complex...)."""
        return sum(c * q ** (self.offset + i) for i, c in enumerate(self.coeffs))

    # -- division -----------------------------------------------------------

    def divrem_monic(self, g: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Quotient and remainder by a monic ordinary polynomial of degree >= 1.

        Both ``self`` and ``g`` must lie in Z[q].
        """
        _check_monic(g)
        if not self.is_polynomial():
            raise ValueError("dividend has negative exponents")
        if not self.coeffs:
            return ZERO, ZERO
        quot, rem = _divrem_dense(self.dense(0), g.dense(0))
        return LaurentPoly(0, quot), LaurentPoly(0, rem)

    def _cleared(self, g: LaurentPoly) -> tuple[int, LaurentPoly, LaurentPoly]:
        _check_unit_monic(g)
        shift = max(0, -self.offset)
        f = self.shift(shift)
        quot, rem = f.divrem_monic(g)
        return shift, quot, rem

    def remainder_mod(self, g: LaurentPoly) -> LaurentPoly:
        """Remainder of ``q**N * self`` by ``g`` where ``N`` clears negative exponents.

        Zero exactly when ``g`` divides ``self`` in Z[q, 1/q].
        """
        return self._cleared(g)[2]

    def is_divisible_by(self, g: LaurentPoly) -> bool:
        if not self.coeffs:
            _check_unit_monic(g)
            return True
        return self.remainder_mod(g).is_zero()

    def laurent_divrem(self, g: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """``(Q, r)`` with ``q**N * self == g * q**N * Q + r`` and ``deg r < deg g``.

        ``N`` clears negative exponents; ``r == 0`` iff ``g`` divides ``self``.
        """
        if not self.coeffs:
            _check_unit_monic(g)
            return ZERO, ZERO
        shift, quot, rem = self._cleared(g)
        return quot.shift(-shift), rem

    def exact_div(self, g: LaurentPoly) -> LaurentPoly:
        """Laurent quotient ``self / g``; raises InexactDivisionError otherwise."""
        quot, rem = self.laurent_divrem(g)
        if rem.coeffs:
            raise InexactDivisionError(f"{g} does not divide {self}")
        return quot

    # -- protocol -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.offset, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.offset}, {list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.terms().items()):
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "q"
            else:
                mono = f"q^{e}"
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        return {"offset": self.offset, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> LaurentPoly:
        return cls(int(obj["offset"]), (int(c) for c in obj["coeffs"]))


ZERO = LaurentPoly()
ONE = LaurentPoly(0, (1,))
Q = LaurentPoly(1, (1,))


def _lift(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.const(value)
    return NotImplemented


def _check_monic(g: LaurentPoly) -> None:
    if not g.is_polynomial() or g.is_zero():
        raise NotMonicError(f"divisor {g} is not an ordinary nonzero polynomial")
    if g.degree < 1:
        raise NotMonicError(f"divisor {g} is constant")
    if g.leading != 1:
        raise NotMonicError(f"divisor {g} is not monic")


def _check_unit_monic(g: LaurentPoly) -> None:
    _check_monic(g)
    if g.offset != 0:
        raise NotMonicError(f"divisor {g} vanishes at q = 0")


# ---------------------------------------------------------------------------
# XPoly
# ---------------------------------------------------------------------------


class XPoly:
    """Polynomial in x with LaurentPoly coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if isinstance(c, LaurentPoly) else LaurentPoly.const(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("XPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, j: int) -> LaurentPoly:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else ZERO

    def __add__(self, other) -> XPoly:
        if not isinstance(other, XPoly):
            if isinstance(other, (int, LaurentPoly)):
                other = XPoly((other,))
            else:
                return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(self.coeff(j) + other.coeff(j) for j in range(n))

    __radd__ = __add__

    def __neg__(self) -> XPoly:
        return XPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> XPoly:
        return self + (-other)

    def __mul__(self, other) -> XPoly:
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return XPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return XPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> XPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result = XPoly((ONE,))
        for _ in range(e):
            result = result * self
        return result

    def scale(self, c: Scalar) -> XPoly:
        return XPoly(a * c for a in self.coeffs)

    def map_coeffs(self, fn) -> XPoly:
        return XPoly(fn(c) for c in self.coeffs)

    def subst_q2(self) -> XPoly:
        return self.map_coeffs(lambda c: c.subst_power(2))

    def eval_one(self) -> IntXPoly:
        return IntXPoly(c.eval_one() for c in self.coeffs)

    def first_nondivisible(self, g: LaurentPoly) -> tuple[int, LaurentPoly] | None:
        """First x-degree whose coefficient ``g`` fails to divide, with its remainder."""
        _check_unit_monic(g)
        for j, c in enumerate(self.coeffs):
            r = c.remainder_mod(g)
            if r:
                return j, r
        return None

    def is_divisible_by(self, g: LaurentPoly) -> bool:
        return self.first_nondivisible(g) is None

    def exact_div(self, g: LaurentPoly) -> XPoly:
        _check_unit_monic(g)
        return XPoly(c.exact_div(g) for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = XPoly((other,))
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"XPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c:
                mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
                parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> XPoly:
        return cls(LaurentPoly.from_json(c) for c in obj["coeffs"])


# ---------------------------------------------------------------------------
# IntXPoly
# ---------------------------------------------------------------------------


class IntXPoly:
    """Polynomial in x with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntXPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __add__(self, other) -> IntXPoly:
        if isinstance(other, int):
            other = IntXPoly((other,))
        if not isinstance(other, IntXPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return IntXPoly(self.coeff(j) + other.coeff(j) for j in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntXPoly:
        return IntXPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> IntXPoly:
        return self + (-other)

    def __mul__(self, other) -> IntXPoly:
        if isinstance(other, int):
            return IntXPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntXPoly):
            return NotImplemented
        return IntXPoly(convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntXPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result = IntXPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def first_nondivisible(self, n: int) -> tuple[int, int] | None:
        """First x-degree whose coefficient is not divisible by ``n``, with the residue."""
        for j, c in enumerate(self.coeffs):
            r = c % n
            if r:
                return j, r
        return None

    def exact_div(self, n: int) -> IntXPoly:
        bad = self.first_nondivisible(n)
        if bad is not None:
            raise InexactDivisionError(f"coefficient of x^{bad[0]} not divisible by {n}")
        return IntXPoly(c // n for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntXPoly((other,))
        if not isinstance(other, IntXPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntXPoly({list(self.coeffs)})"

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> IntXPoly:
        return cls(int(c) for c in obj["coeffs"])


# ---------------------------------------------------------------------------
# functional aliases
# ---------------------------------------------------------------------------


def lp_add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def lp_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def lp_pow(f: LaurentPoly, e: int) -> LaurentPoly:
    return f ** e


def lp_shift(f: LaurentPoly, k: int) -> LaurentPoly:
    return f.shift(k)


def lp_subst_q2(f: LaurentPoly) -> LaurentPoly:
    return f.subst_power(2)


def lp_eval_one(f: LaurentPoly) -> int:
    return f.eval_one()


def lp_divrem_monic(f: LaurentPoly, g: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    return f.divrem_monic(g)


def lp_is_divisible(f: LaurentPoly, g: LaurentPoly) -> bool:
    return f.is_divisible_by(g)


def xp_add(p: XPoly, r: XPoly) -> XPoly:
    return p + r


def xp_mul(p: XPoly, r: XPoly) -> XPoly:
    return p * r


def xp_pow(p: XPoly, e: int) -> XPoly:
    return p ** e


def xp_scale(p: XPoly, c: Scalar) -> XPoly:
    return p.scale(c)


def xp_is_divisible(p: XPoly, g: LaurentPoly) -> bool:
    return p.is_divisible_by(g)


def xp_first_nondivisible(p: XPoly, g: LaurentPoly) -> tuple[int, LaurentPoly] | None:
    return p.first_nondivisible(g)


def xp_eval_one(p: XPoly) -> IntXPoly:
    return p.eval_one()
