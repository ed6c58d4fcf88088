"""Dyadic interval arithmetic with outward rounding.

An ``Interval`` is ``[lo_m * 2**exp, hi_m * 2**exp]`` with integer mantissas
sharing one exponent.  Every operation computes the exact dyadic image and then
rounds the lower end toward -inf and the upper end toward +inf so that at most
``prec`` significant bits remain.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC


class DomainError(ArithmeticError):
    """Operation undefined on the given enclosure (e.g. division by [.. 0 ..])."""


LESS, GREATER, UNDECIDED = "certainly-less", "certainly-greater", "undecided"


def _normalize(lo: int, hi: int, exp: int, prec: int) -> tuple[int, int, int]:
    bl = max(abs(lo).bit_length(), abs(hi).bit_length())
    if bl > prec:
        sh = bl - prec
        lo >>= sh
        hi = -((-hi) >> sh)
        exp += sh
    elif lo == 0 and hi == 0:
        exp = 0
    return lo, hi, exp


class Interval:
    __slots__ = ("lo_m", "hi_m", "exp", "prec")

    def __init__(self, lo_m: int, hi_m: int, exp: int = 0, prec: int = 64, *, _raw: bool = False):
        if not _raw:
            if lo_m > hi_m:
                raise ValueError("empty interval")
            lo_m, hi_m, exp = _normalize(lo_m, hi_m, exp, prec)
        self.lo_m = lo_m
        self.hi_m = hi_m
        self.exp = exp
        self.prec = prec

    # -- construction -------------------------------------------------------

    @classmethod
    def from_int(cls, n: int, prec: int = 64) -> "Interval":
        return cls(n, n, 0, prec)

    @classmethod
    def from_fraction(cls, q, prec: int = 64) -> "Interval":
        if isinstance(q, Interval):
            return q
        if isinstance(q, int):
            return cls(q, q, 0, prec)
        q = Fraction(q)
        p, d = q.numerator, q.denominator
        if d & (d - 1) == 0:  # dyadic: exact when it fits
            e = -(d.bit_length() - 1)
            return cls(p, p, e, prec)
        s = prec + 2 - (abs(p).bit_length() - d.bit_length())
        if s >= 0:
            num = p << s
            lo = num // d
            hi = -((-num) // d)
            return cls(lo, hi, -s, prec)
        lo = p // (d << -s)
        hi = -((-p) // (d << -s))
        return cls(lo, hi, -s, prec)

    @classmethod
    def from_endpoints(cls, lo, hi, prec: int = 64) -> "Interval":
        a = cls.from_fraction(lo, prec)
        b = cls.from_fraction(hi, prec)
        return a.hull(b)

    @classmethod
    def coerce(cls, v, prec: int) -> "Interval":
        if isinstance(v, Interval):
            return v
        if isinstance(v, (int, _RationalABC)):
            return cls.from_fraction(v, prec)
        to_iv = getattr(v, "to_interval", None)
        if to_iv is not None:
            return to_iv(prec)
        raise TypeError(f"cannot coerce {type(v).__name__} to Interval")

    def with_prec(self, prec: int) -> "Interval":
        return Interval(self.lo_m, self.hi_m, self.exp, prec)

    # -- inspection ---------------------------------------------------------

    def lo_fraction(self) -> Fraction:
        return Fraction(self.lo_m) * Fraction(2) ** self.exp

    def hi_fraction(self) -> Fraction:
        return Fraction(self.hi_m) * Fraction(2) ** self.exp

    @property
    def lo(self) -> Fraction:
        return self.lo_fraction()

    @property
    def hi(self) -> Fraction:
        return self.hi_fraction()

    def mid(self) -> Fraction:
        return Fraction(self.lo_m + self.hi_m) * Fraction(2) ** (self.exp - 1)

    def width(self) -> Fraction:
        return Fraction(self.hi_m - self.lo_m) * Fraction(2) ** self.exp

    def mag(self) -> Fraction:
        return max(abs(self.lo_fraction()), abs(self.hi_fraction()))

    def is_point(self) -> bool:
        return self.lo_m == self.hi_m

    def contains(self, v) -> bool:
        if isinstance(v, Interval):
            return self.lo_fraction() <= v.lo_fraction() and v.hi_fraction() <= self.hi_fraction()
        v = Fraction(v)
        return self.lo_fraction() <= v <= self.hi_fraction()

    def contains_zero(self) -> bool:
        return self.lo_m <= 0 <= self.hi_m

    def is_positive(self) -> bool:
        return self.lo_m > 0

    def is_negative(self) -> bool:
        return self.hi_m < 0

    def sign(self) -> int:
        """+1 / -1 when certain, 0 when the enclosure straddles or touches 0."""
        if self.lo_m > 0:
            return 1
        if self.hi_m < 0:
            return -1
        return 0

    def __float__(self) -> float:
        return float(self.mid())

    def __repr__(self) -> str:
        return f"Interval[{float(self.lo_fraction())!r}, {float(self.hi_fraction())!r}]@{self.prec}"

    # -- lattice ------------------------------------------------------------

    def _align(self, other: "Interval"):
        e = min(self.exp, other.exp)
        s1, s2 = self.exp - e, other.exp - e
        return (self.lo_m << s1, self.hi_m << s1, other.lo_m << s2, other.hi_m << s2, e)

    def hull(self, other: "Interval") -> "Interval":
        other = Interval.coerce(other, self.prec)
        a_lo, a_hi, b_lo, b_hi, e = self._align(other)
        return Interval(min(a_lo, b_lo), max(a_hi, b_hi), e, max(self.prec, other.prec))

    def intersect(self, other: "Interval") -> "Interval":
        other = Interval.coerce(other, self.prec)
        a_lo, a_hi, b_lo, b_hi, e = self._align(other)
        lo, hi = max(a_lo, b_lo), min(a_hi, b_hi)
        if lo > hi:
            raise DomainError("empty intersection")
        return Interval(lo, hi, e, max(self.prec, other.prec))

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> "Interval":
        return Interval(-self.hi_m, -self.lo_m, self.exp, self.prec, _raw=True)

    def __pos__(self) -> "Interval":
        return self

    def __add__(self, other) -> "Interval":
        if not isinstance(other, Interval):
            if other == 0:
                return self
            other = Interval.coerce(other, self.prec)
        prec = max(self.prec, other.prec)
        e1, e2 = self.exp, other.exp
        if e1 == e2:
            return Interval(self.lo_m + other.lo_m, self.hi_m + other.hi_m, e1, prec)
        a, b = (self, other) if e1 > e2 else (other, self)
        # b is far below a's last bit: replace it by a coarser outer bound
        gap = a.exp - b.exp
        if gap > 2 * prec + 64:
            cut = a.exp - prec - 32
            sh = cut - b.exp
            if sh > 0:
                b = Interval(b.lo_m >> sh, -((-b.hi_m) >> sh), cut, prec, _raw=True)
        e = b.exp
        s = a.exp - e
        return Interval((a.lo_m << s) + b.lo_m, (a.hi_m << s) + b.hi_m, e, prec)

    __radd__ = __add__

    def __sub__(self, other) -> "Interval":
        if not isinstance(other, Interval):
            if other == 0:
                return self
            other = Interval.coerce(other, self.prec)
        return self + (-other)

    def __rsub__(self, other) -> "Interval":
        return (-self) + other

    def __mul__(self, other) -> "Interval":
        if not isinstance(other, Interval):
            if isinstance(other, int):
                if other >= 0:
                    return Interval(self.lo_m * other, self.hi_m * other, self.exp, self.prec)
                return Interval(self.hi_m * other, self.lo_m * other, self.exp, self.prec)
            other = Interval.coerce(other, self.prec)
        prec = max(self.prec, other.prec)
        a, b, c, d = self.lo_m, self.hi_m, other.lo_m, other.hi_m
        e = self.exp + other.exp
        if a >= 0:
            if c >= 0:
                return Interval(a * c, b * d, e, prec)
            if d <= 0:
                return Interval(b * c, a * d, e, prec)
            return Interval(b * c, b * d, e, prec)
        if b <= 0:
            if c >= 0:
                return Interval(a * d, b * c, e, prec)
            if d <= 0:
                return Interval(b * d, a * c, e, prec)
            return Interval(a * d, a * c, e, prec)
        if c >= 0:
            return Interval(a * d, b * d, e, prec)
        if d <= 0:
            return Interval(b * c, a * c, e, prec)
        return Interval(min(a * d, b * c), max(a * c, b * d), e, prec)

    __rmul__ = __mul__

    def reciprocal(self) -> "Interval":
        if self.contains_zero():
            raise DomainError("division by an interval containing 0")
        if self.hi_m < 0:
            return -((-self).reciprocal())
        prec = self.prec
        lo, hi = self.lo_m, self.hi_m
        s = prec + hi.bit_length() + 2
        one = 1 << s
        r_lo = one // hi
        r_hi = -((-one) // lo)
        return Interval(r_lo, r_hi, -s - self.exp, prec)

    def __truediv__(self, other) -> "Interval":
        if isinstance(other, int) and other != 0 and other & (other - 1) == 0:
            k = other.bit_length() - 1
            return Interval(self.lo_m, self.hi_m, self.exp - k, self.prec, _raw=True)
        if not isinstance(other, Interval):
            other = Interval.coerce(other, self.prec)
        return self * other.reciprocal()

    def __rtruediv__(self, other) -> "Interval":
        return Interval.coerce(other, self.prec) * self.reciprocal()

    def square(self) -> "Interval":
        a, b = self.lo_m, self.hi_m
        if a >= 0:
            return Interval(a * a, b * b, 2 * self.exp, self.prec)
        if b <= 0:
            return Interval(b * b, a * a, 2 * self.exp, self.prec)
        return Interval(0, max(a * a, b * b), 2 * self.exp, self.prec)

    def __pow__(self, n: int) -> "Interval":
        if not isinstance(n, int):
            raise TypeError("only integer powers are supported")
        if n < 0:
            return (self ** (-n)).reciprocal()
        if n == 0:
            return Interval(1, 1, 0, self.prec)
        if n == 1:
            return self
        a, b = self.lo_m, self.hi_m
        if a >= 0:
            lo, hi = _pow_round(a, n, self.exp, self.prec, False), _pow_round(b, n, self.exp, self.prec, True)
            return _from_pair(lo, hi, self.prec)
        if b <= 0:
            lo_abs = _pow_round(-b, n, self.exp, self.prec, False)
            hi_abs = _pow_round(-a, n, self.exp, self.prec, True)
            if n % 2 == 0:
                return _from_pair(lo_abs, hi_abs, self.prec)
            return _from_pair((-hi_abs[0], hi_abs[1]), (-lo_abs[0], lo_abs[1]), self.prec)
        top = _pow_round(max(-a, b), n, self.exp, self.prec, True)
        if n % 2 == 0:
            return _from_pair((0, top[1]), top, self.prec)
        neg = _pow_round(-a, n, self.exp, self.prec, True)
        pos = _pow_round(b, n, self.exp, self.prec, True)
        return _from_pair((-neg[0], neg[1]), pos, self.prec)

    def abs(self) -> "Interval":
        if self.lo_m >= 0:
            return self
        if self.hi_m <= 0:
            return -self
        return Interval(0, max(-self.lo_m, self.hi_m), self.exp, self.prec)

    # -- comparison ---------------------------------------------------------

    def compare(self, other) -> str:
        other = Interval.coerce(other, self.prec)
        a_lo, a_hi, b_lo, b_hi, _ = self._align(other)
        if a_hi < b_lo:
            return LESS
        if a_lo > b_hi:
            return GREATER
        return UNDECIDED

    def certainly_lt(self, other) -> bool:
        return self.compare(other) == LESS

    def certainly_gt(self, other) -> bool:
        return self.compare(other) == GREATER


def _pow_round(m: int, n: int, exp: int, prec: int, up: bool) -> tuple[int, int]:
    """(mantissa, exponent) of (m*2^exp)^n rounded to ~prec bits, m >= 0."""
    r, e = 1, 0
    base, be = m, exp
    k = n
    while True:
        if k & 1:
            r, e = _round_mant(r * base, e + be, prec + 8, up)
        k >>= 1
        if not k:
            break
        base, be = _round_mant(base * base, be + be, prec + 8, up)
    return r, e


def _round_mant(m: int, e: int, prec: int, up: bool) -> tuple[int, int]:
    bl = m.bit_length()
    if bl > prec:
        sh = bl - prec
        m = -((-m) >> sh) if up else m >> sh
        e += sh
    return m, e


def _from_pair(lo: tuple[int, int], hi: tuple[int, int], prec: int) -> Interval:
    e = min(lo[1], hi[1])
    return Interval(lo[0] << (lo[1] - e), hi[0] << (hi[1] - e), e, prec)
