"""Trigonometric polynomials in x, sin x, cos x with exact coefficients.

A ``TrigPoly`` is a finite sum  c * x^i sin^j x cos^k x  with c rational or a
Laurent polynomial in pi.  A ``TrigFrac`` divides one by a single positive
monomial x^i sin^j x cos^k x; on (0, pi/2) that monomial is positive, so the
numerator of a gap function carries its sign.  That numerator is the cleared
form the certifier works with.

Because x is transcendental over the field generated by sin x and cos x, the
only relation to account for is sin^2 + cos^2 = 1; reducing every cos^k to
cos^(k mod 2) (1 - sin^2)^(k//2) gives a canonical form, so identities between
trigonometric polynomials are decidable.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

from ..enclosure import PiLaurent
from ..series import PowerSeries, ps_elementary

Mono = tuple[int, int, int]


def _norm(c):
    if isinstance(c, PiLaurent) and c.is_rational():
        return c.rational_value()
    return c


def _is_scalar(v) -> bool:
    return isinstance(v, (int, _RationalABC, PiLaurent))


class TrigPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Mono, object] = {}
        if terms:
            for m, c in terms.items():
                c = _norm(c if isinstance(c, PiLaurent) else Fraction(c))
                if c != 0:
                    clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, k: int = 0, coeff=1) -> "TrigPoly":
        return cls({(i, j, k): coeff})

    @classmethod
    def const(cls, c) -> "TrigPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def sin_multiple(cls, n: int) -> "TrigPoly":
        """sin(n x) as a polynomial in sin x, cos x."""
        s, c = cls.monomial(0, 1, 0), cls.monomial(0, 0, 1)
        sp, cp = cls(), cls.const(1)  # sin 0x, cos 0x
        for _ in range(n):
            sp, cp = sp * c + cp * s, cp * c - sp * s
        return sp

    @classmethod
    def cos_multiple(cls, n: int) -> "TrigPoly":
        s, c = cls.monomial(0, 1, 0), cls.monomial(0, 0, 1)
        sp, cp = cls(), cls.const(1)
        for _ in range(n):
            sp, cp = sp * c + cp * s, cp * c - sp * s
        return cp

    # -- algebra ------------------------------------------------------------

    def __add__(self, other):
        if _is_scalar(other):
            other = TrigPoly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return TrigPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TrigPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-(other if isinstance(other, TrigPoly) else TrigPoly.const(other)))

    def __rsub__(self, other):
        return TrigPoly.const(other) - self

    def __mul__(self, other):
        if _is_scalar(other):
            if other == 0:
                return TrigPoly()
            return TrigPoly({m: c * other for m, c in self.terms.items()})
        out: dict[Mono, object] = {}
        for (a, b, c), u in self.terms.items():
            for (d, e, f), v in other.terms.items():
                key = (a + d, b + e, c + f)
                out[key] = out.get(key, 0) + u * v
        return TrigPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("non-negative powers only")
        result = TrigPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, m: Mono) -> "TrigPoly":
        """Multiply by the monomial x^i sin^j cos^k."""
        i, j, k = m
        return TrigPoly({(a + i, b + j, c + k): v for (a, b, c), v in self.terms.items()})

    def min_monomial(self) -> Mono:
        if not self.terms:
            return (0, 0, 0)
        keys = list(self.terms)
        return (min(k[0] for k in keys), min(k[1] for k in keys), min(k[2] for k in keys))

    def derivative(self) -> "TrigPoly":
        acc: dict[Mono, object] = {}
        for (i, j, k), v in self.terms.items():
            if i:
                key = (i - 1, j, k)
                acc[key] = acc.get(key, 0) + v * i
            if j:
                key = (i, j - 1, k + 1)
                acc[key] = acc.get(key, 0) + v * j
            if k:
                key = (i, j + 1, k - 1)
                acc[key] = acc.get(key, 0) - v * k
        return TrigPoly(acc)

    def canonical(self) -> "TrigPoly":
        """Rewrite cos^k as cos^(k mod 2) (1 - sin^2)^(k//2)."""
        one_minus_s2 = TrigPoly({(0, 0, 0): 1, (0, 2, 0): -1})
        out = TrigPoly()
        cache: dict[int, TrigPoly] = {}
        for (i, j, k), v in self.terms.items():
            h = k // 2
            if h not in cache:
                cache[h] = one_minus_s2**h
            out = out + cache[h].shift((i, j, k % 2)) * v
        return out

    def equals(self, other: "TrigPoly") -> bool:
        return (self - other).canonical().is_zero()

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return all(not isinstance(c, PiLaurent) for c in self.terms.values())

    def single_term(self):
        if len(self.terms) != 1:
            return None
        (m, c), = self.terms.items()
        return m, c

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def to_series(self, order: int) -> PowerSeries:
        """Exact series at 0 (rational coefficients only)."""
        if not self.is_rational():
            raise ValueError("series expansion needs rational coefficients")
        s = ps_elementary("sin", order)
        c = ps_elementary("cos", order)
        x = PowerSeries.x(order)
        total = PowerSeries.constant(0, order)
        for (i, j, k), v in self.terms.items():
            total = total + (x**i) * (s**j) * (c**k) * v
        return total

    def __eq__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"TrigPoly({len(self.terms)} terms)"

    def format(self) -> str:
        parts = []
        for (i, j, k), c in sorted(self.terms.items()):
            factors = [f"x^{i}" if i > 1 else "x" if i else "", f"sin^{j}" if j > 1 else "sin" if j else "",
                       f"cos^{k}" if k > 1 else "cos" if k else ""]
            mono = "*".join(f for f in factors if f)
            coeff = c.format() if isinstance(c, PiLaurent) else str(c)
            parts.append(f"({coeff})*{mono}" if mono else f"({coeff})")
        return " + ".join(parts) or "0"


class TrigFrac:
    """numerator / (x^i sin^j cos^k), kept with the common monomial cancelled."""

    __slots__ = ("num", "den")

    def __init__(self, num: TrigPoly, den: Mono = (0, 0, 0)):
        if num.is_zero():
            den = (0, 0, 0)
        else:
            g = num.min_monomial()
            common = tuple(min(a, b) for a, b in zip(g, den))
            if any(common):
                num = num.shift(tuple(-c for c in common))
                den = tuple(a - b for a, b in zip(den, common))
        self.num = num
        self.den = tuple(den)

    @classmethod
    def const(cls, c) -> "TrigFrac":
        return cls(TrigPoly.const(c))

    @classmethod
    def x(cls) -> "TrigFrac":
        return cls(TrigPoly.monomial(1, 0, 0))

    @classmethod
    def sin(cls) -> "TrigFrac":
        return cls(TrigPoly.monomial(0, 1, 0))

    @classmethod
    def cos(cls) -> "TrigFrac":
        return cls(TrigPoly.monomial(0, 0, 1))

    @classmethod
    def tan(cls) -> "TrigFrac":
        return cls(TrigPoly.monomial(0, 1, 0), (0, 0, 1))

    def _lift(self, other) -> "TrigFrac":
        if isinstance(other, TrigFrac):
            return other
        if _is_scalar(other):
            return TrigFrac.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        lcm = tuple(max(a, b) for a, b in zip(self.den, other.den))
        n1 = self.num.shift(tuple(a - b for a, b in zip(lcm, self.den)))
        n2 = other.num.shift(tuple(a - b for a, b in zip(lcm, other.den)))
        return TrigFrac(n1 + n2, lcm)

    __radd__ = __add__

    def __neg__(self):
        return TrigFrac(-self.num, self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        den = tuple(a + b for a, b in zip(self.den, other.den))
        return TrigFrac(self.num * other.num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        st = other.num.single_term()
        if st is None:
            raise ZeroDivisionError("only division by a single monomial keeps the denominator positive")
        mono, coeff = st
        num = self.num.shift(other.den) * (Fraction(1) / coeff)
        den = tuple(a + b for a, b in zip(self.den, mono))
        return TrigFrac(num, den)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n: int):
        if n >= 0:
            return TrigFrac(self.num**n, tuple(a * n for a in self.den))
        return TrigFrac.const(1) / (self ** (-n))

    def derivative(self) -> "TrigFrac":
        """(N/D)' = (N' D - N D') / D^2 with D the monomial denominator."""
        d = TrigPoly.monomial(*self.den)
        num = self.num.derivative() * d - self.num * d.derivative()
        return TrigFrac(num, tuple(2 * a for a in self.den))

    def __repr__(self):
        return f"TrigFrac(num={self.num!r}, den={self.den})"
