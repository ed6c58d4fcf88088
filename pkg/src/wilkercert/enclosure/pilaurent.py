"""Exact Laurent polynomials in pi with rational coefficients.

pi is transcendental, so two such polynomials are equal exactly when their
coefficient maps agree; zero tests are therefore decidable.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

from .interval import Interval
from .pi import pi_enclosure


class PiLaurent:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[int, Fraction] = {}
        if terms:
            for p, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[int(p)] = c
        self.terms = clean

    @classmethod
    def const(cls, c) -> "PiLaurent":
        return cls({0: c})

    @classmethod
    def pi_power(cls, p: int, coeff=1) -> "PiLaurent":
        return cls({p: coeff})

    @classmethod
    def lift(cls, v) -> "PiLaurent":
        if isinstance(v, PiLaurent):
            return v
        if isinstance(v, (int, _RationalABC)):
            return cls({0: v})
        raise TypeError(f"cannot lift {type(v).__name__} to PiLaurent")

    # -- algebra ------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Interval):
            return NotImplemented
        other = PiLaurent.lift(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return PiLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        r = PiLaurent()
        r.terms = {p: -c for p, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, Interval):
            return NotImplemented
        return self + (-PiLaurent.lift(other))

    def __rsub__(self, other):
        return PiLaurent.lift(other) - self

    def __mul__(self, other):
        if isinstance(other, Interval):
            return NotImplemented
        if isinstance(other, (int, _RationalABC)):
            if other == 0:
                return PiLaurent()
            r = PiLaurent()
            r.terms = {p: c * other for p, c in self.terms.items()}
            return r
        out: dict[int, Fraction] = {}
        for p, c in self.terms.items():
            for q, d in other.terms.items():
                out[p + q] = out.get(p + q, 0) + c * d
        return PiLaurent(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return self * (Fraction(1) / Fraction(other))
        other = PiLaurent.lift(other)
        if len(other.terms) != 1:
            raise ZeroDivisionError("only division by a monomial c*pi^p is exact in this ring")
        (q, d), = other.terms.items()
        r = PiLaurent()
        r.terms = {p - q: c / d for p, c in self.terms.items()}
        return r

    def __rtruediv__(self, other):
        return PiLaurent.lift(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("integer powers only")
        if n < 0:
            if len(self.terms) != 1:
                raise ZeroDivisionError("negative powers only of monomials")
            (p, c), = self.terms.items()
            return PiLaurent({p * n: Fraction(c) ** n})
        result = PiLaurent({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        try:
            other = PiLaurent.lift(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return all(p == 0 for p in self.terms)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("PiLaurent is not a rational constant")
        return self.terms.get(0, Fraction(0))

    def __bool__(self):
        return bool(self.terms)

    # -- evaluation ---------------------------------------------------------

    def to_interval(self, prec: int) -> Interval:
        return pilaurent_eval(self, prec)

    def evalf(self, pi_value):
        """Evaluate with an arbitrary numeric pi (e.g. an mpmath mpf)."""
        total = 0
        for p, c in sorted(self.terms.items()):
            total = total + (pi_value ** p) * c.numerator / c.denominator
        return total

    def __repr__(self):
        return f"PiLaurent({self.format()})"

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for p in sorted(self.terms, reverse=True):
            c = self.terms[p]
            if p == 0:
                parts.append(str(c))
            elif p == 1:
                parts.append(f"{c}*pi")
            else:
                parts.append(f"{c}*pi^{p}")
        return " + ".join(parts).replace("+ -", "- ")


_POW_CACHE: dict[tuple[int, int], Interval] = {}


def _pi_pow(p: int, prec: int) -> Interval:
    key = (p, prec)
    hit = _POW_CACHE.get(key)
    if hit is None:
        pi = pi_enclosure(prec + 16)
        hit = (pi ** p).with_prec(prec + 16)
        _POW_CACHE[key] = hit
    return hit


def pilaurent_eval(c: PiLaurent, precision_bits: int) -> Interval:
    """Enclosure of sum c_p pi^p."""
    if precision_bits < 8:
        raise ValueError("precision_bits must be >= 8")
    work = precision_bits + 16
    acc = Interval.from_int(0, work)
    for p, coeff in sorted(c.terms.items()):
        term = Interval.from_int(1, work) if p == 0 else _pi_pow(p, precision_bits)
        acc = acc + term * Interval.from_fraction(coeff, work)
    return acc.with_prec(precision_bits)


PI = PiLaurent({1: 1})
HALF_PI = PiLaurent({1: Fraction(1, 2)})
TWO_OVER_PI = PiLaurent({-1: 2})
