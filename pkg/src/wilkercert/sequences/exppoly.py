"""Exponential polynomials  sum c * n^p * 2^(a n) * 3^(b n)  with exact coefficients.

Bases 4, 16, 64, 256, 1024 are powers of 2 and 9 is a power of 3, so every
base used in the proofs is a pair (a, b).  Shifting n -> n + h is exact: the
polynomial part is re-expanded and each exponential picks up 2^(a h) 3^(b h).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

_BASES = {1: (0, 0), 2: (1, 0), 3: (0, 1), 4: (2, 0), 9: (0, 2), 16: (4, 0), 64: (6, 0), 256: (8, 0), 1024: (10, 0)}

Key = tuple[int, int, int]  # (power of n, a, b)


def base_key(base: int) -> tuple[int, int]:
    try:
        return _BASES[base]
    except KeyError:
        raise ValueError(f"unsupported base {base}") from None


class ExpPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Key, Fraction] = {}
        for k, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(k)] = c
        self.terms = clean

    @classmethod
    def poly(cls, coeffs, base: int = 1) -> "ExpPoly":
        """sum coeffs[p] n^p, times base^n."""
        a, b = base_key(base)
        return cls({(p, a, b): c for p, c in enumerate(coeffs)})

    @classmethod
    def shifted_poly(cls, coeffs, h: int, base: int = 1) -> "ExpPoly":
        """sum coeffs[j] (n - h)^j, times base^n, expanded in n."""
        a, b = base_key(base)
        out: dict[Key, Fraction] = {}
        for j, c in enumerate(coeffs):
            for p in range(j + 1):
                key = (p, a, b)
                out[key] = out.get(key, 0) + Fraction(c) * comb(j, p) * (-h) ** (j - p)
        return cls(out)

    @classmethod
    def const(cls, c) -> "ExpPoly":
        return cls({(0, 0, 0): c})

    # -- algebra -------------------------------------------------------------

    def _lift(self, other) -> "ExpPoly":
        return other if isinstance(other, ExpPoly) else ExpPoly.const(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return ExpPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ExpPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out: dict[Key, Fraction] = {}
        for (p, a, b), c in self.terms.items():
            for (q, d, e), v in other.terms.items():
                key = (p + q, a + d, b + e)
                out[key] = out.get(key, 0) + c * v
        return ExpPoly(out)

    __rmul__ = __mul__

    def shift(self, h: int = 1) -> "ExpPoly":
        """The same expression with n replaced by n + h."""
        out: dict[Key, Fraction] = {}
        for (p, a, b), c in self.terms.items():
            factor = Fraction(2) ** (a * h) * Fraction(3) ** (b * h)
            for q in range(p + 1):
                key = (q, a, b)
                out[key] = out.get(key, 0) + c * factor * comb(p, q) * Fraction(h) ** (p - q)
        return ExpPoly(out)

    def __call__(self, n: int) -> Fraction:
        total = Fraction(0)
        for (p, a, b), c in self.terms.items():
            total += c * Fraction(n) ** p * Fraction(2) ** (a * n) * Fraction(3) ** (b * n)
        return total

    def part(self, base: int = 1) -> list[Fraction]:
        """Polynomial coefficients multiplying base^n."""
        a, b = base_key(base)
        deg = max((p for (p, x, y) in self.terms if (x, y) == (a, b)), default=-1)
        return [self.terms.get((p, a, b), Fraction(0)) for p in range(deg + 1)]

    def bases(self) -> list[tuple[int, int]]:
        return sorted({(a, b) for (_, a, b) in self.terms})

    def shifted_part(self, h: int, base: int = 1) -> list[Fraction]:
        """Coefficients c_j with part(base)(n) = sum c_j (n - h)^j."""
        coeffs = self.part(base)
        out = [Fraction(0)] * len(coeffs)
        for p, c in enumerate(coeffs):
            for j in range(p + 1):
                out[j] += c * comb(p, j) * Fraction(h) ** (p - j)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def first_difference(self, other: "ExpPoly"):
        """The first (key, self coeff, other coeff) where the two differ, or None."""
        keys = sorted(set(self.terms) | set(other.terms), key=lambda k: (k[1], k[2], k[0]))
        for k in keys:
            a, b = self.terms.get(k, Fraction(0)), other.terms.get(k, Fraction(0))
            if a != b:
                return k, a, b
        return None

    def __repr__(self):
        return f"ExpPoly({self.format()})"

    def format(self) -> str:
        parts = []
        for (p, a, b), c in sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][2], -kv[0][0])):
            mono = [f"n^{p}" if p > 1 else "n" if p else ""]
            if a:
                mono.append(f"2^({a}n)")
            if b:
                mono.append(f"3^({b}n)")
            text = "*".join(m for m in mono if m)
            parts.append(f"{c}*{text}" if text else str(c))
        return " + ".join(parts) or "0"


def describe_key(key: Key) -> str:
    p, a, b = key
    base = 2**a * 3**b
    return f"n^{p} * {base}^n" if base != 1 else f"n^{p}"
