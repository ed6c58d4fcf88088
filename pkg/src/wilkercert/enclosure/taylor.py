"""Taylor models: truncated polynomial in t plus a remainder factor.

A model ``(coeffs, rem)`` over the domain ``dom`` asserts

    f(t) = sum_k coeffs[k] t^k + t^(K+1) * rho(t),   rho(t) in rem,

for every t in dom.  Coefficients live in any exact ring that supports
``+ - *`` with ints and Fractions (Fraction, PiLaurent) or are Intervals.
Keeping the remainder as a multiple of t^(K+1) is what lets an exact model at
an endpoint decide sign even where the function vanishes to high order.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .interval import DomainError, Interval


def _is_exact_zero(c) -> bool:
    if isinstance(c, Interval):
        return False
    return c == 0


class TaylorModel:
    __slots__ = ("coeffs", "rem", "dom", "prec", "_iv_cache")

    def __init__(self, coeffs, rem: Interval, dom: Interval, prec: int):
        self.coeffs = list(coeffs)
        self.rem = rem
        self.dom = dom
        self.prec = prec
        self._iv_cache = None

    # -- helpers ------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def iv(self, c) -> Interval:
        return Interval.coerce(c, self.prec)

    def iv_coeffs(self) -> list[Interval]:
        if self._iv_cache is None:
            self._iv_cache = [self.iv(c) for c in self.coeffs]
        return self._iv_cache

    def _zero_rem(self) -> Interval:
        return Interval.from_int(0, self.prec)

    @staticmethod
    def horner(ivs: list[Interval], t: Interval, prec: int) -> Interval:
        acc = Interval.from_int(0, prec)
        for c in reversed(ivs):
            acc = acc * t + c
        return acc

    def _like(self, coeffs, rem) -> "TaylorModel":
        return TaylorModel(coeffs, rem, self.dom, self.prec)

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c, order: int, dom: Interval, prec: int) -> "TaylorModel":
        coeffs = [c] + [0] * order
        return cls(coeffs, Interval.from_int(0, prec), dom, prec)

    @classmethod
    def linear(cls, c, order: int, dom: Interval, prec: int) -> "TaylorModel":
        """The identity x = c + t."""
        coeffs = [c, 1] + [0] * (order - 1)
        return cls(coeffs[: order + 1], Interval.from_int(0, prec), dom, prec)

    @classmethod
    def sincos(cls, s0, c0, order: int, dom: Interval, prec: int):
        """Models of sin(c+t), cos(c+t) from sin(c)=s0, cos(c)=c0.

        The remainder is the Lagrange bound |t|^(K+1)/(K+1)!.
        """
        s_coeffs, c_coeffs = [], []
        cyc_s = (s0, c0, -s0, -c0)
        cyc_c = (c0, -s0, -c0, s0)
        for k in range(order + 1):
            inv = Fraction(1, math.factorial(k))
            s_coeffs.append(cyc_s[k % 4] * inv if not _is_exact_zero(cyc_s[k % 4]) else 0)
            c_coeffs.append(cyc_c[k % 4] * inv if not _is_exact_zero(cyc_c[k % 4]) else 0)
        bound = Interval.from_fraction(Fraction(1, math.factorial(order + 1)), prec)
        rem = bound.hull(-bound)
        return cls(s_coeffs, rem, dom, prec), cls(c_coeffs, rem, dom, prec)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TaylorModel):
            coeffs = list(self.coeffs)
            coeffs[0] = coeffs[0] + other
            return self._like(coeffs, self.rem)
        coeffs = [a + b for a, b in zip(self.coeffs, other.coeffs)]
        return self._like(coeffs, self.rem + other.rem)

    __radd__ = __add__

    def __neg__(self):
        return self._like([-a for a in self.coeffs], -self.rem)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TaylorModel":
        if _is_exact_zero(c):
            return self._like([0] * len(self.coeffs), self._zero_rem())
        coeffs = [a * c if not _is_exact_zero(a) else 0 for a in self.coeffs]
        rem = self.rem if self.rem.is_point() and self.rem.lo_m == 0 else self.rem * self.iv(c)
        return self._like(coeffs, rem)

    def mul_linear(self, c) -> "TaylorModel":
        """Multiply by (c + t) exactly; the spilled top coefficient joins the remainder."""
        K = self.order
        p = self.coeffs
        coeffs = [0] * (K + 1)
        for k in range(K + 1):
            v = p[k] * c if not _is_exact_zero(p[k]) and not _is_exact_zero(c) else 0
            if k > 0 and not _is_exact_zero(p[k - 1]):
                v = v + p[k - 1]
            coeffs[k] = v
        rem = self.rem
        if not (rem.is_point() and rem.lo_m == 0):
            rem = rem * (self.dom + self.iv(c))
        if not _is_exact_zero(p[K]):
            rem = rem + self.iv(p[K])
        return self._like(coeffs, rem)

    def __mul__(self, other):
        if not isinstance(other, TaylorModel):
            return self.scale(other)
        K = self.order
        a, b = self.coeffs, other.coeffs
        nz_a = [i for i in range(K + 1) if not _is_exact_zero(a[i])]
        nz_b = [j for j in range(K + 1) if not _is_exact_zero(b[j])]
        low = [0] * (K + 1)
        for i in nz_a:
            ai = a[i]
            for j in nz_b:
                d = i + j
                if d > K:
                    break
                low[d] = low[d] + ai * b[j]
        # high part sum_{i+j>K} a_i b_j t^(i+j-K-1), bounded over dom
        ia, ib = self.iv_coeffs(), other.iv_coeffs()
        high = [None] * K
        for i in nz_a:
            for j in nz_b:
                d = i + j
                if d <= K:
                    continue
                term = ia[i] * ib[j]
                idx = d - K - 1
                high[idx] = term if high[idx] is None else high[idx] + term
        zero = self._zero_rem()
        rem = self.horner([h if h is not None else zero for h in high], self.dom, self.prec) if high else zero
        ra, rb = self.rem, other.rem
        a_zero = ra.is_point() and ra.lo_m == 0
        b_zero = rb.is_point() and rb.lo_m == 0
        if not b_zero:
            rem = rem + self.horner(ia, self.dom, self.prec) * rb
        if not a_zero:
            rem = rem + ra * self.horner(ib, self.dom, self.prec)
        if not a_zero and not b_zero:
            rem = rem + (self.dom ** (K + 1)) * ra * rb
        return self._like(low, rem)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TaylorModel":
        if n < 0:
            raise ValueError("non-negative powers only")
        result = TaylorModel.constant(1, self.order, self.dom, self.prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def div_t(self, k: int = 1) -> "TaylorModel":
        """Exact division by t^k; the first k coefficients must be exactly zero."""
        for i in range(k):
            if not _is_exact_zero(self.coeffs[i]):
                raise DomainError("division by t^k needs k exactly-zero leading coefficients")
        return TaylorModel(self.coeffs[k:], self.rem, self.dom, self.prec)

    def truncate(self, order: int) -> "TaylorModel":
        K = self.order
        if order >= K:
            return self
        spill = self.iv_coeffs()[order + 1 :]
        rem = self.horner(spill, self.dom, self.prec)
        rem = rem + (self.dom ** (K - order)) * self.rem
        return TaylorModel(self.coeffs[: order + 1], rem, self.dom, self.prec)

    def reciprocal(self) -> "TaylorModel":
        """1/f for an exact-coefficient model with f(dom) bounded away from 0."""
        K = self.order
        a = self.coeffs
        if _is_exact_zero(a[0]) or isinstance(a[0], Interval):
            raise DomainError("reciprocal needs an exact nonzero constant term")
        inv = [Fraction(0)] * (K + 1)
        inv[0] = 1 / Fraction(a[0])
        for k in range(1, K + 1):
            s = 0
            for j in range(1, k + 1):
                if not _is_exact_zero(a[j]):
                    s = s + a[j] * inv[k - j]
            inv[k] = -s * inv[0]
        p = TaylorModel(inv, self._zero_rem(), self.dom, self.prec)
        e = self * p  # == 1 + t^(K+1) rho_e
        for c in e.coeffs[1:]:
            if not _is_exact_zero(c):
                raise DomainError("reciprocal requires exact coefficient arithmetic")
        frange = self.range()
        if frange.contains_zero():
            raise DomainError("model range contains 0")
        rem = -(e.rem / frange)
        return TaylorModel(inv, rem, self.dom, self.prec)

    # -- evaluation ---------------------------------------------------------

    def range(self, sub: Interval | None = None) -> Interval:
        t = self.dom if sub is None else sub
        K = self.order
        val = self.horner(self.iv_coeffs(), t, self.prec)
        if not (self.rem.is_point() and self.rem.lo_m == 0):
            val = val + (t ** (K + 1)) * self.rem
        return val

    def valuation(self) -> int | None:
        """Index of the first exactly-nonzero coefficient (exact rings only)."""
        for k, c in enumerate(self.coeffs):
            if isinstance(c, Interval):
                return None
            if c != 0:
                return k
        return None

    def factored_range(self, m: int, sub: Interval | None = None) -> Interval:
        """Range of f(t)/t^m over sub (default dom); the first m coefficients must be 0."""
        t = self.dom if sub is None else sub
        ivs = self.iv_coeffs()[m:]
        val = self.horner(ivs, t, self.prec)
        if not (self.rem.is_point() and self.rem.lo_m == 0):
            val = val + (t ** (self.order + 1 - m)) * self.rem
        return val
