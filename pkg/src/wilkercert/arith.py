"""Exact integer and rational plumbing: factorials, binomials, Bernoulli numbers.

Rationals are ``fractions.Fraction`` throughout; nothing in this module ever
rounds.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .enclosure.interval import Interval

Rational = Fraction

__all__ = [
    "Rational",
    "factorial",
    "binomial",
    "BernoulliTable",
    "bernoulli_abs_even",
    "bernoulli_signed",
    "bernoulli_bound_check",
]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of negative integer")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"binomial({n}, {k}) out of range")
    return math.comb(n, k)


class BernoulliTable:
    """Append-only cache of |B_{2k}|.

    Extension runs the recurrence sum_{j<m+1} C(m+1, j) B_j = 0 for every
    missing even index in one pass, under a lock, and publishes the new list
    in a single assignment so readers never see a half-built entry.
    """

    def __init__(self) -> None:
        self._values: list[Fraction] = []  # _values[k-1] == |B_{2k}|
        self._lock = threading.Lock()

    @property
    def max_index(self) -> int:
        return 2 * len(self._values)

    def _extend(self, kmax: int) -> None:
        with self._lock:
            vals = list(self._values)
            if len(vals) >= kmax:
                return
            # signed even-index values, B_0 = 1
            signed = [Fraction(1)] + [
                v if (i % 2 == 0) else -v for i, v in enumerate(vals)
            ]
            b1 = Fraction(-1, 2)
            for k in range(len(vals) + 1, kmax + 1):
                m = 2 * k
                acc = Fraction(1) + (m + 1) * b1
                for j in range(1, k):
                    acc += math.comb(m + 1, 2 * j) * signed[j]
                bm = -acc / (m + 1)
                signed.append(bm)
                vals.append(abs(bm))
            self._values = vals

    def abs_even(self, k: int) -> Fraction:
        if k < 1:
            raise ValueError("k must be >= 1")
        if k > len(self._values):
            self._extend(k)
        return self._values[k - 1]

    def values(self, kmax: int) -> list[Fraction]:
        if kmax > len(self._values):
            self._extend(kmax)
        return self._values[:kmax]


_TABLE = BernoulliTable()


def bernoulli_abs_even(k: int) -> Fraction:
    """|B_{2k}| for k >= 1."""
    return _TABLE.abs_even(k)


def bernoulli_signed(m: int) -> Fraction:
    """Signed B_m; exists for the recurrence self-test."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return Fraction(1)
    if m == 1:
        return Fraction(-1, 2)
    if m % 2:
        return Fraction(0)
    k = m // 2
    v = _TABLE.abs_even(k)
    return v if k % 2 else -v


def bernoulli_bound_check(k: int, pi: Interval) -> bool:
    """Certify 2/((2pi)^{2k}(1-2^{-2k})) < |B_{2k}|/(2k)! < 2/((2pi)^{2k}(1-2^{1-2k})).

    ``False`` only means the enclosure of pi was too coarse to decide.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    prec = pi.prec
    value = Interval.from_fraction(bernoulli_abs_even(k) / math.factorial(2 * k), prec)
    two_pi_pow = (pi * 2) ** (2 * k)
    if two_pi_pow.lo_fraction() <= 0:
        return False
    q = 4**k
    lower = Interval.from_int(2, prec) / (two_pi_pow * Fraction(q - 1, q))
    upper = Interval.from_int(2, prec) / (two_pi_pow * Fraction(q - 2, q))
    return lower.certainly_lt(value) and value.certainly_lt(upper)


def bernoulli_bound_precision(k: int, start: int = 64, cap: int = 4096) -> int | None:
    """Smallest precision in start, 2*start, ... at which the bracket is certified, or None."""
    from .enclosure import pi_enclosure

    prec = start
    while prec <= cap:
        if bernoulli_bound_check(k, pi_enclosure(prec)):
            return prec
        prec *= 2
    return None
