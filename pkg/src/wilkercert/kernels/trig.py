"""Interval enclosures of sin, cos, tan on subsets of [0, 2].

On [0, 2] the Taylor terms of sin decrease from the first one, and those of
cos from the second one, so consecutive partial sums bracket the function.
"""

from __future__ import annotations

from fractions import Fraction

from ..enclosure import DomainError, Interval, pi_enclosure
from ..series import tan_coeff

_ONE_AND_HALF = Fraction(3, 2)  # < pi/2, certified in tests


class NearSingularityError(DomainError):
    """cos enclosure touches 0: the argument is too close to pi/2."""


def _terms_for(prec: int) -> int:
    # 2^(2N+1)/(2N+1)! < 2^-(prec+4)
    n, term, k = 0, Fraction(2), 1
    bound = Fraction(1, 2 ** (prec + 4))
    while term >= bound:
        k += 2
        term = term * 4 / ((k - 1) * k)
        n += 1
    return n + 1


def _partial_sums(x: Interval, terms: int, start: int) -> tuple[Interval, Interval]:
    """(S_N, S_{N+1}) of the alternating series sum (-1)^j x^(2j+start)/(2j+start)!."""
    work = x.prec + 16
    x = x.with_prec(work)
    x2 = x.square()
    term = x if start == 1 else Interval.from_int(1, work)
    total = term
    prev = total
    for j in range(1, terms + 1):
        k = 2 * j + start
        term = term * x2 / ((k - 1) * k)
        prev = total
        total = total - term if j % 2 else total + term
    return prev, total


def _check_domain(x: Interval) -> None:
    if x.lo_m < 0 or x.hi_fraction() > 2:
        raise DomainError("sin/cos enclosures are implemented for x in [0, 2]")


def _bracket(x: Interval, terms: int, start: int) -> Interval:
    a, b = _partial_sums(x, terms, start)
    unit = Interval.from_endpoints(-1, 1, x.prec)
    return a.hull(b).intersect(unit).with_prec(x.prec)


def sin_enclose(x: Interval, terms: int | None = None) -> Interval:
    """Enclosure of {sin t : t in x} for x within [0, 2]."""
    _check_domain(x)
    n = max(terms or 0, _terms_for(x.prec), 2)
    if x.is_point():
        return _bracket(x, n, 1)
    lo = Interval(x.lo_m, x.lo_m, x.exp, x.prec)
    hi = Interval(x.hi_m, x.hi_m, x.exp, x.prec)
    if x.hi_fraction() <= _ONE_AND_HALF:
        # increasing on [0, pi/2]
        return _bracket(lo, n, 1).hull(_bracket(hi, n, 1))
    return _bracket(x, n, 1)


def cos_enclose(x: Interval, terms: int | None = None) -> Interval:
    """Enclosure of {cos t : t in x} for x within [0, 2] (decreasing there)."""
    _check_domain(x)
    n = max(terms or 0, _terms_for(x.prec), 2)
    if x.is_point():
        return _bracket(x, n, 0)
    lo = Interval(x.lo_m, x.lo_m, x.exp, x.prec)
    hi = Interval(x.hi_m, x.hi_m, x.exp, x.prec)
    return _bracket(hi, n, 0).hull(_bracket(lo, n, 0))


def tan_enclose(x: Interval, terms: int | None = None) -> Interval:
    c = cos_enclose(x, terms)
    if c.lo_m <= 0:
        raise NearSingularityError("cos enclosure reaches 0; shrink x or raise precision")
    return sin_enclose(x, terms) / c


def tan_partial_sum(n: int, x: Interval) -> Interval:
    """sum_{k=1}^{n} t_k x^(2k-1)."""
    acc = Interval.from_int(0, x.prec)
    for k in range(1, n + 1):
        acc = acc + (x ** (2 * k - 1)) * tan_coeff(k)
    return acc


def tan_tail_bracket(n: int, x: Interval) -> tuple[Interval, Interval]:
    """Enclosures of t_{n+1} x^(2n) tan x and (2/pi)^(2n) x^(2n) tan x."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if x.lo_m <= 0:
        raise DomainError("x must be bounded away from 0")
    tx = tan_enclose(x)
    x2n = x ** (2 * n)
    lower = x2n * tx * tan_coeff(n + 1)
    two_over_pi = Interval.from_int(2, x.prec) / pi_enclosure(x.prec)
    upper = (two_over_pi ** (2 * n)) * x2n * tx
    return lower, upper


def lemma_bracket_holds(n: int, x: Interval) -> bool:
    """Certify lower < tan x - partial sum < upper at the given enclosure."""
    lower, upper = tan_tail_bracket(n, x)
    mid = tan_enclose(x) - tan_partial_sum(n, x)
    return lower.certainly_lt(mid) and mid.certainly_lt(upper)


__all__ = [
    "NearSingularityError",
    "sin_enclose",
    "cos_enclose",
    "tan_enclose",
    "tan_partial_sum",
    "tan_tail_bracket",
    "lemma_bracket_holds",
]
