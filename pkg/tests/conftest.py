"""Shared oracles: an mpmath evaluation namespace for the catalog functions."""

from __future__ import annotations

import random
from fractions import Fraction

import mpmath
import pytest

from wilkercert.enclosure import Interval, PiLaurent
from wilkercert.kernels import ExpressionId


class MpOps:
    """Same interface as the interval namespace, evaluated with mpmath at the ambient precision."""

    def sin(self, x):
        return mpmath.sin(x)

    def cos(self, x):
        return mpmath.cos(x)

    def tan(self, x):
        return mpmath.tan(x)

    def const(self, c):
        if isinstance(c, PiLaurent):
            return c.evalf(mpmath.pi)
        c = Fraction(c)
        return mpmath.mpf(c.numerator) / c.denominator


MP = MpOps()


def mp_eval(expr: ExpressionId, x, prec: int = 320):
    with mpmath.workprec(prec):
        if isinstance(x, Fraction):
            x = mpmath.mpf(x.numerator) / x.denominator
        return expr.fn(MP, mpmath.mpf(x))


def mpf_to_fraction(v) -> Fraction:
    if not isinstance(v, mpmath.mpf):
        v = mpmath.mpf(v)
    sign, man, exp, _ = v._mpf_  # exact; man_exp drops the sign
    if not man:
        return Fraction(0)
    return (-1) ** sign * Fraction(int(man)) * Fraction(2) ** exp


def encloses(iv: Interval, v, slack_bits: int = 250) -> bool:
    """iv contains the mpmath value v, allowing for the oracle's own rounding."""
    q = mpf_to_fraction(v)
    eps = (1 + abs(q)) * Fraction(1, 2**slack_bits)
    return iv.lo_fraction() - eps <= q <= iv.hi_fraction() + eps


def random_dyadics(count: int, lo: Fraction, hi: Fraction, bits: int, seed: int) -> list[Fraction]:
    rng = random.Random(seed)
    span = hi - lo
    return [lo + span * Fraction(rng.randrange(1, 2**bits), 2**bits) for _ in range(count)]


@pytest.fixture
def mp_ops():
    return MP


@pytest.fixture(scope="session")
def catalog_certificates():
    """Every catalog case at its default parameters, certified once per session."""
    from wilkercert.certifier import CASES, certify_sign
    from wilkercert.cli import DEFAULT_N

    out = {}
    for case in CASES:
        ns = [None] if case.n_range is None else list(DEFAULT_N[case.group])
        for n in ns:
            out[(case.id, n)] = certify_sign(case.id, n)
    return out
