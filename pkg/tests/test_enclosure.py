from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import encloses, mpf_to_fraction
from wilkercert.enclosure import HALF_PI, PI, TWO_OVER_PI, DomainError, Interval, PiLaurent, TaylorModel, pi_enclosure

fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=10**6)


def iv(lo, hi=None, prec=64):
    return Interval.from_endpoints(Fraction(lo), Fraction(lo if hi is None else hi), prec)


@given(fractions, fractions)
def test_add_mul_contain_exact_results(a, b):
    A, B = Interval.from_fraction(a, 53), Interval.from_fraction(b, 53)
    assert (A + B).contains(a + b)
    assert (A - B).contains(a - b)
    assert (A * B).contains(a * b)
    if b != 0:
        assert (A / B).contains(a / b)


@given(fractions, fractions, fractions)
def test_interval_hull_operations(a, b, c):
    lo, hi = min(a, b), max(a, b)
    X = Interval.from_endpoints(lo, hi, 64)
    Y = Interval.from_fraction(c, 64)
    for v in (lo, hi, (lo + hi) / 2):
        assert (X * Y).contains(v * c)
        assert (X + Y).contains(v + c)
        assert X.square().contains(v * v)


@given(st.integers(1, 12), fractions)
def test_power_contains(n, a):
    assert (Interval.from_fraction(a, 64) ** n).contains(a**n)


def test_outward_rounding_is_strict():
    third = Interval.from_fraction(Fraction(1, 3), 64)
    assert third.lo_fraction() < Fraction(1, 3) < third.hi_fraction()
    assert third.width() < Fraction(1, 2**60)


def test_reciprocal_of_zero_interval_fails():
    with pytest.raises((DomainError, ZeroDivisionError)):
        iv(-1, 1).reciprocal()


def test_sign_and_comparisons():
    assert iv(1, 2).sign() == 1
    assert iv(-2, -1).sign() == -1
    assert iv(-1, 1).sign() == 0
    assert iv(1, 2).certainly_lt(3)
    assert iv(1, 2).certainly_gt(Fraction(1, 2))
    assert not iv(1, 2).certainly_lt(Fraction(3, 2))


def test_intersect_and_hull():
    a, b = iv(0, 2), iv(1, 3)
    assert a.intersect(b).lo_fraction() == 1 and a.intersect(b).hi_fraction() == 2
    assert a.hull(b).lo_fraction() == 0 and a.hull(b).hi_fraction() == 3


@pytest.mark.parametrize("prec", [32, 64, 128, 256, 512, 1024, 2048])
def test_pi_enclosure_contains_pi(prec):
    p = pi_enclosure(prec)
    with mpmath.workprec(prec + 200):
        assert encloses(p, mpmath.pi, slack_bits=prec + 150)
    assert p.width() <= Fraction(1, 2 ** (prec - 4))


def test_pi_enclosures_nest():
    a, b = pi_enclosure(64), pi_enclosure(256)
    assert a.lo_fraction() <= b.lo_fraction() and b.hi_fraction() <= a.hi_fraction()


def test_pilaurent_arithmetic_and_constants():
    b = PiLaurent({-8: 256, -4: Fraction(-128, 45), -2: Fraction(32, 945)})
    printed = (PiLaurent.const(241920) - PiLaurent.pi_power(4, 2688) + PiLaurent.pi_power(6, 32)) / PiLaurent.pi_power(8, 945)
    assert b == printed
    assert TWO_OVER_PI * HALF_PI == PiLaurent.const(1)
    assert (PI**2).terms == {2: 1}
    assert PiLaurent.const(Fraction(3, 4)).is_rational()
    assert b.format() == "32/945*pi^-2 - 128/45*pi^-4 + 256*pi^-8"


def test_pilaurent_enclosure_against_mpmath():
    v = PiLaurent({-8: 256, -4: Fraction(-128, 45), -2: Fraction(32, 945)})
    with mpmath.workprec(300):
        ref = v.evalf(mpmath.pi)
    assert encloses(v.to_interval(128), ref)
    assert str(ref).startswith("0.001209")


@settings(max_examples=40)
@given(st.dictionaries(st.integers(-6, 6), st.fractions(-50, 50, max_denominator=100), max_size=4))
def test_pilaurent_interval_contains_value(terms):
    v = PiLaurent(terms)
    with mpmath.workprec(300):
        assert encloses(v.to_interval(96), v.evalf(mpmath.pi))


def test_taylor_model_sincos_contains_values():
    dom = Interval.from_endpoints(Fraction(-1, 8), Fraction(1, 8), 128)
    x0 = mpmath.mpf(3) / 4
    with mpmath.workprec(300):
        s0 = Interval.from_fraction(mpf_to_fraction(mpmath.sin(mpmath.mpf(3) / 4)), 128)
        c0 = Interval.from_fraction(mpf_to_fraction(mpmath.cos(mpmath.mpf(3) / 4)), 128)
    s0 = s0.hull(s0 + Interval.from_fraction(Fraction(1, 2**200), 128)) - Interval.from_fraction(Fraction(1, 2**201), 128)
    c0 = c0.hull(c0 + Interval.from_fraction(Fraction(1, 2**200), 128)) - Interval.from_fraction(Fraction(1, 2**201), 128)
    s_tm, c_tm = TaylorModel.sincos(s0, c0, 12, dom, 128)
    for k in range(-8, 9):
        h = Fraction(k, 64)
        H = Interval.from_fraction(h, 128)
        with mpmath.workprec(300):
            assert encloses(s_tm.range(H), mpmath.sin(x0 + mpmath.mpf(h.numerator) / h.denominator), 120)
            assert encloses(c_tm.range(H), mpmath.cos(x0 + mpmath.mpf(h.numerator) / h.denominator), 120)


def test_taylor_model_product_and_valuation():
    dom = Interval.from_endpoints(0, Fraction(1, 4), 64)
    t = TaylorModel.linear(0, 8, dom, 64)
    sq = t * t
    assert sq.valuation() == 2
    assert sq.factored_range(2).contains(1)
