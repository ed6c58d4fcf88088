from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wilkercert.coeffs import huygens_coeff, wilker2_family_coeff, wilker2_family_tail, wilker_coeff
from wilkercert.series import (
    RATIO_IDS,
    PowerSeries,
    lemma_ratio_series,
    ps_elementary,
    ratio_series,
    ratio_taylor,
    series_tail_bound,
    tan_coeff,
)

WILKER_RATIO_DISPLAYED = [Fraction(8, 45), Fraction(-8, 945), Fraction(16, 14175), Fraction(8, 467775),
                          Fraction(3184, 638512875), Fraction(272, 638512875), Fraction(7264, 162820783125)]

ORDER = 44


def _blocks():
    s = ps_elementary("sin", ORDER)
    t = ps_elementary("tan", ORDER)
    return s.shift_valuation(-1), t.shift_valuation(-1)


def test_wilker_ratio_reproduces_displayed_expansion():
    assert ratio_taylor("wilker-ratio", 14) == WILKER_RATIO_DISPLAYED


def test_ratio_leading_terms():
    assert ratio_taylor("wilker2-ratio", 6) == [Fraction(2, 45), Fraction(-2, 315), Fraction(-4, 1575)]
    assert ratio_taylor("huygens-ratio", 6) == [Fraction(3, 20), Fraction(1, 280), Fraction(23, 33600)]
    assert ratio_taylor("huygens2-ratio", 6) == [Fraction(1, 60), Fraction(-1, 280), Fraction(-83, 100800)]


@pytest.mark.parametrize("expr", RATIO_IDS)
def test_ratio_series_are_even(expr):
    ps = ratio_series(expr, 20)
    assert all(ps[k] == 0 for k in range(1, 21, 2))


def test_tan_coefficients_against_series_division():
    t = ps_elementary("tan", 2 * 20)
    for k in range(1, 21):
        assert tan_coeff(k) == t[2 * k - 1]


def test_tan_coefficients_against_mpmath_taylor():
    with mpmath.workprec(400):
        ref = mpmath.taylor(mpmath.tan, 0, 15)
    for k in range(1, 8):
        assert abs(float(tan_coeff(k)) - float(ref[2 * k - 1])) < 1e-15


def test_wilker_and_huygens_laws_against_series():
    s_x, t_x = _blocks()
    wilker = s_x * s_x + t_x
    huygens = s_x * 2 + t_x
    for k in range(1, 21):
        assert wilker_coeff(k) == wilker[2 * k - 2], k
        assert huygens_coeff(k) == huygens[2 * k - 2], k


def test_reciprocal_wilker_law_against_series():
    s_x, t_x = _blocks()
    w2 = (1 / s_x) ** 2 + 1 / t_x
    for k in range(2, 15):
        assert wilker2_family_coeff(k) == w2[2 * k], k
    assert wilker2_family_tail(1) == 32 * Fraction(1, 30) / 24 == Fraction(2, 45)


def test_lemma_ratio_series_starts_at_next_tangent_coefficient():
    for n in range(1, 6):
        assert lemma_ratio_series(n, 4)[0] == tan_coeff(n + 1)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(-20, 20, max_denominator=50), min_size=1, max_size=12),
       st.lists(st.fractions(-20, 20, max_denominator=50), min_size=1, max_size=12))
def test_series_mul_div_round_trip(a, b):
    if b[0] == 0:
        b[0] = Fraction(1)
    order = max(len(a), len(b)) + 3
    A = PowerSeries(a + [0] * (order + 1 - len(a)))
    B = PowerSeries(b + [0] * (order + 1 - len(b)))
    assert ((A * B) / B).truncate(order) == A.truncate(order)
    assert ((A / B) * B).truncate(order) == A.truncate(order)


@settings(max_examples=25, deadline=None)
@given(st.fractions(Fraction(-3, 2), Fraction(3, 2), max_denominator=64))
def test_sin_cos_identity_round_trip(a):
    s, c = ps_elementary("sin", 24, a), ps_elementary("cos", 24, a)
    one = (s * s + c * c).truncate(24)
    assert one[0] == 1 and all(one[k] == 0 for k in range(1, 25))


def test_series_evaluation_matches_mpmath():
    ps = ratio_series("wilker-ratio", 40)
    x = Fraction(1, 3)
    approx = sum(ps[k] * x**k for k in range(41))
    with mpmath.workprec(200):
        X = mpmath.mpf(1) / 3
        ref = ((mpmath.sin(X) / X) ** 2 + mpmath.tan(X) / X - 2) / (X**3 * mpmath.tan(X))
    assert abs(float(approx) - float(ref)) < 1e-15


def test_tail_bound_dominates_remainder():
    order = 15
    bound = series_tail_bound("tan", order, Fraction(1))
    t = ps_elementary("tan", order)
    with mpmath.workprec(200):
        for x in (Fraction(1, 4), Fraction(1, 2), Fraction(1)):
            X = mpmath.mpf(x.numerator) / x.denominator
            rem = abs(mpmath.tan(X) - sum(mpmath.mpf(t[k].numerator) / t[k].denominator * X**k for k in range(order + 1)))
            assert rem <= bound * X ** (order + 1)


def test_unknown_ratio_rejected():
    with pytest.raises(ValueError):
        ratio_taylor("nope", 6)
