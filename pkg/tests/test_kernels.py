import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import encloses, mp_eval, random_dyadics
from wilkercert.enclosure import DomainError, Interval, PiLaurent
from wilkercert.kernels import (
    SCALABLE_FAMILIES,
    ExpressionId,
    TrigPoly,
    best_constant,
    cleared_form,
    cos_enclose,
    eval_cleared,
    eval_expression,
    lemma_bracket_holds,
    limit_at_half_pi,
    limit_at_zero,
    sin_enclose,
    tan_enclose,
)
from wilkercert.kernels.expressions import GAPS_FAMILY, GAPS_FIXED, RATIOS, WILKER_B

HALF_PI_LO = Fraction(3217, 2048)  # just below pi/2


def _all_exprs():
    out = [ExpressionId(g) for g in GAPS_FIXED] + [ExpressionId(r) for r in RATIOS]
    out += [ExpressionId(g, GAPS_FAMILY[g][1]) for g in GAPS_FAMILY]
    out += [ExpressionId("tan-tail-ratio", 2)]
    return out


EXPRS = _all_exprs()


def test_elementary_enclosures_contain_mpmath_1000_points():
    xs = random_dyadics(1000, Fraction(0), HALF_PI_LO, 60, seed=7)
    with mpmath.workprec(320):
        for x in xs:
            X = Interval.from_fraction(x, 96)
            m = mpmath.mpf(x.numerator) / x.denominator
            assert encloses(sin_enclose(X), mpmath.sin(m))
            assert encloses(cos_enclose(X), mpmath.cos(m))
            assert encloses(tan_enclose(X), mpmath.tan(m))


def test_catalog_enclosures_contain_mpmath_1000_points():
    rng = random.Random(11)
    xs = random_dyadics(1000, Fraction(1, 64), HALF_PI_LO, 50, seed=3)
    for x in xs:
        expr = rng.choice(EXPRS)
        iv = eval_expression(expr, Interval.from_fraction(x, 128), 128)
        assert encloses(iv, mp_eval(expr, x)), (expr, x)


def test_wide_interval_encloses_whole_range():
    X = Interval.from_endpoints(Fraction(1, 2), Fraction(3, 4), 64)
    s = sin_enclose(X)
    assert s.lo_fraction() <= Fraction(47942553860420300027, 10**20)
    assert s.hi_fraction() >= Fraction(68163876002333416673, 10**20)


def test_tan_near_singularity_raises():
    near = Interval.from_endpoints(Fraction(1), Fraction(2), 64)
    with pytest.raises(DomainError):
        tan_enclose(near)


@settings(max_examples=60, deadline=None)
@given(st.fractions(Fraction(1, 100), Fraction(3, 2), max_denominator=10**6), st.integers(1, 6))
def test_lemma_bracket_pointwise(x, n):
    assert lemma_bracket_holds(n, Interval.from_fraction(x, 128))


def test_trig_poly_canonical_identities():
    s2 = TrigPoly.monomial(0, 2, 0)
    c2 = TrigPoly.monomial(0, 0, 2)
    assert (s2 + c2).equals(TrigPoly.const(1))
    assert TrigPoly.sin_multiple(2).equals(TrigPoly.monomial(0, 1, 1, 2))
    assert TrigPoly.cos_multiple(2).equals(c2 - s2)


def test_trig_poly_derivative_series():
    p = TrigPoly.monomial(3, 1, 2)
    d = p.derivative()
    assert d.to_series(20) == p.to_series(21).derivative().truncate(20)


@pytest.mark.parametrize("expr", EXPRS, ids=lambda e: e.label())
def test_cleared_form_is_gap_times_multiplier(expr):
    form = cleared_form(expr)
    i, j, k = form.multiplier
    for x in (Fraction(1, 7), Fraction(3, 5), Fraction(7, 5)):
        with mpmath.workprec(320):
            m = mpmath.mpf(x.numerator) / x.denominator
            ref = mp_eval(expr, x) * m**i * mpmath.sin(m) ** j * mpmath.cos(m) ** k
        assert encloses(eval_cleared(expr, Interval.from_fraction(x, 128), 128), ref), x


def test_cleared_form_endpoint_data():
    f = cleared_form(ExpressionId("wilker-sharp-lower"))
    assert f.valuation > 0 and f.leading > 0
    g = cleared_form(ExpressionId("wilker"))
    assert g.leading > 0


def test_limits_of_ratios():
    assert limit_at_zero(ExpressionId("f")) == Fraction(16, 14175)
    assert limit_at_half_pi(ExpressionId("f")) == WILKER_B
    assert limit_at_zero(ExpressionId("wilker-ratio")) == Fraction(8, 45)
    assert limit_at_half_pi(ExpressionId("tan-tail-ratio", 3)) == PiLaurent({-6: 64})


def test_best_constant_sides():
    const, side = best_constant("tan-tail-lower", 2)
    assert const == Fraction(2, 15) and side == 1
    const, side = best_constant("tan-tail-upper", 2)
    assert const == PiLaurent({-4: 16}) and side == -1
    assert "tan-tail-lower" in SCALABLE_FAMILIES
    assert best_constant("wilker-sharp-lower") == (Fraction(16, 14175), 1)
    assert best_constant("wilker-sharp-upper") == (WILKER_B, -1)
    # the x^4 coefficient of the bound is -alpha
    assert best_constant("wilker2-sharp-lower") == (PiLaurent({-2: Fraction(8, 315), -4: Fraction(-32, 45)}), 1)


def test_scaled_expression_moves_gap():
    x = Interval.from_fraction(Fraction(1, 2), 128)
    plain = eval_expression(ExpressionId("tan-tail-lower", 1), x, 128)
    tighter = eval_expression(ExpressionId("tan-tail-lower", 1, Fraction(1001, 1000)), x, 128)
    assert tighter.certainly_lt(plain)


def test_expression_validation():
    with pytest.raises(ValueError):
        ExpressionId("tan-tail-lower")
    with pytest.raises(ValueError):
        ExpressionId("wilker", 3)
    with pytest.raises(KeyError):
        ExpressionId("unknown")
    with pytest.raises(DomainError):
        eval_expression(ExpressionId("wilker"), Interval.from_int(0, 64))
