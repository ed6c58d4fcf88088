from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wilkercert.arith import (
    BernoulliTable,
    bernoulli_abs_even,
    bernoulli_bound_check,
    bernoulli_bound_precision,
    bernoulli_signed,
    binomial,
    factorial,
)
from wilkercert.enclosure import pi_enclosure


def test_factorial_and_binomial_small():
    assert [factorial(n) for n in range(6)] == [1, 1, 2, 6, 24, 120]
    assert binomial(10, 3) == 120
    with pytest.raises(ValueError):
        binomial(5, 7)


@given(st.integers(1, 60), st.integers(0, 59))
def test_binomial_pascal(n, k):
    k = k % n
    assert binomial(n + 1, k + 1) == binomial(n, k) + binomial(n, k + 1)


def test_bernoulli_first_values():
    assert [bernoulli_abs_even(k) for k in range(1, 7)] == [
        Fraction(1, 6), Fraction(1, 30), Fraction(1, 42), Fraction(1, 30), Fraction(5, 66), Fraction(691, 2730)]


def test_bernoulli_matches_mpmath():
    for k in range(1, 41):
        ref = mpmath.bernfrac(2 * k)
        assert bernoulli_abs_even(k) == abs(Fraction(int(ref[0]), int(ref[1])))


def test_bernoulli_signs():
    assert bernoulli_signed(0) == 1
    assert bernoulli_signed(1) == Fraction(-1, 2)
    assert bernoulli_signed(3) == 0
    for m in range(2, 40, 2):
        assert (bernoulli_signed(m) > 0) == (m % 4 == 2)


def test_bernoulli_recurrence_closure_to_120():
    for m in range(1, 121):
        total = sum(binomial(m + 1, j) * bernoulli_signed(j) for j in range(m + 1))
        assert total == 0, m


def test_table_extends_in_steps():
    table = BernoulliTable()
    assert table.abs_even(3) == Fraction(1, 42)
    assert table.max_index == 6
    assert table.values(8)[-1] == bernoulli_abs_even(8)


def test_bernoulli_rejects_zero_index():
    with pytest.raises(ValueError):
        bernoulli_abs_even(0)


def test_bracket_holds_to_60():
    for k in range(1, 61):
        assert bernoulli_bound_precision(k) is not None, k


def test_bracket_coarse_pi_is_undecided_not_false_claim():
    # at 64 bits the relative gap 2^(-2k) is invisible for large k
    assert bernoulli_bound_check(40, pi_enclosure(64)) is False
    assert bernoulli_bound_check(40, pi_enclosure(256)) is True


@settings(max_examples=30)
@given(st.integers(1, 80))
def test_bracket_property(k):
    prec = bernoulli_bound_precision(k, 64, 1024)
    assert prec is not None and prec >= 64
