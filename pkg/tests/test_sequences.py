from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wilkercert.enclosure import pi_enclosure
from wilkercert.sequences import (
    CLAIM_FAMILIES,
    PRINTED_CLOSED_FORMS,
    ExpPoly,
    appendix_range_check,
    claim_boundary,
    claim_check,
    claim_difference,
    compare_with_threshold,
    exp_poly_checks,
    huygens_kernel_positive,
    is_decreasing,
    kernel_identity_checks,
    ratio2_reduction,
    ratio_display_report,
    ratio_mono_check,
    sequence_exact,
)
from wilkercert.sequences.identities import A_value, B_DIRECT, B_SHIFTED, P_CORRECTED, P_PRINTED, u_coefficient

# ---- ExpPoly ------------------------------------------------------------------

n = ExpPoly.poly([0, 1])


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=5), st.integers(0, 12), st.integers(0, 6))
def test_exppoly_shift_matches_evaluation(coeffs, k, h):
    p = ExpPoly.poly(coeffs, 4) + ExpPoly.poly(coeffs[::-1], 9)
    assert p.shift(h)(k) == p(k + h)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=5), st.lists(st.integers(-50, 50), min_size=1, max_size=5),
       st.integers(0, 15))
def test_exppoly_ring_operations(a, b, k):
    A, B = ExpPoly.poly(a, 4), ExpPoly.poly(b, 9) + ExpPoly.const(3)
    assert (A * B)(k) == A(k) * B(k)
    assert (A - B)(k) == A(k) - B(k)


def test_exppoly_shifted_poly_expands_in_n_minus_h():
    p = ExpPoly.shifted_poly([1, 2, 3], 5)  # 1 + 2 (n-5) + 3 (n-5)^2
    assert p(7) == 1 + 2 * 2 + 3 * 4


def test_exppoly_base_products():
    e = ExpPoly.poly([1], 4) * ExpPoly.poly([1], 16)
    assert e == ExpPoly.poly([1], 64)


# ---- identities -------------------------------------------------------------------


def _checks():
    return {c.name: c for c in exp_poly_checks()}


def test_only_the_printed_u_ratio_fails():
    failed = [c.name for c in exp_poly_checks() if not c.ok]
    assert failed == ["u-ratio (printed p_n)"]


def test_corrected_p_differs_by_1890_4n():
    diff = P_CORRECTED - P_PRINTED
    assert diff == ExpPoly.poly([1890], 4)


def test_u_terms_are_the_taylor_coefficients_of_g():
    from wilkercert.sequences.kernel_identities import g_direct

    g = g_direct().to_series(45)
    assert all(g[k] == 0 for k in range(13))
    assert (g[13], g[15], g[17]) == (Fraction(16, 495), Fraction(496, 61425), Fraction(-64, 26325))
    for m in range(9, 22):
        assert g[2 * m + 1] == (-1) ** (m - 1) * u_coefficient(m), m


def test_appendix_b_identity_and_positivity():
    assert B_SHIFTED == B_DIRECT
    assert appendix_range_check("B", 100)


def test_appendix_a_reductions():
    assert appendix_range_check("A", 20)
    for N in range(1, 6):
        steps = ratio2_reduction(2 * N + 1, N)
        assert steps["inner_base_closed_form"] and steps["total_positive"]
        assert not steps["printed_base_identity"]


def test_appendix_c_base_case():
    assert A_value(6) == Fraction(3138660, 27229)
    assert Fraction(9, 4) ** 6 == Fraction(531441, 4096)
    assert A_value(6) < Fraction(9, 4) ** 6
    assert appendix_range_check("C1", 100)
    assert appendix_range_check("C2", 100)
    assert huygens_kernel_positive(100)


def test_appendix_range_arguments_validated():
    with pytest.raises(ValueError):
        appendix_range_check("B", 5)
    with pytest.raises(ValueError):
        appendix_range_check("Z", 10)


def test_kernel_identities():
    results = kernel_identity_checks(40)
    assert len(results) == 7
    assert all(c.ok for c in results), [c.name for c in results if not c.ok]


# ---- claims ------------------------------------------------------------------------


@pytest.mark.parametrize("family", CLAIM_FAMILIES)
def test_claims_hold_on_a_finite_range(family):
    from wilkercert.sequences.claims import claim_min_index

    lo = claim_min_index(family)
    for m in range(lo, lo + 4):
        start = m + 2 if family.endswith("left") else 2 * m + 1
        for k in range(start, start + 12):
            assert claim_check(family, m, k), (family, m, k)


def test_left_claim_boundary_vanishes():
    for m in range(3, 10):
        assert claim_boundary("wilker-left", m) == 0
    for m in range(2, 10):
        assert claim_boundary("huygens-left", m) == 0


def test_claim_difference_right_is_pi_dependent():
    d = claim_difference("wilker-right", 2, 5)
    assert not d.is_rational()
    assert claim_check("wilker-right", 2, 5, pi=pi_enclosure(32))


def test_claim_index_validation():
    with pytest.raises(ValueError):
        claim_check("wilker-left", 2, 5)
    with pytest.raises(ValueError):
        claim_check("wilker-left", 3, 4)


def test_ratio_lemmas():
    for k in range(3, 15):
        assert ratio_mono_check("ratio1", k)
    for N in range(1, 5):
        for k in range(2 * N + 1, 2 * N + 8):
            assert ratio_mono_check("ratio2", k, N)


def test_displayed_ratios_are_not_the_bernoulli_bound_ratios():
    r = ratio_display_report(5, 1)
    assert not r["ratio1_display_equals_bound"]
    assert r["ratio1_display_rational"] == Fraction(2790060, 698027)
    assert r["ratio1_bound_rational"] == Fraction(8190, 2047)
    assert not r["ratio2_display_equals_bound"]
    # consecutive tangent coefficients decrease (ratio tends to 4/pi^2)
    assert r["tan_ratio_k_below_one"] and r["tan_ratio_j_below_one"]


# ---- proof sequences --------------------------------------------------------------


@pytest.mark.parametrize("seq,idx,value,threshold,variant", [
    ("a_n", 3, "0.140397", "0.302907", "derived"),
    ("b_N", 2, "0.0148603", "0.467401", "derived"),
    ("x_n", 2, "0.149777", "0.151453", "derived"),
    ("y_N", 1, "0.00201325", "0.233700", "printed-value"),
])
def test_sequence_first_terms(seq, idx, value, threshold, variant):
    c = compare_with_threshold(seq, idx, variant=variant)
    assert c.certified
    assert str(float(c.value.mid())).startswith(value)
    assert str(float(c.threshold.mid())).startswith(threshold)


def test_printed_closed_forms():
    for key in (("a_n", 3), ("b_N", 2), ("x_n", 2)):
        assert sequence_exact(*key) == PRINTED_CLOSED_FORMS[key]
    assert sequence_exact("y_N", 1, "printed-value") == PRINTED_CLOSED_FORMS[("y_N", 1)]
    assert sequence_exact("y_N", 1) != PRINTED_CLOSED_FORMS[("y_N", 1)]


def test_all_y_readings_stay_below_threshold():
    for v in ("derived", "printed-definition", "printed-value"):
        assert compare_with_threshold("y_N", 1, variant=v).certified


def test_sequences_decrease():
    assert is_decreasing("a_n", 3, 30)
    assert is_decreasing("b_N", 2, 30)
    assert is_decreasing("x_n", 2, 30)
    assert is_decreasing("y_N", 1, 30)


def test_closed_form_value_against_mpmath():
    v = sequence_exact("a_n", 3)
    with mpmath.workprec(200):
        ref = 1 / mpmath.mpf(127) + mpmath.pi**8 / 80640 + mpmath.pi**12 / 62208000
        assert abs(v.evalf(mpmath.pi) - ref) < mpmath.mpf(2) ** -180


def test_unknown_sequence():
    with pytest.raises(ValueError):
        sequence_exact("z_n", 3)
    with pytest.raises(ValueError):
        sequence_exact("a_n", 1)
