"""Coefficient claims behind the Wilker and Huygens families, and the ratio lemmas.

Left claims compare exact rationals.  Right claims involve a power of 2/pi and
are certified with a pi enclosure whose precision is raised until the strict
comparison is decided (or a cap is hit, in which case the answer is False).
"""

from __future__ import annotations

from fractions import Fraction

from ..coeffs import huygens_coeff, wilker_coeff
from ..enclosure import Interval, PiLaurent, pi_enclosure
from ..series import tan_coeff

CLAIM_FAMILIES = ("wilker-left", "wilker-right", "huygens-left", "huygens-right")

_PREC_CAP = 4096


def _coeff_law(family: str):
    return wilker_coeff if family.startswith("wilker") else huygens_coeff


def claim_min_index(family: str) -> int:
    """Smallest admissible n (left claims) or N (right claims)."""
    return {"wilker-left": 3, "wilker-right": 2, "huygens-left": 2, "huygens-right": 1}[family]


def claim_difference(family: str, n: int, k: int):
    """Exact right side minus left side of the claim, as a rational or pi-Laurent value.

    For the left claims this is c_k - c_(n+1) t_(k-n); for the right claims,
    (2/pi)^(4N) t_(k-2N) - c_k with n read as N.  The claim is that it is positive.
    """
    if family not in CLAIM_FAMILIES:
        raise ValueError(f"unknown claim family {family!r}")
    law = _coeff_law(family)
    if family.endswith("left"):
        return law(k) - law(n + 1) * tan_coeff(k - n)
    scale = PiLaurent({-4 * n: Fraction(2) ** (4 * n)})
    return scale * tan_coeff(k - 2 * n) - law(k)


def _check_index(family: str, n: int, k: int) -> None:
    if family not in CLAIM_FAMILIES:
        raise ValueError(f"unknown claim family {family!r}")
    if n < claim_min_index(family):
        raise ValueError(f"{family} needs n >= {claim_min_index(family)}")
    lowest = n + 2 if family.endswith("left") else 2 * n + 1
    if k < lowest:
        raise ValueError(f"{family} needs k >= {lowest}")


def _certainly_positive(value, prec: int) -> bool:
    if not isinstance(value, PiLaurent):
        return value > 0
    if value.is_rational():
        return value.rational_value() > 0
    while prec <= _PREC_CAP:
        iv = value.to_interval(prec)
        if iv.sign():
            return iv.sign() > 0
        prec *= 2
    return False


def claim_check(family: str, n: int, k: int, pi: Interval | None = None) -> bool:
    """Certify the strict coefficient inequality of a claim family.

    ``pi`` fixes the starting precision for the right claims; the result is
    True only when the comparison is certified.
    """
    _check_index(family, n, k)
    diff = claim_difference(family, n, k)
    if family.endswith("left"):
        return diff > 0
    prec = pi.prec if pi is not None else 64
    if pi is not None and not isinstance(diff, Fraction):
        # evaluate with the caller's enclosure first; escalate only if undecided
        iv = _eval_with_pi(diff, pi)
        if iv.sign():
            return iv.sign() > 0
    return _certainly_positive(diff, prec)


def _eval_with_pi(value: PiLaurent, pi: Interval) -> Interval:
    total = Interval.from_int(0, pi.prec)
    for p, c in value.terms.items():
        term = (pi**p) if p >= 0 else (pi ** (-p)).reciprocal()
        total = total + term * Interval.from_fraction(c, pi.prec + 16)
    return total


def claim_boundary(family: str, n: int) -> Fraction:
    """The left-claim difference at k = n + 1, which vanishes identically."""
    if not family.endswith("left"):
        raise ValueError("only the left claims have a vanishing boundary term")
    return claim_difference(family, n, n + 1)


# -- ratio lemmas ------------------------------------------------------------


def _bernoulli_bound(j: int, upper: bool) -> PiLaurent:
    """Bound of t_j from 2/((2pi)^(2j)(1-2^(-2j))) < |B_2j|/(2j)! < 2/((2pi)^(2j)(1-2^(1-2j)))."""
    factor = 1 - Fraction(2) ** ((1 if upper else 0) - 2 * j)
    coeff = Fraction(2**(2 * j) * (2**(2 * j) - 1) * 2) / (Fraction(2) ** (2 * j) * factor)
    return PiLaurent({-2 * j: coeff})


def ratio1_bound_ratio(k: int) -> PiLaurent:
    """Upper bound of t_(k+1)/t_k from the Bernoulli bracket (a multiple of 1/pi^2)."""
    return _bernoulli_bound(k + 1, True) / _bernoulli_bound(k, False)


def ratio1_display(k: int) -> PiLaurent:
    """2(4^k-2)(4*4^k-1) / (pi^2 (4^k-1)(2*4^k-1))."""
    X = 4**k
    return PiLaurent({-2: Fraction(2 * (X - 2) * (4 * X - 1), (X - 1) * (2 * X - 1))})


def ratio2_bound_ratio(k: int, N: int) -> PiLaurent:
    """Lower bound of t_(j+1)/t_j, j = k - 2N, from the Bernoulli bracket."""
    j = k - 2 * N
    return _bernoulli_bound(j + 1, False) / _bernoulli_bound(j, True)


def ratio2_display(k: int, N: int) -> PiLaurent:
    """(16^(k+N+1) - (8*256^N + 64^N) 4^(k+1) + 8*1024^N) / (pi^2 (4^k-16^N)(4^(k+1)-16^N))."""
    num = 16 ** (k + N + 1) - (8 * 256**N + 64**N) * 4 ** (k + 1) + 8 * 1024**N
    den = (4**k - 16**N) * (4 ** (k + 1) - 16**N)
    return PiLaurent({-2: Fraction(num, den)})


def ratio2_reduction(k: int, N: int) -> dict[str, bool]:
    """The exact integer steps that show the displayed fraction exceeds 1 once pi^2 < 10.

    The inner factor is increasing in k, so its value at k = 2N+1 bounds it
    from below.  That value is 32*256^N - 110*16^N - 4*64^N; the printed
    value 224*256^N - 590*16^N - 4*64^N is reported separately.
    """
    X, M = 4**k, 16**N
    lhs = 16 ** (k + N + 1) - (8 * 256**N + 64**N) * 4 ** (k + 1) + 8 * 1024**N - 10 * (X - M) * (4 * X - M)
    inner = (4 ** (2 * N + 2) - 40) * X + 50 * M - 32 * 256**N - 4 * 64**N
    tail = 8 * 1024**N - 10 * 256**N
    inner_base = (4 ** (2 * N + 2) - 40) * 4 ** (2 * N + 1) + 50 * M - 32 * 256**N - 4 * 64**N
    printed_base = 224 * 256**N - 590 * M - 4 * 64**N
    return {
        "expansion": lhs == inner * X + tail,
        "inner_monotone": inner >= inner_base,
        "inner_base_closed_form": inner_base == 32 * 256**N - 110 * M - 4 * 64**N,
        "inner_base_positive": inner_base > 0,
        "tail_positive": tail > 0,
        "total_positive": lhs > 0,
        "printed_base_positive": printed_base > 0,
        "printed_base_identity": inner_base == printed_base,
    }


RATIO2_PROOF_STEPS = ("expansion", "inner_monotone", "inner_base_closed_form", "inner_base_positive",
                      "tail_positive", "total_positive")


def _pi_squared_below_ten(pi: Interval) -> bool:
    prec = pi.prec
    while prec <= _PREC_CAP:
        if (pi * pi).certainly_lt(10):
            return True
        prec *= 2
        pi = pi_enclosure(prec)
    return False


def ratio_mono_check(which: str, k: int, N: int = 1, pi: Interval | None = None) -> bool:
    """Certify the displayed ratio inequality.

    ratio1: 2(4^k-2)(4*4^k-1) < pi^2 (4^k-1)(2*4^k-1), with a pi enclosure.
    ratio2: the displayed fraction exceeds 1, through pi^2 < 10 and the integer steps.
    """
    if k < 2 * N + 1:
        raise ValueError("k must be >= 2N + 1")
    pi = pi if pi is not None else pi_enclosure(64)
    if which == "ratio1":
        X = 4**k
        lhs = 2 * (X - 2) * (4 * X - 1)
        rhs = (X - 1) * (2 * X - 1)
        prec = pi.prec
        while prec <= _PREC_CAP:
            if (pi * pi * rhs).certainly_gt(lhs):
                return True
            prec *= 2
            pi = pi_enclosure(prec)
        return False
    if which == "ratio2":
        if N < 1:
            raise ValueError("ratio2 needs N >= 1")
        steps = ratio2_reduction(k, N)
        return _pi_squared_below_ten(pi) and all(steps[name] for name in RATIO2_PROOF_STEPS)
    raise ValueError(f"unknown ratio {which!r}")


def ratio_display_report(k: int, N: int = 1) -> dict[str, object]:
    """Compare each displayed ratio with the ratio of Bernoulli bounds it claims to equal.

    The bounds are multiples of 1/pi^2, so both sides reduce to rationals.
    The last two entries report whether the true ratio of consecutive tangent
    coefficients is above or below one (4/pi^2 in the limit).
    """
    r1b, r1d = ratio1_bound_ratio(k), ratio1_display(k)
    r2b, r2d = ratio2_bound_ratio(k, N), ratio2_display(k, N)
    j = k - 2 * N
    return {
        "ratio1_display_equals_bound": r1b == r1d,
        "ratio1_bound_rational": r1b.terms.get(-2),
        "ratio1_display_rational": r1d.terms.get(-2),
        "ratio2_display_equals_bound": r2b == r2d,
        "ratio2_bound_rational": r2b.terms.get(-2),
        "ratio2_display_rational": r2d.terms.get(-2),
        "ratio1_bound_below_one": r1b.to_interval(64).certainly_lt(1),
        "tan_ratio_k_below_one": tan_coeff(k + 1) < tan_coeff(k),
        "tan_ratio_j_below_one": tan_coeff(j + 1) < tan_coeff(j),
    }
