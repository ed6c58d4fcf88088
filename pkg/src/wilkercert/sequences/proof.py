"""Proof sequences: majorants whose first term is compared with a pi-dependent threshold.

Each value is an exact pi-Laurent expression, so printed closed forms such as
a_3 = 1/127 + pi^8/80640 + pi^12/62208000 can be compared exactly, and
decimal values come from certified enclosures.

y_N has three readings.  The definition as printed uses (2/pi)^(4N+2); the
rearrangement it comes from yields (pi/2)^(4N+2) instead; and the printed
value of y_1, pi^4/48384, matches neither.  All three are available, the
derived one is the default.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..arith import factorial
from ..enclosure import Interval, PiLaurent

SEQUENCE_IDS = ("a_n", "b_N", "x_n", "y_N", "A_n")
Y_VARIANTS = ("derived", "printed-definition", "printed-value")

_MIN_INDEX = {"a_n": 3, "b_N": 2, "x_n": 2, "y_N": 1, "A_n": 6}


def _half_pi_power(p: int, coeff) -> PiLaurent:
    """coeff * (pi/2)^p."""
    return PiLaurent({p: Fraction(coeff) / Fraction(2) ** p})


def _check(seq: str, index: int) -> None:
    if seq not in _MIN_INDEX:
        raise ValueError(f"unknown sequence {seq!r}")
    if index < _MIN_INDEX[seq]:
        raise ValueError(f"{seq} is defined for index >= {_MIN_INDEX[seq]}")


def appendix_S(n: int) -> int:
    return 16 * n**7 - 56 * n**6 + 268 * n**5 - 70412 * n**3 + 252112 * n**2 + 909099 * n - 1556415


def appendix_A_numerator(n: int) -> int:
    return 68040 * n**4 + 476280 * n**3 + 413910 * n**2 - 1173690 * n - 1179360


def sequence_exact(seq: str, index: int, variant: str = "derived"):
    """Exact value: a PiLaurent, or a Fraction for the pi-free A_n."""
    _check(seq, index)
    n = index
    if seq == "a_n":
        return (_half_pi_power(2 * n + 2, Fraction(2 ** (2 * n + 1), factorial(2 * n + 2)))
                + Fraction(1, 2 ** (2 * n + 1) - 1)
                + _half_pi_power(2 * n + 6, Fraction(2 ** (2 * n + 2), factorial(2 * n + 4)) * Fraction(14, 15)))
    if seq == "b_N":
        return (_half_pi_power(4 * n + 2, Fraction(2 ** (4 * n + 1), factorial(4 * n + 2)))
                + Fraction(1, 2 ** (4 * n + 1) - 1))
    if seq == "x_n":
        return (_half_pi_power(2 * n + 2, Fraction(1, factorial(2 * n + 1)))
                + Fraction(1, 2 ** (2 * n + 2) - 2)
                + _half_pi_power(2 * n + 6, Fraction(7, 15 * factorial(2 * n + 3))))
    if seq == "y_N":
        tail = Fraction(1, 2 ** (4 * n + 2) - 2)
        if variant == "derived":
            return _half_pi_power(4 * n + 2, Fraction(1, factorial(4 * n + 1))) + tail
        if variant == "printed-definition":
            p = 4 * n + 2
            return PiLaurent({-p: Fraction(2**p, factorial(4 * n + 1))}) + tail
        if variant == "printed-value":
            if n != 1:
                raise ValueError("the printed value exists only for y_1")
            return PiLaurent({4: Fraction(1, 48384)})
        raise ValueError(f"unknown y_N variant {variant!r}")
    return Fraction(appendix_A_numerator(n), appendix_S(n))


def threshold_exact(seq: str, index: int | None = None):
    """The quantity each sequence must stay below; for A_n it is (9/4)^n."""
    if seq == "a_n":
        return _half_pi_power(2, Fraction(14, 15)) - 2
    if seq == "b_N":
        return _half_pi_power(2, 1) - 2
    if seq == "x_n":
        return _half_pi_power(2, Fraction(7, 15)) - 1
    if seq == "y_N":
        return PiLaurent({2: Fraction(1, 8)}) - 1
    if seq == "A_n":
        if index is None:
            raise ValueError("A_n threshold depends on n")
        return Fraction(9, 4) ** index
    raise ValueError(f"unknown sequence {seq!r}")


PRINTED_CLOSED_FORMS = {
    ("a_n", 3): PiLaurent({0: Fraction(1, 127), 8: Fraction(1, 80640), 12: Fraction(1, 62208000)}),
    ("b_N", 2): PiLaurent({0: Fraction(1, 511), 10: Fraction(1, 7257600)}),
    ("x_n", 2): PiLaurent({0: Fraction(1, 62), 6: Fraction(1, 7680), 10: Fraction(1, 11059200)}),
    ("y_N", 1): PiLaurent({4: Fraction(1, 48384)}),
}


def _enclose(v, prec: int) -> Interval:
    return Interval.coerce(v, prec)


def proof_sequence_value(seq: str, index: int, precision: int = 64, variant: str = "derived"):
    """Enclosure of the sequence value (a Fraction when the value is pi-free)."""
    v = sequence_exact(seq, index, variant)
    if isinstance(v, Fraction):
        return v
    if v.is_rational():
        return v.rational_value()
    return _enclose(v, precision)


@dataclass(frozen=True)
class SequenceComparison:
    seq: str
    index: int
    variant: str
    value: Interval
    threshold: Interval
    certified: bool
    precision: int


def compare_with_threshold(seq: str, index: int, precision: int = 64, variant: str = "derived",
                           max_precision: int = 2048) -> SequenceComparison:
    """Certify value < threshold, raising the precision while undecided."""
    v = sequence_exact(seq, index, variant)
    t = threshold_exact(seq, index)
    prec = precision
    while True:
        vi, ti = _enclose(v, prec), _enclose(t, prec)
        ok = vi.certainly_lt(ti)
        if ok or vi.certainly_gt(ti) or prec >= max_precision:
            return SequenceComparison(seq, index, variant, vi, ti, ok, prec)
        prec *= 2


def is_decreasing(seq: str, start: int, stop: int, variant: str = "derived", precision: int = 128) -> bool:
    """Certify strict decrease of consecutive terms for indices start..stop.

    This is a finite-range check only.
    """
    prev = sequence_exact(seq, start, variant)
    for idx in range(start + 1, stop + 1):
        cur = sequence_exact(seq, idx, variant)
        diff = prev - cur
        if isinstance(diff, Fraction):
            ok = diff > 0
        else:
            prec, ok = precision, False
            while prec <= 4096:
                iv = _enclose(diff, prec)
                if iv.sign():
                    ok = iv.sign() > 0
                    break
                prec *= 2
        if not ok:
            return False
        prev = cur
    return True
