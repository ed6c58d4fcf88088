"""Rigorous enclosure of pi from Machin's formula pi = 16 atan(1/5) - 4 atan(1/239)."""

from __future__ import annotations

import threading

from .interval import Interval

_CACHE: dict[int, Interval] = {}
_LOCK = threading.Lock()


def _atan_inv(m: int, bits: int) -> tuple[int, int]:
    """Fixed-point bounds (lo, hi), scaled by 2**bits, on atan(1/m) for integer m >= 2.

    Partial sums are truncated term by term in the safe direction, and the
    alternating tail is bounded by the first omitted term.
    """
    one = 1 << bits
    lo = hi = 0
    power = m  # m^(2j+1)
    j = 0
    m2 = m * m
    while True:
        den = (2 * j + 1) * power
        t_floor = one // den
        t_ceil = -((-one) // den)
        if t_ceil <= 1:
            # remaining tail magnitude below one unit in the last place
            return lo - 1, hi + 1
        if j % 2 == 0:
            lo += t_floor
            hi += t_ceil
        else:
            lo -= t_ceil
            hi -= t_floor
        j += 1
        power *= m2


def pi_enclosure(precision_bits: int) -> Interval:
    """Interval of width <= 2**(4 - precision_bits) containing pi."""
    if precision_bits < 8:
        raise ValueError("precision_bits must be >= 8")
    hit = _CACHE.get(precision_bits)
    if hit is not None:
        return hit
    guard = precision_bits + 16
    a_lo, a_hi = _atan_inv(5, guard)
    b_lo, b_hi = _atan_inv(239, guard)
    lo = 16 * a_lo - 4 * b_hi
    hi = 16 * a_hi - 4 * b_lo
    iv = Interval(lo, hi, -guard, precision_bits)
    with _LOCK:
        _CACHE.setdefault(precision_bits, iv)
    return _CACHE[precision_bits]
