"""Coefficient laws of the Wilker and Huygens expansions.

With t_k the tangent coefficients,

    (sin x / x)^2 + tan x / x = 2 + sum_{k>=3} c_k x^(2k-2),
    2 sin x / x + tan x / x   = 3 + sum_{k>=3} d_k x^(2k-2),

because the k = 1, 2 terms cancel to the constants.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import bernoulli_abs_even, factorial
from .series import tan_coeff

__all__ = ["wilker_coeff", "huygens_coeff", "wilker2_family_coeff", "wilker2_family_tail"]


def wilker_coeff(k: int) -> Fraction:
    """c_k = (-1)^(k-1) 2^(2k-1) / (2k)! + t_k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Fraction((-1) ** (k - 1) * 2 ** (2 * k - 1), factorial(2 * k)) + tan_coeff(k)


def huygens_coeff(k: int) -> Fraction:
    """d_k = 2 (-1)^(k-1) / (2k-1)! + t_k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Fraction(2 * (-1) ** (k - 1), factorial(2 * k - 1)) + tan_coeff(k)


def wilker2_family_coeff(k: int) -> Fraction:
    """(k-1) 2^(2k+1) |B_2k| / (2k)!, the x^(2k) coefficient in the reciprocal Wilker bound."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Fraction((k - 1) * 2 ** (2 * k + 1)) * bernoulli_abs_even(k) / factorial(2 * k)


def wilker2_family_tail(n: int) -> Fraction:
    """n 2^(2n+3) |B_(2n+2)| / (2n+2)!, the x^(2n+1) tan x coefficient."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(n * 2 ** (2 * n + 3)) * bernoulli_abs_even(n + 1) / factorial(2 * n + 2)
