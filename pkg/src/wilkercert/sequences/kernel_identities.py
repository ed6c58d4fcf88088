"""Exact checks that the kernels g and G are what the monotonicity arguments claim.

f' = g / (945 x^10 sin^2 x) and F' = G / (420 x^8 sin^3 x) are checked as
identities of trigonometric polynomials (decidable through the canonical
form).  The multiple-angle rewrites are checked the same way, and the series
expansions in u_n and U_n are compared coefficient by coefficient.
"""

from __future__ import annotations

from fractions import Fraction

from ..kernels import ExpressionId, TrigPoly, symbolic_form
from ..series import PowerSeries
from .identities import CheckResult, U_coefficient, u_coefficient

X = TrigPoly.monomial(1, 0, 0)
S = TrigPoly.monomial(0, 1, 0)
C = TrigPoly.monomial(0, 0, 1)
SIN2, SIN3, SIN4 = TrigPoly.sin_multiple(2), TrigPoly.sin_multiple(3), TrigPoly.sin_multiple(4)
COS2, COS3, COS4 = TrigPoly.cos_multiple(2), TrigPoly.cos_multiple(3), TrigPoly.cos_multiple(4)


def _k(v):
    return TrigPoly.const(v)


def g_direct() -> TrigPoly:
    return (6615 * X**2 * SIN2 - 8505 * S**3 * C - 8505 * X + 1890 * X**3 + 10395 * X * C**2
            - 1890 * X * C**4 + 672 * X**5 * S**2 - 16 * X**7 * S**2)


def g_multiple_angle() -> TrigPoly:
    q = Fraction
    return (6615 * X**2 * SIN2 - 8505 * (SIN2 * q(1, 4) - SIN4 * q(1, 8)) - 8505 * X + 1890 * X**3
            + q(10395, 2) * X * (_k(1) + COS2) - 1890 * X * (COS4 * q(1, 8) + COS2 * q(1, 2) + _k(q(3, 8)))
            + 336 * X**5 * (_k(1) - COS2) - 8 * X**7 * (_k(1) - COS2))


def G_direct() -> TrigPoly:
    return (2520 * X * SIN2 + (2520 * X - 3 * X**5 + 28 * X**3) * S * C**2
            + (3 * X**5 - 1260 * X - 28 * X**3) * S + (840 * X**2 - _k(8820)) * C
            + 840 * X**2 * C**2 + 8820 * C**3 + 840 * X**2)


def G_multiple_angle() -> TrigPoly:
    q = Fraction
    return (2520 * X * SIN2 + (2520 * X - 3 * X**5 + 28 * X**3) * (S * q(1, 4) + SIN3 * q(1, 4))
            + (3 * X**5 - 1260 * X - 28 * X**3) * S + (840 * X**2 - _k(8820)) * C
            + 420 * X**2 * (_k(1) + COS2) + 8820 * (COS3 * q(1, 4) + C * q(3, 4)) + 840 * X**2)


def _derivative_matches(expr_id: str, factor: int, mono: tuple[int, int, int], kernel: TrigPoly) -> bool:
    """(expr)' * factor * monomial equals kernel, cross-multiplied through the derivative's denominator."""
    d = symbolic_form(ExpressionId(expr_id)).derivative()
    lhs = d.num.shift(mono) * factor
    rhs = kernel.shift(d.den)
    return lhs.equals(rhs)


def g_series_expected(order: int) -> PowerSeries:
    """16/495 x^13 + 496/61425 x^15 - 64/26325 x^17 + sum_(n>=9) (-1)^(n-1) u_n through x^order."""
    coeffs = [Fraction(0)] * (order + 1)
    for p, c in ((13, Fraction(16, 495)), (15, Fraction(496, 61425)), (17, Fraction(-64, 26325))):
        if p <= order:
            coeffs[p] += c
    k = 9
    while 2 * k + 1 <= order:
        coeffs[2 * k + 1] += (-1) ** (k - 1) * u_coefficient(k)
        k += 1
    return PowerSeries(tuple(coeffs))


def G_series_expected(order: int) -> PowerSeries:
    """sum_(n>=6) (-1)^n U_n through x^order."""
    coeffs = [Fraction(0)] * (order + 1)
    k = 6
    while 2 * k <= order:
        coeffs[2 * k] += (-1) ** k * U_coefficient(k)
        k += 1
    return PowerSeries(tuple(coeffs))


def kernel_identity_checks(order: int = 60) -> list[CheckResult]:
    out = [
        CheckResult("f' * 945 x^10 sin^2 x = g", _derivative_matches("f", 945, (10, 2, 0), g_direct())),
        CheckResult("F' * 420 x^8 sin^3 x = G", _derivative_matches("F", 420, (8, 3, 0), G_direct())),
        CheckResult("g multiple-angle rewrite", g_direct().equals(g_multiple_angle())),
        CheckResult("G multiple-angle rewrite", G_direct().equals(G_multiple_angle())),
    ]
    gs = g_direct().to_series(order)
    ge = g_series_expected(order)
    out.append(CheckResult(f"g series through x^{order}", gs == ge,
                           "identical" if gs == ge else _first_series_diff(gs, ge)))
    Gs = G_direct().to_series(order)
    Ge = G_series_expected(order)
    out.append(CheckResult(f"G series through x^{order}", Gs == Ge,
                           "identical" if Gs == Ge else _first_series_diff(Gs, Ge)))
    lower = Fraction(496, 61425), Fraction(-64, 26325)
    same = lower == (Fraction(16 * 93, 184275), Fraction(-16 * 28, 184275))
    out.append(CheckResult("g lower bound: 496/61425 x^15 - 64/26325 x^17 = 16 x^15 (93 - 28 x^2)/184275", same))
    return out


def _first_series_diff(a: PowerSeries, b: PowerSeries) -> str:
    for i, (u, v) in enumerate(zip(a.coeffs, b.coeffs)):
        if u != v:
            return f"first difference at x^{i}: {u} vs {v}"
    return "orders differ"
