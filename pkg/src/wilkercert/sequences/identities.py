"""Exact checks of the ratio identities and the three appendix arguments.

Every polynomial below is transcribed once, as displayed, and every check
compares it with an independently computed expansion.  Mismatches are not
raised; they are reported with the first coefficient that differs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..enclosure import pi_enclosure
from .claims import RATIO2_PROOF_STEPS, ratio2_reduction
from .exppoly import ExpPoly, describe_key
from .proof import appendix_A_numerator, appendix_S

n = ExpPoly.poly([0, 1])
ONE = ExpPoly.const(1)


def _p(*coeffs) -> ExpPoly:
    """Polynomial from coefficients listed from the highest power down."""
    return ExpPoly.poly(list(reversed(coeffs)))


def _e(poly: ExpPoly, base: int) -> ExpPoly:
    return poly * ExpPoly.poly([1], base)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    data: dict = field(default_factory=dict)


def _diff_detail(lhs: ExpPoly, rhs: ExpPoly) -> str:
    d = lhs.first_difference(rhs)
    if d is None:
        return "identical"
    key, a, b = d
    return f"first difference at {describe_key(key)}: {a} vs {b}"


# -- the u_n ratio ------------------------------------------------------------

E_u = _e(_p(Fraction(945, 2), Fraction(-16065, 4)), 4) + _p(16, -112, 952, -1960, 889, 13727, -2172, 0)
P_PRINTED = _e(_p(1890, -16065), 4) + _p(16, 0, 616, 1680, 889, 12810, 24309, 11340)
P_CORRECTED = P_PRINTED + _e(ONE * 1890, 4)
_Q_INNER = _e(_p(1890, -16065), 4) + _p(64, -448, 3808, -7840, 3556, 54908, -8688, 0)
Q_LOWER = (n + 1) * (2 * n + 3) * _Q_INNER


def u_coefficient(k: int) -> Fraction:
    """Coefficient of x^(2k+1) in u_k."""
    from ..arith import factorial

    return E_u(k) * Fraction(4**k, factorial(2 * k + 1))


def u_ratio_residual(p: ExpPoly) -> ExpPoly:
    """4 E(n+1) q_n - 8 p_n E(n) (2n+2)(2n+3); zero exactly when w_(n+1) q_n = 8 w_n p_n."""
    return 4 * E_u.shift(1) * Q_LOWER - 8 * p * E_u * (2 * n + 2) * (2 * n + 3)


# -- the U_n ratio ------------------------------------------------------------

E_U = (_e(_p(8, -40, 238, -302, -33924, 178605), 9) - _e(_p(34020, 187110, 0), 4)
       + _p(-5832, 29160, -64638, -215298, 222588, -178605))
P_UPPER = (_e(_p(8, 0, 158, 252, -33934, 144585), 9) - _e(_p(15120, 113400, 98280), 4)
           + _p(-648, 0, -702, -32508, -34938, -23625))
Q_UPPER = (2 * n + 1) * (n + 1) * E_U


def U_coefficient(k: int) -> Fraction:
    """Coefficient of x^(2k) in U_k."""
    from ..arith import factorial

    return E_U(k) / (81 * factorial(2 * k))


def U_ratio_residual() -> ExpPoly:
    """2 E(n+1) Q_n - 9 P_n E(n) (2n+1)(2n+2); zero exactly when V_(n+1) 2 Q_n = 9 V_n P_n."""
    return 2 * E_U.shift(1) * Q_UPPER - 9 * P_UPPER * E_U * (2 * n + 1) * (2 * n + 2)


# -- appendix B ---------------------------------------------------------------

B_DIRECT = (_e(_p(3780, -22680, -112455, 273105), 4)
            + _p(128, -576, 5248, 2016, -32984, 70476, 250052, -134916, -512244, -226800))
B_SHIFT_EXP = [179550, 397845, 79380, 3780]
B_SHIFT_POLY = [49648561200, 46968464520, 19975332000, 5019956996, 822741108, 91303912, 6864480, 337024, 9792, 128]
B_SHIFTED = ExpPoly.shifted_poly(B_SHIFT_EXP, 9, 4) + ExpPoly.shifted_poly(B_SHIFT_POLY, 9)


# -- appendix C ---------------------------------------------------------------

R_DIRECT = _p(960, 12384, 73088, 256200, -3508908, -22121984, 50474996, 274552068, -445858781, -777353865,
              997107984, -660306024)
R_SHIFT = [878926761468, 1894841991720, 1695853296525, 849645117283, 268187103036, 56595283460, 8234103112,
           835076820, 58479432, 2716928, 75744, 960]
S_DIRECT = _p(16, -56, 268, 0, -70412, 252112, 909099, -1556415)
S_SHIFT = [1715427, 679323, 1087672, 509908, 98760, 10348, 616, 16]
T_DIRECT = _p(16, 56, 268, 1060, -68292, 43052, 1203203, -465388)
T_SHIFT = [4102070, 4834979, 3323012, 1021308, 160300, 14380, 728, 16]
A_NUM = _p(68040, 476280, 413910, -1173690, -1179360)
C2_POLY = _p(11664, -40824, 39852, 595350, 256932, -485352, -106029, -104895)
C_DISPLAY = (_e(S_DIRECT, 9) + _e(_p(70, 0, 0, 0, 0), 9) - _e(A_NUM, 4) - C2_POLY)


def A_value(k: int) -> Fraction:
    return Fraction(appendix_A_numerator(k), appendix_S(k))


# -- reports ------------------------------------------------------------------


def _identity(name: str, lhs: ExpPoly, rhs: ExpPoly) -> CheckResult:
    return CheckResult(name, lhs == rhs, _diff_detail(lhs, rhs))


def _positive_coeffs(name: str, coeffs) -> CheckResult:
    bad = [i for i, c in enumerate(coeffs) if not c > 0]
    detail = "all positive" if not bad else f"non-positive coefficients at powers {bad}"
    return CheckResult(name, not bad, detail, {"coefficients": [Fraction(c) for c in coeffs]})


def exp_poly_checks() -> list[CheckResult]:
    """All exact identity checks for the ratio laws and the appendices."""
    out: list[CheckResult] = []

    res = u_ratio_residual(P_PRINTED)
    detail = "identical" if res.is_zero() else f"residual {res.format()}; " + _diff_detail(
        P_PRINTED, P_CORRECTED)
    out.append(CheckResult("u-ratio (printed p_n)", res.is_zero(), detail))
    out.append(CheckResult("u-ratio (p_n with exponential part (1890n-14175)4^n)",
                           u_ratio_residual(P_CORRECTED).is_zero(),
                           "identical" if u_ratio_residual(P_CORRECTED).is_zero() else "mismatch"))
    out.append(CheckResult("U-ratio", U_ratio_residual().is_zero(),
                           "identical" if U_ratio_residual().is_zero() else U_ratio_residual().format()))
    out.append(_identity("P_n = E(n+1)/9", P_UPPER, E_U.shift(1) * Fraction(1, 9)))

    out.append(_identity("B: q_n - 20 p_n equals the direct form (printed p_n)", Q_LOWER - 20 * P_PRINTED, B_DIRECT))
    out.append(_identity("B: shifted expansion equals the direct form", B_SHIFTED, B_DIRECT))
    out.append(_positive_coeffs("B: shifted coefficients of the 4^n part", B_SHIFT_EXP))
    out.append(_positive_coeffs("B: shifted coefficients of the polynomial part", B_SHIFT_POLY))
    corrected = Q_LOWER - 20 * P_CORRECTED
    out.append(_positive_coeffs("B: shifted 4^n coefficients with corrected p_n", corrected.shifted_part(9, 4)))
    out.append(_positive_coeffs("B: shifted polynomial coefficients with corrected p_n", corrected.shifted_part(9)))

    for name, direct, shift in (("R", R_DIRECT, R_SHIFT), ("S", S_DIRECT, S_SHIFT), ("T", T_DIRECT, T_SHIFT)):
        out.append(_identity(f"C: {name}_n shifted expansion", ExpPoly.shifted_poly(shift, 6), direct))
        out.append(_positive_coeffs(f"C: {name}_n shifted coefficients", shift))
    out.append(_identity("C: T_n = S_(n+1)", T_DIRECT, S_DIRECT.shift(1)))
    lhs = Fraction(9, 4) * A_NUM * T_DIRECT - A_NUM.shift(1) * S_DIRECT
    out.append(_identity("C: (9/4)A_n - A_(n+1) = 2835 R_n / (2 S_n T_n), cleared", lhs, R_DIRECT * Fraction(2835, 2)))
    bad = [k for k in range(6, 26)
           if Fraction(9, 4) * A_value(k) - A_value(k + 1) != Fraction(2835 * R_DIRECT(k), 2 * S_DIRECT(k) * T_DIRECT(k))]
    out.append(CheckResult("C: A_n step identity at n = 6..25", not bad, "all 20 points agree" if not bad else f"fails at {bad}"))
    a6 = A_value(6)
    out.append(CheckResult("C: base case A_6 < (9/4)^6", a6 == Fraction(3138660, 27229) and a6 < Fraction(9, 4) ** 6,
                           f"A_6 = {a6}, (9/4)^6 = {Fraction(9, 4) ** 6}"))
    out.append(_identity("C: Q_n - 12 P_n equals the displayed form", Q_UPPER - 12 * P_UPPER, C_DISPLAY))
    return out


def appendix_range_check(which: str, n_max: int, extra: int = 20) -> bool:
    """Exact finite-range verification of an appendix inequality.

    A: the integer reductions for N = 1..n_max and k = 2N+1..2N+extra.
    B: q_n - 20 p_n > 0 for n = 9..n_max, with printed and corrected p_n.
    C1: (9/4)^n > A_n for n = 6..n_max, plus the induction step identity and
        the positivity of the shifted R, S, T coefficients, which covers all n >= 6.
    C2: 70 n^4 9^n > the displayed polynomial, for n = 6..n_max.
    """
    if which == "A":
        if n_max < 1:
            raise ValueError("n_max must be >= 1")
        pi = pi_enclosure(64)
        if not (pi * pi).certainly_lt(10):
            return False
        return all(all(ratio2_reduction(k, N)[s] for s in RATIO2_PROOF_STEPS)
                   for N in range(1, n_max + 1) for k in range(2 * N + 1, 2 * N + extra + 1))
    if which == "B":
        if n_max < 9:
            raise ValueError("n_max must be >= 9")
        printed = Q_LOWER - 20 * P_PRINTED
        corrected = Q_LOWER - 20 * P_CORRECTED
        return all(printed(k) > 0 and corrected(k) > 0 for k in range(9, n_max + 1))
    if which == "C1":
        if n_max < 6:
            raise ValueError("n_max must be >= 6")
        if not all(Fraction(9, 4) ** k > A_value(k) for k in range(6, n_max + 1)):
            return False
        checks = {c.name: c.ok for c in exp_poly_checks() if c.name.startswith("C: ") and "Q_n" not in c.name}
        return all(checks.values())
    if which == "C2":
        if n_max < 6:
            raise ValueError("n_max must be >= 6")
        return all(70 * k**4 * 9**k > C2_POLY(k) for k in range(6, n_max + 1))
    raise ValueError(f"unknown appendix check {which!r}")


def huygens_kernel_positive(n_max: int) -> bool:
    """Q_n - 12 P_n > 0 for n = 6..n_max, evaluated directly."""
    d = Q_UPPER - 12 * P_UPPER
    return all(d(k) > 0 for k in range(6, n_max + 1))
