"""Best-possible constants: exact limits of the ratio functions at both endpoints."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..enclosure import Interval, PiLaurent
from ..kernels import ExpressionId, endpoint_model, eval_expression, limit_at_half_pi, limit_at_zero, symbolic_form
from ..kernels.cleared import DEFAULT_DELTA0, half_pi
from ..kernels.expressions import (
    HUYGENS2_RHO,
    HUYGENS2_VARRHO,
    HUYGENS_LAMBDA,
    HUYGENS_MU,
    TWO_OVER_PI,
    WILKER2_ALPHA,
    WILKER2_BETA,
    WILKER_A,
    WILKER_B,
)
from ..enclosure import TaylorModel
from ..kernels import TrigPoly
from ..series import lemma_ratio_series, ratio_taylor

# family -> (ratio expression, names at 0 and pi/2, printed values at 0 and pi/2, series oracle at 0)
_FAMILIES = {
    "wilker-sharp": ("f", ("a", "b"), (WILKER_A, WILKER_B), lambda: ratio_taylor("wilker-ratio", 6)[2]),
    "wilker2-sharp": ("phi", ("beta", "alpha"), (WILKER2_BETA, WILKER2_ALPHA),
                      lambda: -ratio_taylor("wilker2-ratio", 6)[2]),
    "huygens-sharp": ("psi", ("lambda", "mu"), (HUYGENS_LAMBDA, HUYGENS_MU), lambda: ratio_taylor("huygens-ratio", 6)[2]),
    "huygens2-sharp": ("F", ("varrho", "rho"), (HUYGENS2_VARRHO, HUYGENS2_RHO),
                       lambda: -ratio_taylor("huygens2-ratio", 6)[2]),
}

BEST_CONSTANT_FAMILIES = tuple(_FAMILIES) + ("tan-tail",)


@dataclass
class BestConstantPair:
    case: str
    n: int | None
    names: tuple[str, str]
    at_zero: Fraction
    at_pi_half: PiLaurent
    at_pi_half_enclosure: Interval
    inf_at: str
    sup_at: str
    printed_match: bool
    series_match: bool
    cross_check: list[dict]
    cross_check_ok: bool

    @property
    def label(self) -> str:
        return self.case if self.n is None else f"{self.case}[n={self.n}]"


def certified_decimal(iv: Interval, max_digits: int = 16) -> str:
    """Longest decimal expansion whose digits are common to both endpoints (truncated)."""
    lo, hi = iv.lo_fraction(), iv.hi_fraction()
    if lo < 0 < hi:
        return "0?"
    neg = hi <= 0
    a, b = (-hi, -lo) if neg else (lo, hi)
    best = None
    for d in range(0, max_digits + 1):
        scale = 10**d
        if (a * scale).__floor__() != (b * scale).__floor__():
            break
        best = d
    if best is None:
        return "?"
    v = (a * 10**best).__floor__()
    s = str(v).rjust(best + 1, "0")
    text = s if best == 0 else f"{s[:-best]}.{s[-best:]}"
    return ("-" if neg else "") + text + "..."


def _ratio_expr(case: str, n: int | None) -> ExpressionId:
    if case == "tan-tail":
        if n is None or n < 1:
            raise ValueError("tan-tail needs n >= 1")
        return ExpressionId("tan-tail-ratio", n)
    return ExpressionId(_FAMILIES[case][0])


def _range_near_half_pi(expr: ExpressionId, j: int, prec: int) -> Interval:
    """Enclosure of the ratio over x in [pi/2 - 2^-j, pi/2] from the endpoint models."""
    frac = symbolic_form(expr)
    T = Interval.from_endpoints(0, Fraction(1, 2**j), prec)
    num_tm, vn = endpoint_model(frac.num, "pi_half", DEFAULT_DELTA0, prec)
    den_tm, vd = endpoint_model(TrigPoly.monomial(*frac.den), "pi_half", DEFAULT_DELTA0, prec)
    q_num = num_tm.factored_range(vd, T) if vn >= vd else None
    q_den = den_tm.factored_range(vd, T)
    if q_num is None:
        raise ValueError("ratio has no finite limit at pi/2")
    return q_num / q_den


def _cross_check(expr: ExpressionId, limit_iv: Interval, prec: int) -> tuple[list[dict], bool]:
    rows, ok, prev_width = [], True, None
    for j in range(4, 13):
        rng = _range_near_half_pi(expr, j, prec)
        x = (half_pi(prec) - Fraction(1, 2**j)).with_prec(prec)
        point = eval_expression(expr, x, prec)
        contains_limit = rng.lo_fraction() <= limit_iv.lo_fraction() and limit_iv.hi_fraction() <= rng.hi_fraction()
        meets_point = not (point.hi_fraction() < rng.lo_fraction() or rng.hi_fraction() < point.lo_fraction())
        width = rng.width()
        shrinking = prev_width is None or width < prev_width
        prev_width = width
        row_ok = contains_limit and meets_point and shrinking
        ok = ok and row_ok
        rows.append({"j": j, "range": (rng.lo_fraction(), rng.hi_fraction()),
                     "point": (point.lo_fraction(), point.hi_fraction()), "ok": row_ok})
    return rows, ok


def best_constants(case: str, n: int | None = None, precision: int = 128) -> BestConstantPair:
    """Exact best-possible constants of one family, with cross-checks."""
    if case not in BEST_CONSTANT_FAMILIES:
        raise KeyError(f"no best constants for {case!r}")
    expr = _ratio_expr(case, n)
    at_zero = limit_at_zero(expr)
    at_half = limit_at_half_pi(expr)
    at_half = at_half if isinstance(at_half, PiLaurent) else PiLaurent.const(at_half)
    if case == "tan-tail":
        names = ("t_(n+1)", "(2/pi)^(2n)")
        from ..series import tan_coeff

        printed = (tan_coeff(n + 1), TWO_OVER_PI ** (2 * n))
        oracle = lemma_ratio_series(n, 4).coeffs[0]
    else:
        _, names, printed, series_fn = _FAMILIES[case]
        oracle = series_fn()
    printed_zero = printed[0]
    printed_half = printed[1] if isinstance(printed[1], PiLaurent) else PiLaurent.const(printed[1])
    printed_match = at_zero == printed_zero and at_half == printed_half
    enclosure = at_half.to_interval(precision)
    zero_iv = Interval.from_fraction(at_zero, precision)
    if zero_iv.certainly_lt(enclosure):
        inf_at, sup_at = "0", "pi/2"
    elif zero_iv.certainly_gt(enclosure):
        inf_at, sup_at = "pi/2", "0"
    else:
        inf_at = sup_at = "undecided"
    rows, ok = _cross_check(expr, enclosure, precision)
    return BestConstantPair(case, n, names, at_zero, at_half, enclosure, inf_at, sup_at, printed_match,
                            at_zero == oracle, rows, ok)


def all_best_constants(lemma_ns=range(1, 6), precision: int = 128) -> list[BestConstantPair]:
    out = [best_constants(c, None, precision) for c in _FAMILIES]
    out += [best_constants("tan-tail", n, precision) for n in lemma_ns]
    return out
