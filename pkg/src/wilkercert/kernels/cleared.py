"""Cleared forms and their rigorous evaluation on [0, pi/2].

Every catalog function evaluates symbolically to N / (x^i sin^j x cos^k x).
The numerator N is a trigonometric polynomial, regular on the closed interval,
with the same sign as the original function on (0, pi/2).  N is evaluated with
Taylor models in three zones:

* near 0, an exact model in x (rational or pi-Laurent coefficients);
* near pi/2, an exact model in t = pi/2 - x, where sin x = cos t and
  cos x = sin t, so the model at t = 0 is again exact;
* in between, a model centred at a dyadic midpoint with interval coefficients.

The exact models have a known valuation m and a remainder that is a multiple
of the variable to the power K+1, so N / var^m can be bounded on a whole
neighbourhood of the endpoint, including the endpoint itself.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..enclosure import HALF_PI, DomainError, Interval, PiLaurent, TaylorModel, pi_enclosure
from .expressions import ExpressionId
from .ops import SYMBOLIC, IntervalOps
from .symbolic import TrigFrac, TrigPoly
from .trig import cos_enclose, sin_enclose

DEFAULT_DELTA0 = Fraction(1, 4)
_MIN_ORDER = 40
_MAX_ORDER = 240
_INTERIOR_ORDER = 8


@dataclass(frozen=True)
class ClearedForm:
    expr: ExpressionId
    poly: TrigPoly
    multiplier: tuple[int, int, int]
    valuation: int
    leading: object
    right_valuation: int
    right_leading: object

    def multiplier_text(self) -> str:
        i, j, k = self.multiplier
        parts = [f"x^{i}" if i else "", f"sin(x)^{j}" if j else "", f"cos(x)^{k}" if k else ""]
        return "*".join(p for p in parts if p) or "1"


_LOCK = threading.Lock()
_SYMBOLIC_CACHE: dict[ExpressionId, TrigFrac] = {}


def symbolic_form(expr: ExpressionId) -> TrigFrac:
    with _LOCK:
        hit = _SYMBOLIC_CACHE.get(expr)
    if hit is None:
        hit = expr.fn(SYMBOLIC, TrigFrac.x())
        with _LOCK:
            _SYMBOLIC_CACHE[expr] = hit
    return hit


# -- model construction --------------------------------------------------------


def _poly_model(poly: TrigPoly, x_tm: TaylorModel, s_tm: TaylorModel, c_tm: TaylorModel, coef) -> TaylorModel:
    """Evaluate the trigonometric polynomial on Taylor models."""
    K, dom, prec = x_tm.order, x_tm.dom, x_tm.prec
    xp: dict[int, TaylorModel] = {0: TaylorModel.constant(1, K, dom, prec)}
    sp: dict[int, TaylorModel] = {0: xp[0]}
    cp: dict[int, TaylorModel] = {0: xp[0]}

    def power(cache, base, n):
        if n not in cache:
            cache[n] = power(cache, base, n - 1) * base
        return cache[n]

    groups: dict[tuple[int, int], list[tuple[int, object]]] = {}
    for (i, j, k), c in poly.terms.items():
        groups.setdefault((j, k), []).append((i, c))
    total = None
    for (j, k), items in sorted(groups.items()):
        xpart = None
        for i, c in sorted(items):
            term = power(xp, x_tm, i).scale(coef(c))
            xpart = term if xpart is None else xpart + term
        sc = power(sp, s_tm, j) * power(cp, c_tm, k) if (j or k) else None
        block = xpart * sc if sc is not None else xpart
        total = block if total is None else total + block
    if total is None:
        total = TaylorModel.constant(0, K, dom, prec)
    return total


def _exact_models(side: str, order: int, delta: Fraction, prec: int):
    dom = Interval.from_endpoints(0, delta, prec)
    if side == "zero":
        x_tm = TaylorModel(([0, 1] + [0] * order)[: order + 1], Interval.from_int(0, prec), dom, prec)
        s_tm, c_tm = TaylorModel.sincos(0, 1, order, dom, prec)
    else:
        x_tm = TaylorModel(([HALF_PI, -1] + [0] * order)[: order + 1], Interval.from_int(0, prec), dom, prec)
        st, ct = TaylorModel.sincos(0, 1, order, dom, prec)
        s_tm, c_tm = ct, st  # sin(pi/2 - t) = cos t, cos(pi/2 - t) = sin t
    return x_tm, s_tm, c_tm


_MODEL_CACHE: dict[tuple, tuple[TaylorModel, int]] = {}


def endpoint_model(poly: TrigPoly, side: str, delta: Fraction, prec: int) -> tuple[TaylorModel, int]:
    """Exact model of poly at an endpoint and its valuation there."""
    key = (poly, side, delta, prec)
    with _LOCK:
        hit = _MODEL_CACHE.get(key)
    if hit is not None:
        return hit
    order = _MIN_ORDER
    while True:
        models = _exact_models(side, order, delta, prec)
        tm = _poly_model(poly, *models, coef=lambda c: c)
        v = tm.valuation()
        if v is not None and v <= order - 12:
            break
        if order >= _MAX_ORDER:
            raise DomainError("cleared form vanishes to very high order at the endpoint")
        order = min(2 * order, _MAX_ORDER)
    with _LOCK:
        _MODEL_CACHE[key] = (tm, v)
    return tm, v


def _sign_of_exact(c) -> int:
    if isinstance(c, PiLaurent):
        prec = 64
        while True:
            iv = c.to_interval(prec)
            if iv.sign():
                return iv.sign()
            prec *= 2
    return (c > 0) - (c < 0)


@lru_cache(maxsize=None)
def cleared_form(expr: ExpressionId) -> ClearedForm:
    frac = symbolic_form(expr)
    tm0, v0 = endpoint_model(frac.num, "zero", DEFAULT_DELTA0, 64)
    tm1, v1 = endpoint_model(frac.num, "pi_half", DEFAULT_DELTA0, 64)
    return ClearedForm(expr, frac.num, frac.den, v0, tm0.coeffs[v0], v1, tm1.coeffs[v1])


# -- evaluation ----------------------------------------------------------------


def interior_value(poly: TrigPoly, x: Interval, prec: int, order: int = _INTERIOR_ORDER) -> Interval:
    """Enclosure of poly over x via a model at the dyadic midpoint of x."""
    m = x.mid()
    h = max(m - x.lo_fraction(), x.hi_fraction() - m)
    dom = Interval.from_endpoints(-h, h, prec)
    mp = Interval.from_fraction(m, prec)
    s0 = sin_enclose(mp)
    c0 = cos_enclose(mp)
    if x.is_point():
        order = 0
    x_tm = TaylorModel(([m, 1] + [0] * order)[: order + 1], Interval.from_int(0, prec), dom, prec)
    s_tm, c_tm = TaylorModel.sincos(s0, c0, order, dom, prec)
    coefs: dict = {}

    def coef(c):
        key = id(c)
        if key not in coefs:
            coefs[key] = Interval.coerce(c, prec)
        return coefs[key]

    tm = _poly_model(poly, x_tm, s_tm, c_tm, coef)
    return tm.range()


def endpoint_value(poly: TrigPoly, side: str, var: Interval, delta: Fraction, prec: int) -> tuple[Interval, int]:
    """(enclosure of poly / var^m over var, m) where var is x or pi/2 - x within [0, delta]."""
    tm, v = endpoint_model(poly, side, delta, prec)
    return tm.factored_range(v, var.with_prec(prec)), v


def half_pi(prec: int) -> Interval:
    return pi_enclosure(prec + 8) / 2


def eval_cleared(expr: ExpressionId, x: Interval, precision: int = 64, delta0: Fraction = DEFAULT_DELTA0) -> Interval:
    """Enclosure of the cleared form over x, for x within [0, pi/2]."""
    form = cleared_form(expr)
    delta0 = Fraction(delta0)
    lo, hi = x.lo_fraction(), x.hi_fraction()
    if lo < 0:
        raise DomainError("x must be non-negative")
    hp = half_pi(precision)
    if hp.certainly_lt(x.hi_fraction()):
        raise DomainError("x must not exceed pi/2")
    if hi <= delta0:
        q, m = endpoint_value(form.poly, "zero", x, delta0, precision)
        return q * (x.with_prec(precision) ** m)
    t = hp - x.with_prec(precision)
    if t.hi_fraction() <= delta0:
        t = t.intersect(Interval.from_endpoints(0, delta0, precision))
        q, m = endpoint_value(form.poly, "pi_half", t, delta0, precision)
        return q * (t ** m)
    return interior_value(form.poly, x, precision)


def eval_expression(expr: ExpressionId, x: Interval, precision: int = 64) -> Interval:
    """Direct interval evaluation of the catalog function over x (x inside (0, pi/2))."""
    if x.lo_m <= 0:
        raise DomainError("x must be bounded away from 0")
    return expr.fn(IntervalOps(precision), x.with_prec(precision))


def _exact_ratio(num_c, den_c):
    if isinstance(den_c, PiLaurent) and not den_c.is_rational():
        return PiLaurent.lift(num_c) / den_c
    if isinstance(den_c, PiLaurent):
        den_c = den_c.rational_value()
    if isinstance(num_c, PiLaurent):
        return num_c / den_c
    return Fraction(num_c) / Fraction(den_c)


def _limit(expr: ExpressionId, side: str):
    frac = symbolic_form(expr)
    num_tm, vn = endpoint_model(frac.num, side, DEFAULT_DELTA0, 64)
    den_tm, vd = endpoint_model(TrigPoly.monomial(*frac.den), side, DEFAULT_DELTA0, 64)
    if vn < vd:
        raise DomainError(f"{expr.label()} has no finite limit at the endpoint")
    if vn > vd:
        return Fraction(0)
    out = _exact_ratio(num_tm.coeffs[vn], den_tm.coeffs[vd])
    if isinstance(out, PiLaurent) and out.is_rational():
        return out.rational_value()
    return out


def limit_at_zero(expr: ExpressionId):
    """Exact limit x -> 0+ of a catalog function."""
    return _limit(expr, "zero")


def limit_at_half_pi(expr: ExpressionId):
    """Exact limit x -> pi/2- of a catalog function, as a rational or pi-Laurent value."""
    return _limit(expr, "pi_half")
