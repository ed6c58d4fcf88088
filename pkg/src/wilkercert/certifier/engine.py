"""Adaptive bisection that certifies a strict sign of a cleared form on [0, D].

D is pi/2 or a rational.  The interval is split into three zones:

* [0, delta0] in x, evaluated with the exact Taylor model at 0;
* [delta0, R] in x, R a dyadic just above pi/2 - delta0, evaluated with
  interval Taylor models at dyadic midpoints;
* t = pi/2 - x in [0, delta0], evaluated with the exact model at pi/2.

Each zone is bisected independently.  A leaf is accepted once its enclosure
has the required sign at some precision of the schedule.  Values at the
endpoints themselves are divided by t^m (or x^m) first, so zeros of known
valuation at 0 and pi/2 are not a problem.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

from ..enclosure import DomainError, Interval
from ..kernels import DEFAULT_DELTA0, ExpressionId, cleared_form, endpoint_value, eval_cleared, interior_value
from ..kernels.cleared import half_pi
from ..kernels.trig import NearSingularityError
from .catalog import HALF_PI_DOMAIN, get_case

PROVED, REFUTED, INCONCLUSIVE = "PROVED", "REFUTED", "INCONCLUSIVE"

_WITNESS_DEN_BITS = 16
_WITNESS_FALLBACK_BITS = 40


@dataclass(frozen=True)
class CertifyConfig:
    max_depth: int = 40
    precision_schedule: tuple[int, ...] = (64, 128, 256, 512)
    delta0: Fraction = DEFAULT_DELTA0

    def __post_init__(self):
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")
        if not self.precision_schedule or min(self.precision_schedule) < 32:
            raise ValueError("precisions must be >= 32 bits")
        d = Fraction(self.delta0)
        if not 0 < d <= Fraction(1, 2):
            raise ValueError("delta0 must lie in (0, 1/2]")
        object.__setattr__(self, "delta0", d)


@dataclass
class Leaf:
    zone: str
    lo: Fraction
    hi: Fraction
    precision: int
    sign: int

    def bounds_text(self) -> tuple[str, str]:
        if self.zone == "pi_half":  # stored in t = pi/2 - x
            return (f"pi/2 - {self.hi}", "pi/2" if self.lo == 0 else f"pi/2 - {self.lo}")
        return (str(self.lo), str(self.hi))

    def to_dict(self) -> dict:
        lo, hi = self.bounds_text()
        return {"lo": lo, "hi": hi, "precision": self.precision, "sign": self.sign, "zone": self.zone}


@dataclass
class Certificate:
    case: str
    params: dict
    status: str
    leaves: list[Leaf] = field(default_factory=list)
    endpoints: dict = field(default_factory=dict)
    witness: Fraction | None = None
    witness_value: tuple[Fraction, Fraction] | None = None
    nodes: int = 0
    seconds: float = 0.0
    note: str = ""

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "case": self.case,
            "params": {k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.params.items()},
            "status": self.status,
            "leaves": [leaf.to_dict() for leaf in self.leaves],
            "endpoints": self.endpoints,
            "stats": {"nodes": self.nodes, "leaves": len(self.leaves)},
        }
        if timing:
            out["stats"]["seconds"] = round(self.seconds, 3)
        if self.witness is not None:
            out["witness"] = {"x": str(self.witness),
                              "cleared_value": [str(self.witness_value[0]), str(self.witness_value[1])]}
        if self.note:
            out["note"] = self.note
        return out


class _Refuted(Exception):
    def __init__(self, x: Fraction, value: Interval):
        super().__init__(str(x))
        self.x, self.value = x, value


class _Engine:
    def __init__(self, expr: ExpressionId, domain_hi, config: CertifyConfig):
        self.expr = expr
        self.cfg = config
        self.form = cleared_form(expr)
        self.poly = self.form.poly
        self.delta = config.delta0
        self.domain_hi = domain_hi
        self.nodes = 0
        self.leaves: list[Leaf] = []
        self.undecided: list[tuple[str, Fraction, Fraction]] = []

    # -- zone evaluation ------------------------------------------------------

    def _value(self, zone: str, lo: Fraction, hi: Fraction, prec: int) -> Interval:
        if zone == "zero":
            X = Interval.from_endpoints(lo, hi, prec)
            q, _ = endpoint_value(self.poly, "zero", X, self.delta, prec)
            return q
        if zone == "pi_half":
            T = Interval.from_endpoints(lo, hi, prec)
            q, _ = endpoint_value(self.poly, "pi_half", T, self.delta, prec)
            return q
        return interior_value(self.poly, Interval.from_endpoints(lo, hi, prec), prec)

    def _leaf_sign(self, zone: str, lo: Fraction, hi: Fraction) -> tuple[int, int]:
        for prec in self.cfg.precision_schedule:
            self.nodes += 1
            try:
                v = self._value(zone, lo, hi, prec)
            except NearSingularityError:
                continue
            s = v.sign()
            if s:
                return s, prec
        return 0, self.cfg.precision_schedule[-1]

    # -- witnesses -------------------------------------------------------------

    def _point_value(self, x: Fraction) -> Interval | None:
        for prec in self.cfg.precision_schedule:
            try:
                v = eval_cleared(self.expr, Interval.from_fraction(x, prec), prec, self.delta)
            except DomainError:
                return None
            if v.sign():
                return v
        return None

    def _x_range(self, zone: str, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        if zone != "pi_half":
            return lo, hi
        hp = half_pi(128)
        return hp.hi_fraction() - hi, hp.lo_fraction() - lo

    def _candidates(self, zone: str, lo: Fraction, hi: Fraction, bits: int):
        a, b = self._x_range(zone, lo, hi)
        if a > b:
            return
        if zone == "pi_half":
            hp_lo = half_pi(128).lo_fraction()
            for j in range(2, bits + 1):
                x = Fraction(math.floor(hp_lo * 2**j), 2**j)
                if a <= x <= b:
                    yield x
        for j in range(0, bits + 1):
            k = math.ceil(a * 2**j)
            if Fraction(k, 2**j) <= b:
                x = Fraction(k, 2**j)
                if x > 0:
                    yield x
                mid = Fraction(round((a + b) / 2 * 2**j), 2**j)
                if a <= mid <= b and mid > 0:
                    yield mid

    def find_witness(self, zone: str, lo: Fraction, hi: Fraction) -> None:
        seen = set()
        for bits in (_WITNESS_DEN_BITS, _WITNESS_FALLBACK_BITS):
            for x in self._candidates(zone, lo, hi, bits):
                if x in seen:
                    continue
                seen.add(x)
                v = self._point_value(x)
                if v is not None and v.sign() < 0:
                    raise _Refuted(x, v)

    # -- bisection ------------------------------------------------------------

    def run_zone(self, zone: str, lo: Fraction, hi: Fraction) -> None:
        stack = [(lo, hi, 0)]
        while stack:
            a, b, depth = stack.pop()
            s, prec = self._leaf_sign(zone, a, b)
            if s > 0:
                self.leaves.append(Leaf(zone, a, b, prec, s))
                continue
            if s < 0:
                self.find_witness(zone, a, b)
                self.undecided.append((zone, a, b))
                continue
            if depth >= self.cfg.max_depth:
                self.find_witness(zone, a, b)
                self.undecided.append((zone, a, b))
                continue
            m = _dyadic_mid(a, b)
            stack.append((m, b, depth + 1))
            stack.append((a, m, depth + 1))

    def endpoint_checks(self) -> None:
        """A wrong-signed leading coefficient refutes the inequality next to that endpoint."""
        if _exact_sign(self.form.leading) < 0:
            self.find_witness("zero", Fraction(0), self.delta)
        if self.domain_hi == HALF_PI_DOMAIN and _exact_sign(self.form.right_leading) < 0:
            self.find_witness("pi_half", Fraction(0), self.delta)

    def interior_end(self) -> Fraction:
        if self.domain_hi != HALF_PI_DOMAIN:
            return Fraction(self.domain_hi)
        hp_hi = half_pi(64).hi_fraction()
        return Fraction(math.ceil((hp_hi - self.delta) * 2**20), 2**20)


def _dyadic_mid(a: Fraction, b: Fraction) -> Fraction:
    return (a + b) / 2


def _exact_sign(c) -> int:
    from ..kernels.cleared import _sign_of_exact

    return _sign_of_exact(c)


def _format_exact(c) -> str:
    return c.format() if hasattr(c, "format") else str(c)


def certify_expression(expr: ExpressionId, domain_hi=HALF_PI_DOMAIN, config: CertifyConfig | None = None,
                       case_id: str | None = None) -> Certificate:
    """Certify expr > 0 on (0, domain_hi) through its cleared form."""
    cfg = config or CertifyConfig()
    start = time.perf_counter()
    eng = _Engine(expr, domain_hi, cfg)
    params = {"n": expr.n} if expr.n is not None else {}
    if expr.scale is not None:
        params["scale"] = expr.scale
    form = eng.form
    endpoints = {
        "zero": {"delta": str(eng.delta), "valuation": form.valuation, "leading": _format_exact(form.leading),
                 "multiplier": form.multiplier_text()},
    }
    if domain_hi == HALF_PI_DOMAIN:
        endpoints["pi_half"] = {"delta": str(eng.delta), "valuation": form.right_valuation,
                                "leading": _format_exact(form.right_leading),
                                "form": "cleared form in t = pi/2 - x"}
    cert = Certificate(case_id or expr.id, params, INCONCLUSIVE, endpoints=endpoints)
    try:
        eng.endpoint_checks()
        if domain_hi == HALF_PI_DOMAIN:
            eng.run_zone("zero", Fraction(0), eng.delta)
            eng.run_zone("interior", eng.delta, eng.interior_end())
            eng.run_zone("pi_half", Fraction(0), eng.delta)
        else:
            hi = Fraction(domain_hi)
            d = min(eng.delta, hi / 2)
            eng.run_zone("zero", Fraction(0), d)
            eng.run_zone("interior", d, hi)
    except _Refuted as r:
        cert.status = REFUTED
        cert.witness = r.x
        cert.witness_value = (r.value.lo_fraction(), r.value.hi_fraction())
    else:
        if eng.undecided:
            z, a, b = eng.undecided[0]
            cert.note = f"{len(eng.undecided)} undecided leaves, first in zone {z} at [{a}, {b}]"
        else:
            cert.status = PROVED
    order = {"zero": 0, "interior": 1, "pi_half": 2}
    cert.leaves = sorted(eng.leaves, key=lambda l: (order[l.zone], l.lo if l.zone != "pi_half" else -l.hi))
    cert.nodes = eng.nodes
    cert.seconds = time.perf_counter() - start
    return cert


def certify_sign(case_id: str, n: int | None = None, config: CertifyConfig | None = None,
                 scale=None) -> Certificate:
    """Certify a catalog case; ``scale`` multiplies its best-possible constant."""
    case = get_case(case_id)
    case.check_n(n)
    expr = ExpressionId(case.gap, n, None if scale is None else Fraction(scale))
    return certify_expression(expr, case.domain_hi, config, case.id)


def adverse_scale(case_id: str, n: int | None = None, rel: Fraction = Fraction(1, 1000)) -> Fraction:
    """Factor on the best constant that moves the bound towards the expression by rel."""
    from ..kernels.expressions import best_constant

    const, side = best_constant(case_id, n)
    sign = _exact_sign(const)
    return 1 + side * sign * rel
