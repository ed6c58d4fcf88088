"""Grid sweeps: interval evaluations of gap functions at interior nodes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..enclosure import Interval
from ..kernels import ExpressionId, eval_expression
from ..kernels.cleared import half_pi
from .catalog import CASES, DOMINANCE_PAIRS, HALF_PI_DOMAIN, get_case
from .constants import certified_decimal

YES, NO, UNDECIDED = "yes", "no", "undecided"


@dataclass
class SweepRow:
    x: Interval
    gap_lower: Interval | None
    gap_upper: Interval | None
    dominance: dict[str, str] = field(default_factory=dict)
    extra: dict[str, Interval] = field(default_factory=dict)

    def csv_fields(self, digits: int = 12) -> list[str]:
        def fmt(iv):
            return "" if iv is None else certified_decimal(iv, digits).rstrip(".")

        dom = ";".join(f"{k}:{v}" for k, v in self.dominance.items())
        return [fmt(self.x), fmt(self.gap_lower), fmt(self.gap_upper), dom]


@dataclass
class SweepResult:
    group: str
    n: int | None
    rows: list[SweepRow]
    lower_id: str | None
    upper_id: str | None

    def all_positive(self) -> bool:
        return all(iv is None or iv.sign() > 0
                   for r in self.rows for iv in (r.gap_lower, r.gap_upper, *r.extra.values()))

    def dominance_summary(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for r in self.rows:
            for k, v in r.dominance.items():
                out.setdefault(k, {YES: 0, NO: 0, UNDECIDED: 0})[v] += 1
        return out

    def first_failure(self, pair: str) -> Interval | None:
        return next((r.x for r in self.rows if r.dominance.get(pair) == NO), None)


def _sides(group: str) -> tuple[str | None, str | None, list[str]]:
    """Lower and upper case ids of a group, plus any extra members (chains)."""
    members = [c.id for c in CASES if c.group == group]
    if not members:
        case = get_case(group)
        members, group = [case.id], case.group
    lower = next((m for m in members if m.endswith("-lower")), None)
    upper = next((m for m in members if m.endswith("-upper")), None)
    rest = [m for m in members if m not in (lower, upper)]
    if lower is None and rest:
        lower = rest.pop(0)
    return lower, upper, rest


_PREC_CAP = 2048


def _node(i: int, grid_points: int, domain_hi, precision: int) -> Interval:
    if domain_hi == HALF_PI_DOMAIN:
        return half_pi(precision) * Interval.from_fraction(Fraction(i, grid_points + 1), precision)
    return Interval.from_fraction(Fraction(domain_hi) * i / (grid_points + 1), precision)


def grid_nodes(grid_points: int, domain_hi, precision: int) -> list[Interval]:
    """x_i = i * D / (G + 1), i = 1..G, as tight enclosures."""
    if grid_points < 2:
        raise ValueError("grid_points must be >= 2")
    return [_node(i, grid_points, domain_hi, precision) for i in range(1, grid_points + 1)]


def _gap(case_id: str, n, x: Interval, precision: int) -> Interval:
    case = get_case(case_id)
    return eval_expression(ExpressionId(case.gap, n if case.n_range else None), x, precision)


def _dominance(stronger: Interval, weaker: Interval) -> str:
    diff = weaker - stronger
    if diff.sign() > 0 or (diff.lo_fraction() == 0 and diff.hi_fraction() == 0):
        return YES
    if diff.sign() < 0:
        return NO
    return UNDECIDED


def _sign_word(iv: Interval) -> str:
    s = iv.sign()
    return YES if s > 0 else (NO if s < 0 else UNDECIDED)


def _row(x: Interval, lower, upper, rest, pairs, n, precision: int) -> SweepRow:
    gl = _gap(lower, n, x, precision) if lower else None
    gu = _gap(upper, n, x, precision) if upper else None
    row = SweepRow(x, gl, gu)
    for cid in rest:
        g = _gap(cid, n, x, precision)
        row.extra[cid] = g
        row.dominance[f"{cid}>0"] = _sign_word(g)
    for s, w in pairs:
        strong = gl if s == lower else gu
        row.dominance[f"{s}/{w}"] = _dominance(strong, _gap(w, None, x, precision))
    return row


def _decided(row: SweepRow) -> bool:
    gaps = [g for g in (row.gap_lower, row.gap_upper) if g is not None]
    return all(g.sign() for g in gaps) and UNDECIDED not in row.dominance.values()


def sweep(group: str, n: int | None = None, grid_points: int = 100, precision: int = 128) -> SweepResult:
    """Evaluate the gaps of a group (or a single case) at G interior grid nodes.

    A stronger bound sits closer to the expression, so its gap is the smaller
    one; dominance is reported as ``yes`` where weaker_gap - stronger_gap >= 0
    is certified.  Chain groups put every member into the dominance column.
    A node whose signs stay undecided is re-evaluated at doubled precision,
    up to 2048 bits.
    """
    if grid_points < 2:
        raise ValueError("grid_points must be >= 2")
    lower, upper, rest = _sides(group)
    first = get_case(lower or upper)
    ids = [i for i in (lower, upper) if i] + rest
    pairs = [(s, w) for s, w in DOMINANCE_PAIRS if s in ids]
    rows = []
    for i in range(1, grid_points + 1):
        prec = precision
        while True:
            x = _node(i, grid_points, first.domain_hi, prec)
            row = _row(x, lower, upper, rest, pairs, n, prec)
            if _decided(row) or prec * 2 > _PREC_CAP:
                break
            prec *= 2
        rows.append(row)
    return SweepResult(first.group, n, rows, lower, upper)
