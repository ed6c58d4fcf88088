"""Evaluation namespaces for the expression catalog."""

from __future__ import annotations

from ..enclosure import Interval
from .symbolic import TrigFrac
from .trig import cos_enclose, sin_enclose, tan_enclose


class IntervalOps:
    def __init__(self, prec: int = 64):
        self.prec = prec

    def sin(self, x: Interval) -> Interval:
        return sin_enclose(x)

    def cos(self, x: Interval) -> Interval:
        return cos_enclose(x)

    def tan(self, x: Interval) -> Interval:
        return tan_enclose(x)

    def const(self, c) -> Interval:
        return Interval.coerce(c, self.prec)


class SymbolicOps:
    """Evaluates a catalog function into a ``TrigFrac`` in the symbol x."""

    def sin(self, x) -> TrigFrac:
        return TrigFrac.sin()

    def cos(self, x) -> TrigFrac:
        return TrigFrac.cos()

    def tan(self, x) -> TrigFrac:
        return TrigFrac.tan()

    def const(self, c) -> TrigFrac:
        return TrigFrac.const(c)


SYMBOLIC = SymbolicOps()
