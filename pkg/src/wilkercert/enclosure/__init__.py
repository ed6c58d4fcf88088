"""Validated enclosures: dyadic intervals, pi, Laurent polynomials in pi, Taylor models."""

from .interval import GREATER, LESS, UNDECIDED, DomainError, Interval
from .pi import pi_enclosure
from .pilaurent import HALF_PI, PI, TWO_OVER_PI, PiLaurent, pilaurent_eval
from .taylor import TaylorModel

__all__ = [
    "Interval",
    "DomainError",
    "LESS",
    "GREATER",
    "UNDECIDED",
    "pi_enclosure",
    "PiLaurent",
    "pilaurent_eval",
    "PI",
    "HALF_PI",
    "TWO_OVER_PI",
    "TaylorModel",
]
