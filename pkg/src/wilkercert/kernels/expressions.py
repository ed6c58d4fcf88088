"""The expression catalog: every function the certifier and sweeps evaluate.

Each entry is a plain function ``fn(o, x, n)`` written once against a small
"ops" namespace ``o`` providing ``sin``, ``cos``, ``tan`` and ``const``.  The
same code therefore evaluates with intervals, with a high-precision float
library in tests, or symbolically with ``TrigFrac`` to produce the cleared form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..enclosure import PiLaurent
from ..series import tan_coeff
from ..coeffs import huygens_coeff, wilker2_family_coeff, wilker2_family_tail, wilker_coeff

F = Fraction
TWO_OVER_PI = PiLaurent({-1: 2})

# best constants at the right endpoint, in closed form
WILKER_B = PiLaurent({-8: 256, -4: F(-128, 45), -2: F(32, 945)})
WILKER2_ALPHA = PiLaurent({-4: F(224, 315), -2: F(-8, 315)})
HUYGENS_MU = PiLaurent({-8: 256, -4: F(-12, 5), -2: F(-1, 70)})
HUYGENS2_RHO = PiLaurent({-4: F(56, 210), -2: F(-3, 210)})
WILKER_A = F(16, 14175)
WILKER2_BETA = F(4, 1575)
HUYGENS_LAMBDA = F(23, 33600)
HUYGENS2_VARRHO = F(83, 100800)


# -- building blocks ---------------------------------------------------------


def W(o, x):
    return (o.sin(x) / x) ** 2 + o.tan(x) / x


def W2(o, x):
    return (x / o.sin(x)) ** 2 + x / o.tan(x)


def H(o, x):
    return 2 * o.sin(x) / x + o.tan(x) / x


def H2(o, x):
    return 2 * x / o.sin(x) + x / o.tan(x)


def _x3tan(o, x):
    return x**3 * o.tan(x)


def _poly(o, x, coeffs):
    """sum coeffs[i] x^(2i), coefficients exact."""
    acc = o.const(0)
    for i, c in enumerate(coeffs):
        if c != 0:
            acc = acc + o.const(c) * x ** (2 * i)
    return acc


def _tan_partial(o, x, n):
    acc = o.const(0)
    for k in range(1, n + 1):
        acc = acc + o.const(tan_coeff(k)) * x ** (2 * k - 1)
    return acc


def _wilker_partial(o, x, n):
    acc = o.const(2)
    for k in range(3, n + 1):
        acc = acc + o.const(wilker_coeff(k)) * x ** (2 * k - 2)
    return acc


def _huygens_partial(o, x, n):
    acc = o.const(3)
    for k in range(3, n + 1):
        acc = acc + o.const(huygens_coeff(k)) * x ** (2 * k - 2)
    return acc


def _sharp(o, x, expr, base, poly, const_x4, sign):
    """sign * (expr - base - (poly + const_x4 x^4) x^3 tan x)."""
    bound = o.const(base) + (_poly(o, x, poly) + o.const(const_x4) * x**4) * _x3tan(o, x)
    return (expr - bound) if sign > 0 else (bound - expr)


def _sharp_gap(expr, base, poly, const, sign):
    def gap(o, x, scale=1):
        return _sharp(o, x, expr(o, x), base, poly, const * scale, sign)

    gap.constant, gap.sign = const, sign
    return gap


# -- ratio functions -----------------------------------------------------------


def wilker_ratio(o, x, n=None):
    return (W(o, x) - 2) / _x3tan(o, x)


def wilker2_ratio(o, x, n=None):
    return (W2(o, x) - 2) / _x3tan(o, x)


def huygens_ratio(o, x, n=None):
    return (H(o, x) - 3) / _x3tan(o, x)


def huygens2_ratio(o, x, n=None):
    return (H2(o, x) - 3) / _x3tan(o, x)


def f_wilker(o, x, n=None):
    return (wilker_ratio(o, x) - o.const(F(8, 45)) + o.const(F(8, 945)) * x**2) / x**4


def phi_wilker2(o, x, n=None):
    return (o.const(F(2, 45)) - o.const(F(2, 315)) * x**2 - wilker2_ratio(o, x)) / x**4


def psi_huygens(o, x, n=None):
    return (huygens_ratio(o, x) - o.const(F(3, 20)) - o.const(F(1, 280)) * x**2) / x**4


def F_huygens2(o, x, n=None):
    return (o.const(F(1, 60)) - o.const(F(1, 280)) * x**2 - huygens2_ratio(o, x)) / x**4


def tan_tail_ratio(o, x, n):
    return (o.tan(x) - _tan_partial(o, x, n)) / (x ** (2 * n) * o.tan(x))


# -- kernels -------------------------------------------------------------------


def kernel_g(o, x, n=None):
    s, c = o.sin(x), o.cos(x)
    k = o.const
    return (
        k(6615) * x**2 * (2 * s * c)
        - k(8505) * s**3 * c
        - k(8505) * x
        + k(1890) * x**3
        + k(10395) * x * c**2
        - k(1890) * x * c**4
        + k(672) * x**5 * s**2
        - k(16) * x**7 * s**2
    )


def kernel_G(o, x, n=None):
    s, c = o.sin(x), o.cos(x)
    k = o.const
    return (
        k(2520) * x * (2 * s * c)
        + (k(2520) * x - k(3) * x**5 + k(28) * x**3) * s * c**2
        + (k(3) * x**5 - k(1260) * x - k(28) * x**3) * s
        + (k(840) * x**2 - k(8820)) * c
        + k(840) * x**2 * c**2
        + k(8820) * c**3
        + k(840) * x**2
    )


# -- gap functions (positive exactly when the inequality holds) ----------------


def tan_tail_lower(o, x, n, scale=1):
    mid = o.tan(x) - _tan_partial(o, x, n)
    return mid - o.const(tan_coeff(n + 1) * scale) * x ** (2 * n) * o.tan(x)


def tan_tail_upper(o, x, n, scale=1):
    mid = o.tan(x) - _tan_partial(o, x, n)
    return o.const(TWO_OVER_PI ** (2 * n) * scale) * x ** (2 * n) * o.tan(x) - mid


def wilker_family_lower(o, x, n, scale=1):
    mid = W(o, x) - _wilker_partial(o, x, n)
    return mid - o.const(wilker_coeff(n + 1) * scale) * x ** (2 * n - 1) * o.tan(x)


def wilker_family_upper(o, x, n, scale=1):
    mid = W(o, x) - _wilker_partial(o, x, n)
    return o.const(TWO_OVER_PI ** (2 * n) * scale) * x ** (2 * n - 1) * o.tan(x) - mid


def huygens_family_lower(o, x, n, scale=1):
    mid = H(o, x) - _huygens_partial(o, x, n)
    return mid - o.const(huygens_coeff(n + 1) * scale) * x ** (2 * n - 1) * o.tan(x)


def huygens_family_upper(o, x, n, scale=1):
    mid = H(o, x) - _huygens_partial(o, x, n)
    return o.const(TWO_OVER_PI ** (2 * n) * scale) * x ** (2 * n - 1) * o.tan(x) - mid


def wilker2_family_upper(o, x, n):
    acc = o.const(2)
    for k in range(2, n + 1):
        acc = acc + o.const(wilker2_family_coeff(k)) * x ** (2 * k)
    acc = acc + o.const(wilker2_family_tail(n)) * x ** (2 * n + 1) * o.tan(x)
    return acc - W2(o, x)


GAPS_FIXED: dict[str, Callable] = {
    "wilker-sharp-lower": _sharp_gap(W, 2, [F(8, 45), F(-8, 945)], WILKER_A, +1),
    "wilker-sharp-upper": _sharp_gap(W, 2, [F(8, 45), F(-8, 945)], WILKER_B, -1),
    "wilker2-sharp-lower": _sharp_gap(W2, 2, [F(2, 45), F(-2, 315)], -WILKER2_ALPHA, +1),
    "wilker2-sharp-upper": _sharp_gap(W2, 2, [F(2, 45), F(-2, 315)], -WILKER2_BETA, -1),
    "huygens-sharp-lower": _sharp_gap(H, 3, [F(3, 20), F(1, 280)], HUYGENS_LAMBDA, +1),
    "huygens-sharp-upper": _sharp_gap(H, 3, [F(3, 20), F(1, 280)], HUYGENS_MU, -1),
    "huygens2-sharp-lower": _sharp_gap(H2, 3, [F(1, 60), F(-1, 280)], -HUYGENS2_RHO, +1),
    "huygens2-sharp-upper": _sharp_gap(H2, 3, [F(1, 60), F(-1, 280)], -HUYGENS2_VARRHO, -1),
    "wilker": lambda o, x: W(o, x) - 2,
    "wilker-classic-lower": lambda o, x: W(o, x) - 2 - o.const(TWO_OVER_PI**4) * _x3tan(o, x),
    "wilker-classic-upper": lambda o, x: 2 + o.const(F(8, 45)) * _x3tan(o, x) - W(o, x),
    "huygens": lambda o, x: H(o, x) - 3,
    "wilker2": lambda o, x: W2(o, x) - 2,
    "sinc-cos-left": lambda o, x: (2 + o.cos(x)) / 3 - o.sin(x) / x,
    "sinc-cos-right": lambda o, x: (x / o.sin(x) + o.cos(x)) / 2 - (2 + o.cos(x)) / 3,
    "half-wilker2-left": lambda o, x: W2(o, x) / 2 - H2(o, x) / 3,
    "half-wilker2-right": lambda o, x: H2(o, x) / 3 - 1,
    # the chain: W/2 > s^2 t > H/3 > (s^2 t)^(1/3) > W2/2 > H2/3 > 1, with
    # s = sin x / x and t = tan x / x; the cube root links are cubed
    "chain-1": lambda o, x: W(o, x) / 2 - (o.sin(x) / x) ** 2 * (o.tan(x) / x),
    "chain-2": lambda o, x: (o.sin(x) / x) ** 2 * (o.tan(x) / x) - H(o, x) / 3,
    "chain-3": lambda o, x: (H(o, x) / 3) ** 3 - (o.sin(x) / x) ** 2 * (o.tan(x) / x),
    "chain-4": lambda o, x: (o.sin(x) / x) ** 2 * (o.tan(x) / x) - (W2(o, x) / 2) ** 3,
    "chain-5": lambda o, x: W2(o, x) / 2 - H2(o, x) / 3,
    "chain-6": lambda o, x: H2(o, x) / 3 - 1,
    "wilker-x4-lower": lambda o, x: W(o, x) - 2 - o.const(F(8, 45)) * x**4 - o.const(F(16, 315)) * x**5 * o.tan(x),
    "wilker-x4-upper": lambda o, x: 2 + o.const(F(8, 45)) * x**4 + o.const(TWO_OVER_PI**6) * x**5 * o.tan(x) - W(o, x),
    "wilker2-cubic-upper": lambda o, x: 2 + o.const(F(2, 45)) * _x3tan(o, x) - W2(o, x),
    "huygens-cubic-lower": lambda o, x: H(o, x) - 3 - o.const(F(3, 20)) * _x3tan(o, x),
    "huygens-cubic-upper": lambda o, x: 3 + o.const(TWO_OVER_PI**4) * _x3tan(o, x) - H(o, x),
    "wilker-quartic-lower": lambda o, x: _sharp(o, x, W(o, x), 2, [F(8, 45), F(-8, 945)], 0, +1),
    "wilker-quartic-upper": lambda o, x: _sharp(o, x, W(o, x), 2, [F(8, 45), F(-8, 945)], F(16, 14175), -1),
    "huygens2-cubic-lower": lambda o, x: H2(o, x) - 3,
    "huygens2-cubic-upper": lambda o, x: 3 + o.const(F(1, 60)) * _x3tan(o, x) - H2(o, x),
    "kernel-g": lambda o, x: kernel_g(o, x),
    "kernel-G": lambda o, x: kernel_G(o, x),
}

GAPS_FAMILY: dict[str, tuple[Callable, int]] = {
    # id: (fn(o, x, n), smallest n)
    "tan-tail-lower": (tan_tail_lower, 1),
    "tan-tail-upper": (tan_tail_upper, 1),
    "wilker-family-lower": (wilker_family_lower, 3),
    "wilker-family-upper": (wilker_family_upper, 3),
    "huygens-family-lower": (huygens_family_lower, 2),
    "huygens-family-upper": (huygens_family_upper, 2),
    "wilker2-family-upper": (wilker2_family_upper, 1),
}

RATIOS: dict[str, Callable] = {
    "W": lambda o, x: W(o, x),
    "W2": lambda o, x: W2(o, x),
    "H": lambda o, x: H(o, x),
    "H2": lambda o, x: H2(o, x),
    "wilker-ratio": lambda o, x: wilker_ratio(o, x),
    "wilker2-ratio": lambda o, x: wilker2_ratio(o, x),
    "huygens-ratio": lambda o, x: huygens_ratio(o, x),
    "huygens2-ratio": lambda o, x: huygens2_ratio(o, x),
    "f": lambda o, x: f_wilker(o, x),
    "phi": lambda o, x: phi_wilker2(o, x),
    "psi": lambda o, x: psi_huygens(o, x),
    "F": lambda o, x: F_huygens2(o, x),
}


def _family_constant(fid: str, n: int):
    lower = {"tan-tail-lower": tan_coeff, "wilker-family-lower": wilker_coeff, "huygens-family-lower": huygens_coeff}
    if fid in lower:
        return lower[fid](n + 1), +1
    return TWO_OVER_PI ** (2 * n), -1


SCALABLE_FAMILIES = ("tan-tail-lower", "tan-tail-upper", "wilker-family-lower", "wilker-family-upper",
                     "huygens-family-lower", "huygens-family-upper")


def best_constant(fid: str, n: int | None = None):
    """(constant, side) of a gap with one best-possible constant; side +1 for a lower bound."""
    if fid in SCALABLE_FAMILIES:
        return _family_constant(fid, n)
    gap = GAPS_FIXED.get(fid)
    if gap is None or not hasattr(gap, "constant"):
        raise KeyError(f"{fid!r} has no adjustable constant")
    return gap.constant, gap.sign


@dataclass(frozen=True)
class ExpressionId:
    """A catalog entry, its parameter n, and an optional factor on its best constant."""

    id: str
    n: int | None = None
    scale: Fraction | None = None

    def __post_init__(self):
        if self.id in GAPS_FAMILY:
            lo = GAPS_FAMILY[self.id][1]
            if self.n is None or self.n < lo:
                raise ValueError(f"{self.id} needs n >= {lo}")
        elif self.id == "tan-tail-ratio":
            if self.n is None or self.n < 1:
                raise ValueError("tan-tail-ratio needs n >= 1")
        elif self.id in GAPS_FIXED or self.id in RATIOS:
            if self.n is not None:
                raise ValueError(f"{self.id} takes no parameter")
        else:
            raise KeyError(f"unknown expression {self.id!r}")
        if self.scale is not None:
            best_constant(self.id, self.n)  # raises for entries without a constant
            object.__setattr__(self, "scale", Fraction(self.scale))

    @property
    def fn(self) -> Callable:
        scale = 1 if self.scale is None else self.scale
        if self.id in GAPS_FAMILY:
            base = GAPS_FAMILY[self.id][0]
            n = self.n
            if self.scale is not None:
                return lambda o, x: base(o, x, n, scale)
            return lambda o, x: base(o, x, n)
        if self.id == "tan-tail-ratio":
            n = self.n
            return lambda o, x: tan_tail_ratio(o, x, n)
        if self.id in GAPS_FIXED:
            gap = GAPS_FIXED[self.id]
            if self.scale is not None:
                return lambda o, x: gap(o, x, scale)
            return gap
        return RATIOS[self.id]

    def label(self) -> str:
        text = self.id if self.n is None else f"{self.id}[n={self.n}]"
        return text if self.scale is None else f"{text}*{self.scale}"


def all_gap_ids() -> list[str]:
    return list(GAPS_FIXED) + list(GAPS_FAMILY)
