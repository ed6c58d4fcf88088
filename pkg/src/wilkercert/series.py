"""Exact truncated power series over the rationals.

A ``PowerSeries`` of order K knows its coefficients of x^0 .. x^K exactly and
nothing beyond.  Operations propagate the order honestly: a product is exact
through the smaller order, and dividing out x^v lowers the order by v.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import bernoulli_abs_even, factorial
from .enclosure import DomainError, pi_enclosure

__all__ = [
    "PowerSeries",
    "ps_elementary",
    "tan_coeff",
    "ratio_series",
    "ratio_taylor",
    "lemma_ratio_series",
    "series_tail_bound",
    "RATIO_IDS",
]


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))
        if not self.coeffs:
            raise ValueError("a power series needs at least one coefficient")

    # -- basic shape --------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order + 1

    def is_zero(self) -> bool:
        return self.valuation > self.order

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    @classmethod
    def constant(cls, c, order: int) -> "PowerSeries":
        return cls([c] + [0] * order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls(([0, 1] + [0] * order)[: order + 1])

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order) + 1
        return PowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "PowerSeries":
        c = Fraction(c)
        return PowerSeries([a * c for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return self.scale(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                ai = a[i]
                for j in range(n + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return PowerSeries(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("non-negative powers only")
        result = PowerSeries.constant(1, self.order)
        for _ in range(n):
            result = result * self
        return result

    def shift_valuation(self, k: int) -> "PowerSeries":
        """Multiply by x^k; negative k divides and needs -k leading zeros."""
        if k >= 0:
            return PowerSeries([Fraction(0)] * k + list(self.coeffs))
        k = -k
        if any(self.coeffs[:k]):
            raise DomainError(f"series is not divisible by x^{k}")
        if k > self.order:
            raise DomainError("dividing out x^k leaves no known coefficients")
        return PowerSeries(self.coeffs[k:])

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            c = Fraction(other)
            if c == 0:
                raise DomainError("division by zero")
            return self.scale(1 / c)
        if other.is_zero():
            raise DomainError("division by the zero series")
        v = other.valuation
        if self.valuation < v and not self.is_zero():
            raise DomainError("divisor valuation exceeds dividend valuation")
        f = self.shift_valuation(-v) if v else self
        g = other.shift_valuation(-v) if v else other
        n = min(f.order, g.order)
        inv0 = 1 / g.coeffs[0]
        q = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            s = f.coeffs[k]
            for j in range(1, k + 1):
                if g.coeffs[j]:
                    s -= g.coeffs[j] * q[k - j]
            q[k] = s * inv0
        return PowerSeries(q)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def derivative(self) -> "PowerSeries":
        if self.order == 0:
            return PowerSeries([0])
        return PowerSeries([k * self.coeffs[k] for k in range(1, self.order + 1)])

    def substitute_scale(self, a) -> "PowerSeries":
        """f(a x)."""
        a = Fraction(a)
        return PowerSeries([c * a**k for k, c in enumerate(self.coeffs)])

    def even_part(self) -> list[Fraction]:
        return [self.coeffs[k] for k in range(0, self.order + 1, 2)]

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)


# -- elementary series ------------------------------------------------------


def _sin(order: int) -> PowerSeries:
    out = []
    for k in range(order + 1):
        if k % 2 == 1:
            out.append(Fraction((-1) ** (k // 2), factorial(k)))
        else:
            out.append(Fraction(0))
    return PowerSeries(out)


def _cos(order: int) -> PowerSeries:
    out = []
    for k in range(order + 1):
        if k % 2 == 0:
            out.append(Fraction((-1) ** (k // 2), factorial(k)))
        else:
            out.append(Fraction(0))
    return PowerSeries(out)


def ps_elementary(name: str, order: int, scale=1) -> PowerSeries:
    """Exact Taylor series at 0 of an elementary function of ``scale * x``.

    Names: sin, cos, tan, sin2 (sin^2), cos2x (cos 2x), xcot (x cot x).
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if name == "sin":
        base = _sin(order)
    elif name == "cos":
        base = _cos(order)
    elif name == "tan":
        base = _sin(order) / _cos(order)
    elif name == "sin2":
        s = _sin(order)
        base = s * s
    elif name == "cos2x":
        base = _cos(order).substitute_scale(2)
    elif name == "xcot":
        # x cos x / sin x: clear the common factor x before dividing
        s = _sin(order + 1).shift_valuation(-1)
        base = _cos(order) / s
    else:
        raise ValueError(f"unknown elementary series {name!r}")
    return base.substitute_scale(scale) if scale != 1 else base


def tan_coeff(k: int) -> Fraction:
    """t_k = 2^(2k) (2^(2k) - 1) |B_2k| / (2k)!, the x^(2k-1) coefficient of tan."""
    if k < 1:
        raise ValueError("k must be >= 1")
    p = 4**k
    return Fraction(p * (p - 1)) * bernoulli_abs_even(k) / factorial(2 * k)


# -- ratio expressions ------------------------------------------------------

RATIO_IDS = ("wilker-ratio", "wilker2-ratio", "huygens-ratio", "huygens2-ratio")

_GUARD = 8


def _building_blocks(order: int):
    s = _sin(order)
    c = _cos(order)
    t = s / c
    x3tan = t.shift_valuation(3)
    return s, c, t, x3tan


def ratio_series(expr_id: str, order: int) -> PowerSeries:
    """Exact series of one of the four ratio functions through x^order.

    Each ratio is (expression - constant) / (x^3 tan x); numerator and
    denominator both vanish to order 4, and the division clears that first.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    m = order + _GUARD
    s, c, t, x3tan = _building_blocks(m)
    s_over_x = s.shift_valuation(-1)
    t_over_x = t.shift_valuation(-1)
    if expr_id == "wilker-ratio":
        num = s_over_x * s_over_x + t_over_x - 2
    elif expr_id == "wilker2-ratio":
        x_over_s = 1 / s_over_x
        num = x_over_s * x_over_s + 1 / t_over_x - 2
    elif expr_id == "huygens-ratio":
        num = s_over_x * 2 + t_over_x - 3
    elif expr_id == "huygens2-ratio":
        num = (1 / s_over_x) * 2 + 1 / t_over_x - 3
    else:
        raise ValueError(f"unknown ratio expression {expr_id!r}; expected one of {RATIO_IDS}")
    return (num / x3tan).truncate(order)


def ratio_taylor(expr_id: str, order: int) -> list[Fraction]:
    """Even-power coefficients of the ratio series, x^0, x^2, ... below x^order.

    ``order`` follows the usual O(x^order) convention, so order 14 yields the
    seven coefficients of x^0 .. x^12.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    ps = ratio_series(expr_id, order - 1)
    return [ps.coeffs[k] for k in range(0, order, 2)]


def lemma_ratio_series(n: int, order: int) -> PowerSeries:
    """Series of (tan x - sum_{k<=n} t_k x^(2k-1)) / (x^(2n) tan x)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = order + 2 * n + _GUARD
    t = ps_elementary("tan", m)
    partial = PowerSeries([tan_coeff((k + 1) // 2) if k % 2 == 1 and k <= 2 * n - 1 else 0 for k in range(m + 1)])
    return ((t - partial) / t.shift_valuation(2 * n)).truncate(order)


# -- tail bounds -------------------------------------------------------------


_PI_LOWER = Fraction(314159, 100000)


def _pi_lower() -> Fraction:
    # a short rational below pi, certified against the enclosure
    if not pi_enclosure(64).lo_fraction() > _PI_LOWER:
        raise AssertionError("pi lower bound not certified")
    return _PI_LOWER


def series_tail_bound(expr_id: str, order: int, radius) -> Fraction:
    """T >= 0 with |f(x) - P_order(x)| <= T x^(order+1) for 0 < x <= radius.

    sin, cos and cos2x use the alternating-series remainder (terms decrease
    once the index passes the radius); tan uses the two-sided Bernoulli bound,
    which gives t_k <= 3 (2/pi)^(2k) for every k >= 1.
    """
    r = Fraction(radius)
    if r < 0:
        raise DomainError("radius must be non-negative")
    if r == 0:
        return Fraction(0)
    if order < 0:
        raise ValueError("order must be >= 0")
    if expr_id in ("sin", "cos", "cos2x"):
        if r > 2 or (expr_id == "cos2x" and r > 1):
            raise DomainError("radius too large for the alternating remainder")
        parity = 1 if expr_id == "sin" else 0
        j = order + 1
        if j % 2 != parity:
            j += 1
        # first omitted term must be past the point where terms start to decrease
        scale = 2 if expr_id == "cos2x" else 1
        if j < 2:
            j += 2
        return Fraction(scale**j) * r ** (j - order - 1) / factorial(j)
    if expr_id == "tan":
        if r > Fraction(3, 2):
            raise DomainError("radius must be at most 3/2 (< pi/2)")
        q = (2 * r / _pi_lower()) ** 2
        k0 = (order + 1) // 2 + 1  # first k with 2k - 1 > order
        lead = 3 * (2 / _pi_lower()) ** (2 * k0) * r ** (2 * k0 - 2 - order)
        return lead / (1 - q)
    raise ValueError(f"no tail bound available for {expr_id!r}")
