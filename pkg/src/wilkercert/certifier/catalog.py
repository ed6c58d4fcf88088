"""The fixed catalog of inequalities, one strict sign condition per entry.

Every entry names a gap function that is positive exactly when the
inequality holds.  ``group`` ties the sides of a double inequality together
and ``role`` says where the statement comes from: a result proved here, a
known background inequality, a proof kernel, or a conjecture kept as a
sweep target.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

HALF_PI_DOMAIN = "pi/2"


@dataclass(frozen=True)
class InequalityCase:
    id: str
    group: str
    role: str
    statement: str
    n_range: tuple[int, int] | None = None
    domain_hi: object = HALF_PI_DOMAIN
    expected: str = "PROVED"

    @property
    def gap(self) -> str:
        return self.id

    def domain_text(self) -> str:
        hi = "pi/2" if self.domain_hi == HALF_PI_DOMAIN else str(self.domain_hi)
        return f"(0, {hi})"

    def check_n(self, n: int | None) -> None:
        if self.n_range is None:
            if n is not None:
                raise ValueError(f"{self.id} takes no parameter n")
            return
        lo, hi = self.n_range
        if n is None or not lo <= n <= hi:
            raise ValueError(f"{self.id} needs n in {lo}..{hi}")


_S = "s = sin x / x, t = tan x / x"

CASES: tuple[InequalityCase, ...] = (
    InequalityCase("tan-tail-lower", "tan-tail", "theorem",
                   "tan x - sum_(k<=n) t_k x^(2k-1) > t_(n+1) x^(2n) tan x", (1, 8)),
    InequalityCase("tan-tail-upper", "tan-tail", "theorem",
                   "tan x - sum_(k<=n) t_k x^(2k-1) < (2/pi)^(2n) x^(2n) tan x", (1, 8)),
    InequalityCase("wilker-family-lower", "wilker-family", "theorem",
                   "s^2 + t > 2 + sum_(k=3..n) c_k x^(2k-2) + c_(n+1) x^(2n-1) tan x", (3, 8)),
    InequalityCase("wilker-family-upper", "wilker-family", "theorem",
                   "s^2 + t < 2 + sum_(k=3..n) c_k x^(2k-2) + (2/pi)^(2n) x^(2n-1) tan x", (3, 8)),
    InequalityCase("huygens-family-lower", "huygens-family", "theorem",
                   "2s + t > 3 + sum_(k=3..n) d_k x^(2k-2) + d_(n+1) x^(2n-1) tan x", (2, 8)),
    InequalityCase("huygens-family-upper", "huygens-family", "theorem",
                   "2s + t < 3 + sum_(k=3..n) d_k x^(2k-2) + (2/pi)^(2n) x^(2n-1) tan x", (2, 8)),
    InequalityCase("wilker-sharp-lower", "wilker-sharp", "theorem",
                   "s^2 + t > 2 + (8/45 - 8/945 x^2 + a x^4) x^3 tan x, a = 16/14175"),
    InequalityCase("wilker-sharp-upper", "wilker-sharp", "theorem",
                   "s^2 + t < 2 + (8/45 - 8/945 x^2 + b x^4) x^3 tan x, b = (241920 - 2688 pi^4 + 32 pi^6)/(945 pi^8)"),
    InequalityCase("wilker2-sharp-lower", "wilker2-sharp", "theorem",
                   "1/s^2 + 1/t > 2 + (2/45 - 2/315 x^2 - alpha x^4) x^3 tan x, alpha = (224 - 8 pi^2)/(315 pi^4)"),
    InequalityCase("wilker2-sharp-upper", "wilker2-sharp", "theorem",
                   "1/s^2 + 1/t < 2 + (2/45 - 2/315 x^2 - beta x^4) x^3 tan x, beta = 4/1575"),
    InequalityCase("huygens-sharp-lower", "huygens-sharp", "theorem",
                   "2s + t > 3 + (3/20 + 1/280 x^2 + lambda x^4) x^3 tan x, lambda = 23/33600"),
    InequalityCase("huygens-sharp-upper", "huygens-sharp", "theorem",
                   "2s + t < 3 + (3/20 + 1/280 x^2 + mu x^4) x^3 tan x, mu = (17920 - 168 pi^4 - pi^6)/(70 pi^8)"),
    InequalityCase("huygens2-sharp-lower", "huygens2-sharp", "theorem",
                   "2/s + 1/t > 3 + (1/60 - 1/280 x^2 - rho x^4) x^3 tan x, rho = (56 - 3 pi^2)/(210 pi^4)"),
    InequalityCase("huygens2-sharp-upper", "huygens2-sharp", "theorem",
                   "2/s + 1/t < 3 + (1/60 - 1/280 x^2 - varrho x^4) x^3 tan x, varrho = 83/100800"),
    InequalityCase("wilker", "wilker", "background", "s^2 + t > 2"),
    InequalityCase("wilker-classic-lower", "wilker-classic", "background", "s^2 + t > 2 + (2/pi)^4 x^3 tan x"),
    InequalityCase("wilker-classic-upper", "wilker-classic", "background", "s^2 + t < 2 + 8/45 x^3 tan x"),
    InequalityCase("huygens", "huygens", "background", "2s + t > 3"),
    InequalityCase("wilker2", "wilker2", "background", "1/s^2 + 1/t > 2"),
    InequalityCase("sinc-cos-left", "sinc-cos", "background", "sin x / x < (2 + cos x)/3"),
    InequalityCase("sinc-cos-right", "sinc-cos", "background", "(2 + cos x)/3 < (x / sin x + cos x)/2"),
    InequalityCase("half-wilker2-left", "half-wilker2", "background", "(1/s^2 + 1/t)/2 > (2/s + 1/t)/3"),
    InequalityCase("half-wilker2-right", "half-wilker2", "background", "(2/s + 1/t)/3 > 1"),
    InequalityCase("chain-1", "chain", "background", "(s^2 + t)/2 > s^2 t"),
    InequalityCase("chain-2", "chain", "background", "s^2 t > (2s + t)/3"),
    InequalityCase("chain-3", "chain", "background", "(2s + t)/3 > (s^2 t)^(1/3), compared after cubing"),
    InequalityCase("chain-4", "chain", "background", "(s^2 t)^(1/3) > (1/s^2 + 1/t)/2, compared after cubing"),
    InequalityCase("chain-5", "chain", "background", "(1/s^2 + 1/t)/2 > (2/s + 1/t)/3"),
    InequalityCase("chain-6", "chain", "background", "(2/s + 1/t)/3 > 1"),
    InequalityCase("wilker-x4-lower", "wilker-x4", "background", "s^2 + t > 2 + 8/45 x^4 + 16/315 x^5 tan x"),
    InequalityCase("wilker-x4-upper", "wilker-x4", "background", "s^2 + t < 2 + 8/45 x^4 + (2/pi)^6 x^5 tan x"),
    InequalityCase("wilker2-cubic-upper", "wilker2-cubic", "background", "1/s^2 + 1/t < 2 + 2/45 x^3 tan x"),
    InequalityCase("huygens-cubic-lower", "huygens-cubic", "background", "2s + t > 3 + 3/20 x^3 tan x"),
    InequalityCase("huygens-cubic-upper", "huygens-cubic", "background", "2s + t < 3 + (2/pi)^4 x^3 tan x"),
    InequalityCase("wilker-quartic-lower", "wilker-quartic", "background",
                   "s^2 + t > 2 + (8/45 - 8/945 x^2) x^3 tan x", domain_hi=Fraction(1)),
    InequalityCase("wilker-quartic-upper", "wilker-quartic", "background",
                   "s^2 + t < 2 + (8/45 - 8/945 x^2 + 16/14175 x^4) x^3 tan x (false: the constant is a lower one)",
                   domain_hi=Fraction(1), expected="REFUTED"),
    InequalityCase("huygens2-cubic-lower", "huygens2-cubic", "background", "2/s + 1/t > 3"),
    InequalityCase("huygens2-cubic-upper", "huygens2-cubic", "background", "2/s + 1/t < 3 + 1/60 x^3 tan x"),
    InequalityCase("kernel-g", "kernel", "kernel", "g(x) > 0, the numerator of 945 x^10 sin^2 x f'(x)"),
    InequalityCase("kernel-G", "kernel", "kernel", "G(x) > 0, the numerator of 420 x^8 sin^3 x F'(x)"),
    InequalityCase("wilker2-family-upper", "wilker2-family", "conjecture",
                   "1/s^2 + 1/t < 2 + sum_(k=2..n) e_k x^(2k) + n 2^(2n+3) |B_(2n+2)|/(2n+2)! x^(2n+1) tan x", (1, 6)),
)

CATALOG: dict[str, InequalityCase] = {c.id: c for c in CASES}

# stronger bound first, weaker second; the stronger bound should sit closer to the expression
DOMINANCE_PAIRS: tuple[tuple[str, str], ...] = (
    ("wilker-sharp-lower", "wilker-classic-lower"),
    ("wilker-sharp-upper", "wilker-classic-upper"),
    ("wilker-sharp-lower", "wilker-x4-lower"),
    ("wilker-sharp-upper", "wilker-x4-upper"),
    ("wilker2-sharp-upper", "wilker2-cubic-upper"),
    ("huygens-sharp-lower", "huygens-cubic-lower"),
    ("huygens-sharp-upper", "huygens-cubic-upper"),
    ("huygens2-sharp-lower", "huygens2-cubic-lower"),
    ("huygens2-sharp-upper", "huygens2-cubic-upper"),
)


def get_case(case_id: str) -> InequalityCase:
    try:
        return CATALOG[case_id]
    except KeyError:
        raise KeyError(f"unknown case {case_id!r}") from None
