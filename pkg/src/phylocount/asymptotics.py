"""Asymptotic estimates for the counting sequences and row statistics.

Everything here is anchored at two constants: r = r(n), the unique
positive solution of r*e^r = n (the saddle point behind the Moser-Wyman
Bell asymptotics), and rho = 2*ln(2) - 1, the dominant singularity of
the tree-count generating function.  Estimates whose true size exceeds
float range (Bell numbers, tree totals, row maxima) are produced as
natural logs and compared to exact values through log ratios.

None of the formulas is derived here; each is evaluated as written and
regression-tested against the exact routes, with residuals scaled by
the claimed error order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .distribution import DistStats, stats_S_closed, stats_Sstar_closed, stats_T_closed
from .triangles import bell, schroeder_t

RHO = 2.0 * math.log(2.0) - 1.0

ORDER_INV_N = "O(1/n)"
ORDER_INV_LOG = "O(1/ln n)"
ORDER_TAIL = "O(n^-9/2 scale)"
ORDER_HEURISTIC = "heuristic"


@dataclass(frozen=True)
class AsympEstimate:
    """One asymptotic value plus the inputs that produced it.

    When log_scale is set, value is the natural log of the estimated
    quantity; otherwise it is the quantity itself.
    """

    value: float
    error_order: str
    n: float
    r: float | None = None
    rho: float | None = None
    log_scale: bool = False

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "error_order": self.error_order,
            "n": self.n,
            "r": self.r,
            "rho": self.rho,
            "log_scale": self.log_scale,
        }


@dataclass(frozen=True)
class ModeEstimate:
    """Predicted mode location and (log of) the row value there."""

    family: str
    n: int
    j_estimate: float
    log_value: float


@dataclass(frozen=True)
class ConvergencePoint:
    n: int
    exact: float
    estimate: float
    scaled_residual: float


@dataclass(frozen=True)
class ConvergenceRecord:
    """Scaled residuals |exact - estimate| * n across a ladder of n."""

    family: str
    quantity: str
    error_order: str
    points: tuple[ConvergencePoint, ...]

    def bounded_by(self, factor: float = 3.0) -> bool:
        """True when no later residual exceeds factor times the first."""
        base = self.points[0].scaled_residual
        return all(p.scaled_residual <= factor * base for p in self.points[1:])


def log_big(x: int) -> float:
    """Natural log of a positive integer of any size.

    Splits off the top 64 bits so the result carries full float
    precision even when x itself is far beyond float range.
    """
    if x <= 0:
        raise ValueError(f"need a positive integer, got {x}")
    shift = x.bit_length() - 64
    if shift <= 0:
        return math.log(x)
    return math.log(x >> shift) + shift * math.log(2.0)


def _halley_we_w(y: float, w: float, lo: float, hi: float, scale: float) -> float:
    # solve w*e^w = y on the bracket (lo, hi) where the map is increasing;
    # Halley steps, bisection whenever a step is non-finite or escapes
    for _ in range(100):
        e = math.exp(w)
        f = w * e - y
        if abs(f) <= 1e-16 * scale:
            break
        if f > 0.0:
            hi = w
        else:
            lo = w
        fp = e * (1.0 + w)
        denom = 2.0 * fp * fp - f * e * (2.0 + w)
        cand = w - 2.0 * f * fp / denom if denom != 0.0 else math.nan
        if not (math.isfinite(cand) and lo < cand < hi):
            cand = 0.5 * (lo + hi)
        if cand == w:
            break
        w = cand
    return w


def lambert_r(n: float) -> float:
    """The positive solution of r * e^r = n, to |r e^r - n| <= 1e-13 n."""
    x = float(n)
    if not x > 0.0:
        raise ValueError(f"need n > 0, got {n}")
    if x >= 3.0:
        ln = math.log(x)
        guess = ln - math.log(ln)
    else:
        guess = x / (1.0 + x)
    hi = max(guess, 1.0)
    while hi * math.exp(hi) < x:
        hi *= 2.0
    return _halley_we_w(x, min(guess, hi), 0.0, hi, x)


def lambert_w_principal(y: float) -> float:
    """Principal-branch W(y) for -1/e < y < 0 (so W in (-1, 0))."""
    if not -1.0 / math.e < y < 0.0:
        raise ValueError(f"need -1/e < y < 0, got {y}")
    if y < -0.3:
        # branch-point series in p = sqrt(2(1 + e y))
        p = math.sqrt(2.0 * (1.0 + math.e * y))
        w = -1.0 + p * (1.0 - p * (1.0 / 3.0 - p * (11.0 / 72.0)))
    else:
        w = y * (1.0 - y)
    w = min(max(w, -1.0 + 1e-12), -1e-18)
    return _halley_we_w(y, w, -1.0, 0.0, abs(y))


def bell_moser_wyman(n: int) -> AsympEstimate:
    """Moser-Wyman Bell estimate, as a natural log.

    log B_n ~ -log(r+1)/2 + n(r + 1/r - 1) - 1
              + log(1 - r^2 (2r^2 + 7r + 10) / (24 n (r+1)^3)).
    """
    if n < 10:
        raise ValueError(f"need n >= 10, got {n}")
    r = lambert_r(n)
    corr = r * r * (2.0 * r * r + 7.0 * r + 10.0) / (24.0 * n * (r + 1.0) ** 3)
    value = -0.5 * math.log(r + 1.0) + n * (r + 1.0 / r - 1.0) - 1.0 + math.log1p(-corr)
    return AsympEstimate(value, ORDER_INV_N, n, r=r, log_scale=True)


def moser_wyman_log_ratio(n: int) -> float:
    """log(estimate) - log(exact B_n); tends to 0."""
    return bell_moser_wyman(n).value - log_big(bell(n))


def stats_S_asymp(n: int) -> tuple[AsympEstimate, AsympEstimate]:
    """Saddle-point expansions of the partition-class mean and variance.

    mean ~ n/r - 1 + r/(2(r+1)^2),
    variance ~ n/(r(r+1)) + r(r-1)/(2(r+1)^4) - 1, both to O(1/n).
    """
    if n < 10:
        raise ValueError(f"need n >= 10, got {n}")
    r = lambert_r(n)
    mean = n / r - 1.0 + r / (2.0 * (r + 1.0) ** 2)
    var = n / (r * (r + 1.0)) + r * (r - 1.0) / (2.0 * (r + 1.0) ** 4) - 1.0
    return (
        AsympEstimate(mean, ORDER_INV_N, n, r=r),
        AsympEstimate(var, ORDER_INV_N, n, r=r),
    )


def stats_Sstar_asymp(n: int) -> tuple[AsympEstimate, AsympEstimate]:
    """Singleton-free analogue of stats_S_asymp, to O(1/n).

    mean ~ n/r - r - 1/(2r) + 1/(2r(r+1)^2),
    variance ~ n/(r(r+1)) - r + 1 - 2/(r+1) - 1/(2(r+1)^2)
               - 1/(2(r+1)^3) + 1/(r+1)^4.
    """
    if n < 10:
        raise ValueError(f"need n >= 10, got {n}")
    r = lambert_r(n)
    q = r + 1.0
    mean = n / r - r - 1.0 / (2.0 * r) + 1.0 / (2.0 * r * q * q)
    var = (
        n / (r * q)
        - r
        + 1.0
        - 2.0 / q
        - 1.0 / (2.0 * q * q)
        - 1.0 / (2.0 * q ** 3)
        + 1.0 / q ** 4
    )
    return (
        AsympEstimate(mean, ORDER_INV_N, n, r=r),
        AsympEstimate(var, ORDER_INV_N, n, r=r),
    )


def stats_T_asymp(n: int) -> tuple[AsympEstimate, AsympEstimate]:
    """Tree internal-vertex mean and variance (row T(n+1, .)), to O(1/n).

    mean ~ (1-rho)/(2 rho) n + (3/4 - ln 2)/rho,
    variance ~ (n/4)(1/rho^2 - 2/rho - 1)
               + (1 + 4 ln 2 - 8 ln^2 2)/(8 rho^2).
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    ln2 = math.log(2.0)
    mean = (1.0 - RHO) / (2.0 * RHO) * n + (0.75 - ln2) / RHO
    var = (
        0.25 * n * (1.0 / RHO ** 2 - 2.0 / RHO - 1.0)
        + (1.0 + 4.0 * ln2 - 8.0 * ln2 * ln2) / (8.0 * RHO ** 2)
    )
    return (
        AsympEstimate(mean, ORDER_INV_N, n, rho=RHO),
        AsympEstimate(var, ORDER_INV_N, n, rho=RHO),
    )


def stats_S_salvy(n: int) -> tuple[AsympEstimate, AsympEstimate]:
    """Log-only expansions of the partition-class mean and variance.

    mean ~ n/ln n + n ln ln n / ln^2 n,
    variance ~ n/ln^2 n + n(2 ln ln n - 1)/ln^3 n.  Convergence is
    O(1/ln n) inside the brackets, so only loose bands are testable.
    The same formulas serve the singleton-free family: the two means
    differ by O(r), far below the error carried here.
    """
    if n < 16:
        raise ValueError(f"need n >= 16, got {n}")
    big_l = math.log(n)
    ll = math.log(big_l)
    mean = n / big_l + n * ll / (big_l * big_l)
    var = n / big_l ** 2 + n * (2.0 * ll - 1.0) / big_l ** 3
    return (
        AsympEstimate(mean, ORDER_HEURISTIC, n),
        AsympEstimate(var, ORDER_HEURISTIC, n),
    )


stats_Sstar_salvy = stats_S_salvy


def mode_Sstar_asymp(n: int) -> ModeEstimate:
    """Predicted mode of the singleton-free row: location n/r, value
    r B_{n-1}/sqrt(2 pi n) (returned as a log, B_{n-1} exact)."""
    if n < 10:
        raise ValueError(f"need n >= 10, got {n}")
    r = lambert_r(n)
    log_value = math.log(r) + log_big(bell(n - 1)) - 0.5 * math.log(2.0 * math.pi * n)
    return ModeEstimate("sstar", n, n / r, log_value)


def mode_T_asymp(n: int) -> ModeEstimate:
    """Predicted mode of row T(n+1, .): location (1-rho)/(2 rho) n,
    value n!/(pi sqrt(2) n rho^{n+1/2} sqrt(1/rho^2 - 2/rho - 1))."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    spread = math.sqrt(1.0 / RHO ** 2 - 2.0 / RHO - 1.0)
    log_value = (
        math.lgamma(n + 1.0)
        - math.log(math.pi * math.sqrt(2.0))
        - math.log(n)
        - (n + 0.5) * math.log(RHO)
        - math.log(spread)
    )
    return ModeEstimate("t", n, (1.0 - RHO) / (2.0 * RHO) * n, log_value)


_T_BRACKET = (0.5, 3.0 / 16.0, 25.0 / 256.0)


def schroeder_t_asymp(n: int, terms: int = 3) -> AsympEstimate:
    """Tree-total estimate t_n ~ n!/(sqrt(pi) rho^{n-1/2}) * bracket,
    bracket = 1/(2 n^{3/2}) + 3/(16 n^{5/2}) + 25/(256 n^{7/2}),
    returned as a natural log.  terms trims the bracket (1..3)."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    if not 1 <= terms <= 3:
        raise ValueError(f"bracket has 1..3 terms, got {terms}")
    bracket = 0.0
    for i in range(terms):
        bracket += _T_BRACKET[i] / n ** (1.5 + i)
    value = (
        math.lgamma(n + 1.0)
        - 0.5 * math.log(math.pi)
        - (n - 0.5) * math.log(RHO)
        + math.log(bracket)
    )
    return AsympEstimate(value, ORDER_TAIL, n, rho=RHO, log_scale=True)


def schroeder_log_ratio(n: int, terms: int = 3) -> float:
    """log(estimate) - log(exact t_n); tends to 0."""
    return schroeder_t_asymp(n, terms).value - log_big(schroeder_t(n))


def h1z_numeric_check(z: float, order: int = 30) -> float:
    """Closed form minus truncated series for the tree-count EGF at x=1.

    Closed form: -W(-e^{(z-1)/2}/2) + (z-1)/2 on the principal branch;
    series: sum t_k z^k / k! for k = 1..order.  Valid for 0 < z < rho;
    the residual is dominated by the series tail.
    """
    if not 0.0 < z < RHO:
        raise ValueError(f"need 0 < z < {RHO}, got {z}")
    w = lambert_w_principal(-0.5 * math.exp((z - 1.0) / 2.0))
    closed = -w + (z - 1.0) / 2.0
    series = 0.0
    for k in range(1, order + 1):
        series += float(Fraction(schroeder_t(k), math.factorial(k))) * z ** k
    return closed - series


_CLOSED = {"s": stats_S_closed, "sstar": stats_Sstar_closed, "t": stats_T_closed}
_ASYMP = {"s": stats_S_asymp, "sstar": stats_Sstar_asymp, "t": stats_T_asymp}
_DEFAULT_LADDER = {"s": (100, 200, 400, 800), "sstar": (100, 200, 400, 800), "t": (100, 200, 400)}


def stats_convergence(
    family: str, ns: Sequence[int] | None = None
) -> tuple[ConvergenceRecord, ConvergenceRecord]:
    """Scaled residuals of the O(1/n) stat expansions along a ladder.

    For each n: exact closed-form mean/variance against the asymptotic
    estimate, residual scaled by n.  Boundedness of the scaled residual
    is the testable form of an O(1/n) claim.
    """
    if family not in _CLOSED:
        raise ValueError(f"no asymptotic route for family {family!r}")
    ladder = tuple(ns) if ns is not None else _DEFAULT_LADDER[family]
    if not ladder:
        raise ValueError("empty ladder")
    mean_pts = []
    var_pts = []
    for n in ladder:
        exact = _CLOSED[family](n)
        est_mean, est_var = _ASYMP[family](n)
        em = float(exact.mean)
        ev = float(exact.variance)
        mean_pts.append(ConvergencePoint(n, em, est_mean.value, abs(em - est_mean.value) * n))
        var_pts.append(ConvergencePoint(n, ev, est_var.value, abs(ev - est_var.value) * n))
    return (
        ConvergenceRecord(family, "mean", ORDER_INV_N, tuple(mean_pts)),
        ConvergenceRecord(family, "variance", ORDER_INV_N, tuple(var_pts)),
    )
