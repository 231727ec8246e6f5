"""Row distributions of the counting triangles, treated the Harper way.

Each triangle row, normalized by its sum, is a probability distribution
on the class count (or internal-vertex count).  Expectation and variance
come from the probability generating function A(x): the mean is
A'(1)/A(1) and the variance is A''(1)/A(1) + mean - mean^2, all in exact
rational arithmetic.  The same quantities have closed forms as ratios of
the row-sum sequences (Bell numbers, their singleton-free variant, and
the tree totals); both routes are exposed and must agree exactly.

Limit behaviour is measured, not assumed: sup distance between the
standardized row CDF and the normal CDF, the local-limit value at the
mode against 1/sqrt(2*pi), and the mode's offset from the mean in
standard deviations.

Convention for the tree family: statistics are indexed by the degree of
the generating polynomial, so ``n`` refers to the distribution of
internal vertices over trees with n+1 leaves, i.e. the triangle row
T(n+1, .).  The other four families use the raw row index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .triangles import ROW_FAMILIES, bell, bell_star, schroeder_t, triangle_row

LLT_TARGET = 1.0 / math.sqrt(2.0 * math.pi)


class DegenerateVarianceError(ValueError):
    """Raised when a limit statistic is requested for a spreadless row."""


@dataclass(frozen=True)
class DistStats:
    """Exact mean and variance of one row distribution."""

    family: str
    n: int
    mean: Fraction
    variance: Fraction

    @property
    def mean_f(self) -> float:
        return float(self.mean)

    @property
    def var_f(self) -> float:
        return float(self.variance)

    @property
    def stddev_f(self) -> float:
        return math.sqrt(float(self.variance))

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "mean": str(self.mean),
            "mean_float": self.mean_f,
            "variance": str(self.variance),
            "variance_float": self.var_f,
        }


@dataclass(frozen=True)
class LimitReport:
    """Finite-n distance measurements against the normal limit."""

    family: str
    n: int
    sup_cdf_distance: float
    llt_value_at_mode: float
    mode_index: int
    mode_offset: float
    mode_tie: bool = False

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "sup_cdf_distance": self.sup_cdf_distance,
            "llt_value_at_mode": self.llt_value_at_mode,
            "llt_target": LLT_TARGET,
            "mode_index": self.mode_index,
            "mode_offset": self.mode_offset,
            "mode_tie": self.mode_tie,
        }


def _stats_row(family: str, n: int) -> tuple[int, tuple[int, ...]]:
    if family not in ROW_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family == "t":
        # tree statistics are indexed by polynomial degree; see module doc
        return triangle_row("t", n + 1)
    return triangle_row(family, n)


def row_stats_pgf(family: str, n: int) -> DistStats:
    """Mean and variance of a row via its generating polynomial.

    Exact throughout: with A(x) = sum c_k x^k over the row support,
    mean = A'(1)/A(1) and variance = A''(1)/A(1) + mean - mean^2.
    """
    k_min, row = _stats_row(family, n)
    if not row:
        raise ValueError(f"row {family}/{n} is empty")
    a0 = 0
    a1 = 0
    a2 = 0
    for j, c in enumerate(row):
        k = k_min + j
        a0 += c
        a1 += k * c
        a2 += k * (k - 1) * c
    mean = Fraction(a1, a0)
    variance = Fraction(a2, a0) + mean - mean * mean
    if variance < 0:
        raise AssertionError(f"negative variance for {family}/{n}")
    if not k_min <= mean <= k_min + len(row) - 1:
        raise AssertionError(f"mean outside row support for {family}/{n}")
    return DistStats(family, n, mean, variance)


def stats_S_closed(n: int) -> DistStats:
    """Partition-class statistics from Bell-number ratios.

    mean = B_{n+1}/B_n - 1, variance = B_{n+2}/B_n - (B_{n+1}/B_n)^2 - 1.
    Agrees exactly with row_stats_pgf("s", n).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    b0 = bell(n)
    mean = Fraction(bell(n + 1), b0) - 1
    variance = Fraction(bell(n + 2), b0) - Fraction(bell(n + 1), b0) ** 2 - 1
    return DistStats("s", n, mean, variance)


def stats_Sstar_closed(n: int) -> DistStats:
    """Singleton-free class statistics from ratios of B* numbers.

    Needs n >= 4 so every ratio B*_{n-2}/B*_n is over positive terms;
    the PGF route covers 2 <= n < 4.
    """
    if n < 4:
        raise ValueError(f"ratio route needs n >= 4, got {n}")
    b0 = bell_star(n)
    up1 = Fraction(bell_star(n + 1), b0)
    dn1 = Fraction(bell_star(n - 1), b0)
    mean = up1 - n * dn1
    variance = (
        Fraction(bell_star(n + 2), b0)
        + 2 * n * Fraction(bell_star(n + 1) * bell_star(n - 1), b0 * b0)
        + n * (n - 1) * Fraction(bell_star(n - 2), b0)
        - up1 * up1
        - n * n * dn1 * dn1
        - n * dn1
        - (2 * n + 1)
    )
    return DistStats("sstar", n, mean, variance)


def stats_T_closed(n: int) -> DistStats:
    """Internal-vertex statistics of trees with n+1 leaves, from totals.

    mean = t_{n+2}/(2 t_{n+1}) - (n+1)/2 and
    variance = t_{n+3}/(4 t_{n+1}) - t_{n+2}^2/(4 t_{n+1}^2)
               - t_{n+2}/(2 t_{n+1}) - (n+1)/4.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    t1 = schroeder_t(n + 1)
    t2 = schroeder_t(n + 2)
    t3 = schroeder_t(n + 3)
    mean = Fraction(t2, 2 * t1) - Fraction(n + 1, 2)
    variance = (
        Fraction(t3, 4 * t1)
        - Fraction(t2 * t2, 4 * t1 * t1)
        - Fraction(t2, 2 * t1)
        - Fraction(n + 1, 4)
    )
    return DistStats("t", n, mean, variance)


def normal_cdf(x: float) -> float:
    """Standard normal CDF via erfc; absolute error well under 1e-12."""
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def limit_report(family: str, n: int) -> LimitReport:
    """Measure a row against its normal limit.

    sup_cdf_distance is the Kolmogorov distance of the standardized row
    distribution from the standard normal, evaluated on both sides of
    every jump.  llt_value_at_mode is stddev * (row max)/(row sum); the
    limit target is 1/sqrt(2*pi).  Ties at the mode go to the smallest
    index and raise the mode_tie flag.
    """
    st = row_stats_pgf(family, n)
    if st.variance <= 0:
        raise DegenerateVarianceError(f"row {family}/{n} has zero variance")
    k_min, row = _stats_row(family, n)
    total = sum(row)
    mean_f = st.mean_f
    std_f = st.stddev_f

    sup = 0.0
    cum = 0
    best = -1
    mode_j = 0
    tie = False
    for j, c in enumerate(row):
        x = (k_min + j - mean_f) / std_f
        phi = normal_cdf(x)
        below = cum / total
        cum += c
        above = cum / total
        gap = max(abs(below - phi), abs(above - phi))
        if gap > sup:
            sup = gap
        if c > best:
            best, mode_j, tie = c, j, False
        elif c == best:
            tie = True
    llt = std_f * (row[mode_j] / total)
    offset = (k_min + mode_j - mean_f) / std_f
    return LimitReport(family, n, sup, llt, k_min + mode_j, offset, tie)


def clt_distance(family: str, n: int) -> LimitReport:
    """Kolmogorov distance of the standardized row CDF from the normal."""
    return limit_report(family, n)


def llt_check(family: str, n: int) -> LimitReport:
    """Local-limit value at the mode and the mode's standardized offset."""
    return limit_report(family, n)
