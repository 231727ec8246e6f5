"""Row generating polynomials and exact root certification.

The triangle rows are carried as integer polynomials:

``s_star_poly(m)``  x * (row m of the singleton-free triangle), built by
                    S_m = (m-1) x S_{m-2} + x S'_{m-1}
``tree_poly(n)``    coefficients T(n+1,k), built by
                    P_n = n x P_{n-1} + (x + x^2) P'_{n-1}

All root work is exact.  Evaluation points are dyadic rationals, so a
polynomial sign is a pure integer computation (shift-based Horner), and
every reported interval is a certificate: the endpoint signs are exact,
and a counting argument pins the number of roots per interval to one.

Two certification routes are provided.  ``isolate_real_roots`` is the
generic one (derivative chain, monotone segments).  The chain verifiers
``verify_tree_roots`` and ``verify_interlacing`` walk the polynomial
recurrences themselves, reusing each certified root layout to seed the
next index; that is what makes degree-200 certification cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "IntPolynomial",
    "s_star_poly",
    "tree_poly",
    "RootIntervals",
    "RootCountError",
    "isolate_real_roots",
    "DEFAULT_WIDTH",
    "verify_tree_roots",
    "verify_interlacing",
    "TreeRootReport",
    "InterlaceReport",
    "check_slc",
    "check_newton",
    "BivariateSeries",
    "functional_equation_residual",
]

DEFAULT_WIDTH = Fraction(1, 2**48)


class RootCountError(RuntimeError):
    """Root certification failed: found a layout that cannot be completed."""


# -- integer polynomials -----------------------------------------------------

class IntPolynomial:
    """Dense integer polynomial, constant coefficient first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = list(coeffs)
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial reports -1."""
        if self.coeffs == (0,):
            return -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k >= 1)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    def sign_at(self, x) -> int:
        """Exact sign of p(x) at a rational point, as -1, 0 or 1.

        For a dyadic x = a / 2^e the evaluation is integer-only: Horner
        on the numerator with shifts supplying the powers of the
        denominator.  Other rationals take the same route with explicit
        denominator powers.
        """
        f = x if isinstance(x, Fraction) else Fraction(x)
        num, den = f.numerator, f.denominator
        cs = self.coeffs
        if den == 1:
            acc = cs[-1]
            for c in reversed(cs[:-1]):
                acc = acc * num + c
            return (acc > 0) - (acc < 0)
        e = den.bit_length() - 1
        if den == 1 << e:
            acc = cs[-1]
            sh = 0
            for c in reversed(cs[:-1]):
                sh += e
                acc = acc * num + (c << sh)
            return (acc > 0) - (acc < 0)
        acc = cs[-1]
        pw = 1
        for c in reversed(cs[:-1]):
            pw *= den
            acc = acc * num + c * pw
        return (acc > 0) - (acc < 0)


_S_STAR_POLYS: list[IntPolynomial] = []
_TREE_POLYS: list[IntPolynomial] = []


def s_star_poly(m: int) -> IntPolynomial:
    """Generating polynomial of singleton-free partitions of an m-set.

    Coefficient of x^k is the count with k classes; the constant term is
    zero, so x = 0 is always a simple root for m >= 2.  m = 1 gives the
    zero polynomial.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    while len(_S_STAR_POLYS) <= m:
        j = len(_S_STAR_POLYS)
        if j <= 1:
            _S_STAR_POLYS.append(IntPolynomial([0]))
        elif j == 2:
            _S_STAR_POLYS.append(IntPolynomial([0, 1]))
        else:
            prev = _S_STAR_POLYS[j - 1]
            prev2 = _S_STAR_POLYS[j - 2]
            coeffs = [0] * (j // 2 + 1)
            for k, c in enumerate(prev2.coeffs):
                if c:
                    coeffs[k + 1] += (j - 1) * c
            for k, c in enumerate(prev.derivative().coeffs):
                if c:
                    coeffs[k + 1] += c
            _S_STAR_POLYS.append(IntPolynomial(coeffs))
    return _S_STAR_POLYS[m]


def tree_poly(n: int) -> IntPolynomial:
    """Generating polynomial of trees with n+1 labeled leaves by
    internal-vertex count; tree_poly(0) = 1."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    while len(_TREE_POLYS) <= n:
        j = len(_TREE_POLYS)
        if j == 0:
            _TREE_POLYS.append(IntPolynomial([1]))
        elif j == 1:
            _TREE_POLYS.append(IntPolynomial([0, 1]))
        else:
            prev = _TREE_POLYS[j - 1]
            coeffs = [0] * (j + 1)
            for k, c in enumerate(prev.coeffs):
                if c:
                    coeffs[k + 1] += j * c
            for k, c in enumerate(prev.derivative().coeffs):
                if c:
                    coeffs[k + 1] += c
                    coeffs[k + 2] += c
            _TREE_POLYS.append(IntPolynomial(coeffs))
    return _TREE_POLYS[n]


# -- dyadic interval machinery ------------------------------------------------

def _simple_dyadic_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Dyadic point in the middle half of (lo, hi) with the smallest
    possible denominator, keeping evaluation numerators tiny."""
    w = hi - lo
    a = lo + w / 4
    b = hi - w / 4
    gap = b - a
    t = max(0, gap.denominator.bit_length() - gap.numerator.bit_length())
    while True:
        m = -((-a.numerator << t) // a.denominator)  # ceil(a * 2^t)
        cand = Fraction(m, 1 << t)
        if cand <= b:
            return cand
        t += 1


class _Rec:
    """Certified isolating interval for one root: sign(lo), sign(hi)
    are exact and differ; lo == hi marks an exact rational root."""

    __slots__ = ("lo", "hi", "slo", "shi", "gen")

    def __init__(self, lo: Fraction, hi: Fraction, slo: int, shi: int):
        self.lo, self.hi, self.slo, self.shi = lo, hi, slo, shi
        self.gen = 0

    def is_exact(self) -> bool:
        return self.lo == self.hi

    def refine(self, poly: IntPolynomial) -> None:
        """Halve (roughly) the interval, keeping the root inside."""
        if self.is_exact():
            return
        mid = _simple_dyadic_between(self.lo, self.hi)
        s = poly.sign_at(mid)
        if s == 0:
            self.lo = self.hi = mid
            self.slo = self.shi = 0
        elif s == self.slo:
            self.lo = mid
            self.slo = s
        else:
            self.hi = mid
            self.shi = s
        self.gen += 1

    def cut_point(self) -> Fraction:
        if self.is_exact():
            return self.lo
        return _simple_dyadic_between(self.lo, self.hi)


@dataclass(frozen=True)
class RootIntervals:
    """Sorted disjoint isolating intervals; lo == hi is an exact root."""

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        prev_hi = None
        for lo, hi in self.intervals:
            if lo > hi:
                raise ValueError("interval with lo > hi")
            if prev_hi is not None and lo < prev_hi:
                raise ValueError("intervals out of order or overlapping")
            prev_hi = hi

    @property
    def count(self) -> int:
        return len(self.intervals)

    def exact_roots(self) -> tuple[Fraction, ...]:
        return tuple(lo for lo, hi in self.intervals if lo == hi)

    def covers(self, x) -> bool:
        """True if x lies in one of the intervals (inclusive)."""
        return any(lo <= x <= hi for lo, hi in self.intervals)

    def max_width(self) -> Fraction:
        return max((hi - lo for lo, hi in self.intervals), default=Fraction(0))

    def as_strings(self) -> list[list[str]]:
        return [[str(lo), str(hi)] for lo, hi in self.intervals]


# -- generic isolation (Sturm) ---------------------------------------------------

def _frac_polyrem(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    """Remainder of polynomial division over the rationals."""
    num = num[:]
    while len(num) >= len(den):
        if num[-1] == 0:
            num.pop()
            continue
        shift = len(num) - len(den)
        q = num[-1] / den[-1]
        for i, c in enumerate(den):
            num[shift + i] -= q * c
        num.pop()
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num


def _is_squarefree(p: IntPolynomial) -> bool:
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in p.derivative().coeffs]
    while any(b):
        a, b = b, _frac_polyrem(a, b)
    return len(a) == 1  # gcd with the derivative is a nonzero constant


def _default_bracket(p: IntPolynomial) -> tuple[Fraction, Fraction]:
    lead = abs(p.coeffs[-1])
    big = max(abs(c) for c in p.coeffs)
    b = (big // lead).bit_length() + 1
    bound = Fraction(1 << b)
    return -bound, bound


def _to_primitive(coeffs: list[Fraction]) -> IntPolynomial:
    """Scale by a positive rational to a primitive integer polynomial."""
    den = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    g = math.gcd(*ints)
    if g > 1:
        ints = [c // g for c in ints]
    return IntPolynomial(ints)


def _sturm_sequence(p: IntPolynomial) -> list[IntPolynomial]:
    seq = [p, p.derivative()]
    a = [Fraction(c) for c in seq[0].coeffs]
    b = [Fraction(c) for c in seq[1].coeffs]
    while True:
        r = _frac_polyrem(a, b)
        if not any(r):
            break
        r = [-c for c in r]
        seq.append(_to_primitive(r))
        a, b = b, r
    return seq


def _variations(seq: list[IntPolynomial], x: Fraction) -> int:
    prev = 0
    var = 0
    for q in seq:
        s = q.sign_at(x)
        if s == 0:
            continue
        if prev and s != prev:
            var += 1
        prev = s
    return var


def _isolate(p: IntPolynomial, lo: Fraction, hi: Fraction) -> list[_Rec]:
    """Isolating records for the real roots of squarefree p in [lo, hi],
    sorted.  Sturm variation counts at exact dyadic points certify the
    number of roots per interval; bisection splits until each holds one.
    """
    if p.degree == 1:
        r = Fraction(-p.coeffs[0], p.coeffs[1])
        if lo <= r <= hi:
            return [_Rec(r, r, 0, 0)]
        return []

    seq = _sturm_sequence(p)
    var_memo: dict[Fraction, int] = {}

    def var_at(x: Fraction) -> int:
        got = var_memo.get(x)
        if got is None:
            got = var_memo[x] = _variations(seq, x)
        return got

    out: list[_Rec] = []
    if p.sign_at(lo) == 0:
        out.append(_Rec(lo, lo, 0, 0))

    # Each stack entry is a half-open interval (a, b]; the Sturm count
    # var(a) - var(b) is exactly its number of distinct roots.
    stack = [(lo, hi)]
    guard = 0
    while stack:
        guard += 1
        if guard > 200000:
            raise RootCountError("root isolation did not converge")
        a, b = stack.pop()
        c = var_at(a) - var_at(b)
        if c == 0:
            continue
        sb = p.sign_at(b)
        if c == 1:
            if sb == 0:
                out.append(_Rec(b, b, 0, 0))
                continue
            sa = p.sign_at(a)
            if sa != 0 and sa != sb:
                out.append(_Rec(a, b, sa, sb))
                continue
            # the root at a itself is not the counted one; split to move off it
        mid = _simple_dyadic_between(a, b)
        stack.append((a, mid))
        stack.append((mid, b))
    out.sort(key=lambda r: (r.lo, r.hi))
    return out


def isolate_real_roots(
    poly: IntPolynomial | Sequence[int],
    bracket: tuple[Fraction, Fraction] | None = None,
    width: Fraction | None = DEFAULT_WIDTH,
    expected: int | None = None,
) -> RootIntervals:
    """Certified isolating intervals for the real roots of an integer
    polynomial with no repeated roots.

    bracket   closed search interval; default covers every real root
    width     refine intervals to at most this width (None to skip)
    expected  raise RootCountError unless exactly this many roots found

    Every returned interval has exact, opposite polynomial signs at its
    endpoints and contains exactly one root (the polynomial is strictly
    monotone across it); lo == hi marks an exact rational root.
    """
    p = poly if isinstance(poly, IntPolynomial) else IntPolynomial(poly)
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.degree >= 2 and not _is_squarefree(p):
        raise ValueError("polynomial has repeated roots; isolation needs squarefree input")
    if bracket is None:
        lo, hi = _default_bracket(p)
    else:
        lo, hi = Fraction(bracket[0]), Fraction(bracket[1])
        if lo >= hi:
            raise ValueError("bracket must satisfy lo < hi")
    recs = _isolate(p, lo, hi)
    if expected is not None and len(recs) != expected:
        raise RootCountError(
            f"found {len(recs)} roots in [{lo}, {hi}], expected {expected}"
        )
    if width is not None:
        for rec in recs:
            while not rec.is_exact() and rec.hi - rec.lo > width:
                rec.refine(p)
    return RootIntervals(tuple((r.lo, r.hi) for r in recs))


# -- incremental chain certification -------------------------------------------

_MAX_ROUNDS = 400


class _ChainVerifier:
    """Walks a polynomial recurrence, certifying each index from the
    previous one.

    At index j the polynomial has a simple root at zero plus
    ``expected(j)`` simple negative roots.  Separators placed inside the
    previous index's isolating intervals split the negative axis; exact
    endpoint signs then bracket the new roots, and matching the expected
    count certifies that every bracket holds exactly one root (the root
    budget is exhausted).  ``thick`` mode keeps whole previous intervals
    as separators, so consecutive layers end up as strictly ordered
    interval chains; point mode is cheaper and enough when only count
    and location matter.
    """

    def __init__(self, poly_of, first: int, expected, lower: str, thick: bool):
        self.poly_of = poly_of
        self.first = first
        self.expected = expected
        self.lower = lower        # "minus_one" or "coeff_bound"
        self.thick = thick
        self.recs: dict[int, list[_Rec]] = {}
        self.top = first - 1
        self.last_j = 1

    def ensure(self, j: int) -> None:
        if j < self.first:
            raise ValueError(f"chain starts at {self.first}, got {j}")
        while self.top < j:
            self._step(self.top + 1)
            self.top += 1

    def _step(self, j: int) -> None:
        p = self.poly_of(j)
        cs = p.coeffs
        if cs[0] != 0 or len(cs) < 2 or cs[1] == 0:
            raise RootCountError(f"index {j}: expected a simple zero root")
        want = self.expected(j)
        q_recs = self.recs.get(j - 1, [])
        q_poly = self.poly_of(j - 1)

        lo_pt, lo_sign = self._lower_point(p, q_recs)
        target = -1 if cs[1] > 0 else 1
        cut_cache: dict[int, tuple[int, tuple[Fraction, Fraction, int]]] = {}

        for _ in range(_MAX_ROUNDS):
            thicks = [(lo_pt, lo_pt, lo_sign)]
            stuck = False
            for rec in q_recs:
                hit = cut_cache.get(id(rec))
                if hit is not None and hit[0] == rec.gen:
                    thicks.append(hit[1])
                    continue
                cut = self._separator(p, rec, q_poly)
                if cut is None:
                    stuck = True
                    break
                cut_cache[id(rec)] = (rec.gen, cut)
                thicks.append(cut)
            if stuck:
                continue
            z_pt, z_sign = self._near_zero(p, thicks[-1][1], target)
            thicks.append((z_pt, z_pt, z_sign))

            brackets: list[_Rec] = []
            holes: list[int] = []
            for i, ((_, a_hi, sa), (b_lo, _, sb)) in enumerate(zip(thicks, thicks[1:])):
                if a_hi >= b_lo:
                    raise RootCountError(f"index {j}: separators out of order")
                if sa != sb:
                    brackets.append(_Rec(a_hi, b_lo, sa, sb))
                else:
                    holes.append(i)
            if len(brackets) == want:
                self.recs[j] = brackets
                return
            if len(brackets) > want:
                raise RootCountError(
                    f"index {j}: {len(brackets)} sign changes exceed the root budget {want}"
                )
            # Shortfall: some separator still hides an even number of new
            # roots.  Shrink the previous-layer intervals flanking each
            # silent gap and rebuild.
            for i in holes:
                for qi in (i - 1, i):  # separator i+1 comes from q_recs[i]
                    if 0 <= qi < len(q_recs):
                        q_recs[qi].refine(q_poly)
        raise RootCountError(f"index {j}: certification did not converge")

    def _lower_point(self, p: IntPolynomial, q_recs: list[_Rec]) -> tuple[Fraction, int]:
        if self.lower == "minus_one":
            pt = Fraction(-1)
            s = p.sign_at(pt)
            if s == 0:
                raise RootCountError("-1 is a root; cannot anchor the unit interval")
            return pt, s
        # All roots are real and negative once certified, so their total
        # magnitude is |c_{d-1}| / |c_d|; any power of two beyond that
        # bounds them from below.
        cs = p.coeffs
        b = (abs(cs[-2]) // abs(cs[-1])).bit_length() + 1
        lowest = q_recs[0].lo if q_recs else Fraction(0)
        while True:
            pt = Fraction(-(1 << b))
            if pt < lowest:
                s = p.sign_at(pt)
                if s != 0:
                    return pt, s
            b += 1

    def _near_zero(self, p: IntPolynomial, last_hi: Fraction, target: int) -> tuple[Fraction, int]:
        j = self.last_j
        for _ in range(100000):
            pt = Fraction(-1, 1 << j)
            if pt <= last_hi:
                j += 1
                continue
            s = p.sign_at(pt)
            if s == target:
                self.last_j = j
                return pt, s
            j += 1
        raise RootCountError("no sign agreement approaching zero")

    def _separator(
        self, p: IntPolynomial, rec: _Rec, q_poly: IntPolynomial
    ) -> tuple[Fraction, Fraction, int] | None:
        """Separator derived from one previous-layer interval; None asks
        the caller to retry after the refinements done here."""
        if self.thick:
            # Shrink rec until p has one definite sign across it; the
            # interval itself then separates the two adjacent new roots.
            for _ in range(200):
                sa = p.sign_at(rec.lo)
                if rec.is_exact():
                    if sa == 0:
                        raise RootCountError("shared root between consecutive indices")
                    return rec.lo, rec.hi, sa
                sb = p.sign_at(rec.hi)
                if sa != 0 and sa == sb:
                    return rec.lo, rec.hi, sa
                rec.refine(q_poly)
            return None
        for _ in range(200):
            pt = rec.cut_point()
            s = p.sign_at(pt)
            if s != 0:
                return pt, pt, s
            if rec.is_exact():
                raise RootCountError("shared root between consecutive indices")
            rec.refine(q_poly)
        return None


def _tree_expected(j: int) -> int:
    return j - 1


def _s_expected(m: int) -> int:
    return m // 2 - 1


_TREE_CHAIN = _ChainVerifier(tree_poly, 1, _tree_expected, "minus_one", thick=False)
_S_CHAIN = _ChainVerifier(s_star_poly, 2, _s_expected, "coeff_bound", thick=True)


@dataclass(frozen=True)
class TreeRootReport:
    """Certificate that tree_poly(n) is real-rooted with simple roots:
    one exact zero, the rest strictly inside (-1, 0)."""

    n: int
    degree: int
    negative_intervals: RootIntervals
    ok: bool = True

    @property
    def n_negative(self) -> int:
        return self.negative_intervals.count

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "ok": self.ok,
            "zero_root": True,
            "negative_roots": self.n_negative,
            "intervals": self.negative_intervals.as_strings(),
        }


@dataclass(frozen=True)
class InterlaceReport:
    """Certificate for the two interlacing chains around one even index."""

    n: int
    counts: tuple[int, int, int]
    roots_low: RootIntervals    # index 2n-1
    roots_mid: RootIntervals    # index 2n
    roots_high: RootIntervals   # index 2n+1
    ok: bool = True

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "indices": [2 * self.n - 1, 2 * self.n, 2 * self.n + 1],
            "counts": list(self.counts),
            "ok": self.ok,
            "intervals": {
                str(2 * self.n - 1): self.roots_low.as_strings(),
                str(2 * self.n): self.roots_mid.as_strings(),
                str(2 * self.n + 1): self.roots_high.as_strings(),
            },
        }


def verify_tree_roots(n: int) -> TreeRootReport:
    """Certify the root structure of tree_poly(n) by exact arithmetic.

    The certificate is positional: n-1 disjoint sign-change intervals
    inside (-1, 0) plus the exact root at 0 exhaust the degree-n root
    budget, so all roots are real, simple and located.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    _TREE_CHAIN.ensure(n)
    recs = _TREE_CHAIN.recs[n]
    iv = RootIntervals(tuple((r.lo, r.hi) for r in recs))
    for lo, hi in iv.intervals:
        if not (Fraction(-1) <= lo and hi < 0):
            raise RootCountError(f"interval ({lo}, {hi}) escapes (-1, 0)")
    return TreeRootReport(n=n, degree=n, negative_intervals=iv)


def _interval_chain_ok(left: list[_Rec], right: list[_Rec]) -> bool:
    """True when left[i] < right[i] < left[i+1] as strictly ordered
    intervals (right may be one shorter than left)."""
    for i, r in enumerate(right):
        if i >= len(left) or left[i].hi > r.lo:
            return False
        if i + 1 < len(left) and r.hi > left[i + 1].lo:
            return False
    return True


def verify_interlacing(n: int) -> InterlaceReport:
    """Certify both interlacing chains around the even index 2n.

    Index 2n against 2n-1: every old negative root sits strictly between
    consecutive new ones, the new least root lying below all old roots.
    Index 2n+1 against 2n: every new root sits strictly between
    consecutive old ones, the extra new root between the largest old
    negative root and zero.  All three polynomials share the exact
    root 0.  Certification is by construction: each interval chain was
    built with the previous layer's intervals as separators.
    """
    if n < 2:
        raise ValueError(f"interlacing chains start at n = 2, got {n}")
    _S_CHAIN.ensure(2 * n + 1)
    low = _S_CHAIN.recs[2 * n - 1]
    mid = _S_CHAIN.recs[2 * n]
    high = _S_CHAIN.recs[2 * n + 1]
    counts = (len(low), len(mid), len(high))
    if counts != (n - 2, n - 1, n - 1):
        raise RootCountError(f"unexpected root counts {counts} at n = {n}")
    if not _interval_chain_ok(mid, low):
        raise RootCountError(f"chain at indices {2*n-1},{2*n} is not strictly ordered")
    if len(high) != len(mid) or not _interval_chain_ok(mid, high):
        raise RootCountError(f"chain at indices {2*n},{2*n+1} is not strictly ordered")

    def mk(rs: list[_Rec]) -> RootIntervals:
        return RootIntervals(tuple((r.lo, r.hi) for r in rs))

    return InterlaceReport(
        n=n, counts=counts, roots_low=mk(low), roots_mid=mk(mid), roots_high=mk(high)
    )


# -- row shape checks ----------------------------------------------------------

def check_slc(row: Sequence[int]) -> list[str]:
    """Strict log-concavity violations of a positive row; empty = pass.

    Checks a_k > 0 across the row and a_k^2 > a_{k-1} a_{k+1} at every
    interior index, all in exact integer arithmetic.
    """
    problems = []
    for i, a in enumerate(row):
        if a <= 0:
            problems.append(f"entry {i} is not positive")
    for i in range(1, len(row) - 1):
        if row[i] * row[i] <= row[i - 1] * row[i + 1]:
            problems.append(f"log-concavity fails at interior index {i}")
    return problems


def check_newton(row: Sequence[int]) -> list[str]:
    """Newton inequality violations for a triangle row; empty = pass.

    The row C_1, ..., C_N is read as the polynomial sum C_k x^k with a
    root at 0.  Real-rootedness then strengthens log-concavity to

        C_k^2 >= C_{k-1} C_{k+1} * (k/(k-1)) * ((N-k+1)/(N-k))

    for 2 <= k <= N-1 (Newton's inequality applied after deflating the
    zero root).  Exact integer cross-multiplication throughout.
    """
    c = list(row)
    big_n = len(c)
    problems = []
    for k in range(2, big_n):
        lhs = c[k - 1] * c[k - 1] * (k - 1) * (big_n - k)
        rhs = c[k - 2] * c[k] * k * (big_n - k + 1)
        if lhs < rhs:
            problems.append(f"Newton inequality fails at k = {k}")
    return problems


# -- truncated bivariate series -------------------------------------------------

def _px_add(a: Sequence[Fraction], b: Sequence[Fraction], sign: int = 1) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += sign * c
    return out


def _px_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return out


class BivariateSeries:
    """Power series in z truncated at z^order, with polynomial-in-x
    coefficients held as exact rationals (lists, x^0 first)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Sequence[Fraction]], order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.order = order
        cs = [list(c) for c in coeffs[: order + 1]]
        while len(cs) <= order:
            cs.append([])
        self.coeffs = cs

    @classmethod
    def zero(cls, order: int) -> "BivariateSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "BivariateSeries":
        return cls([[Fraction(1)]], order)

    @classmethod
    def z_term(cls, order: int) -> "BivariateSeries":
        return cls([[], [Fraction(1)]], order)

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        n = min(self.order, other.order)
        return BivariateSeries(
            [_px_add(self.coeffs[i], other.coeffs[i]) for i in range(n + 1)], n
        )

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        n = min(self.order, other.order)
        return BivariateSeries(
            [_px_add(self.coeffs[i], other.coeffs[i], -1) for i in range(n + 1)], n
        )

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        n = min(self.order, other.order)
        out: list[list[Fraction]] = [[] for _ in range(n + 1)]
        for i in range(n + 1):
            if not self.coeffs[i]:
                continue
            for j in range(n + 1 - i):
                if other.coeffs[j]:
                    out[i + j] = _px_add(out[i + j], _px_mul(self.coeffs[i], other.coeffs[j]))
        return BivariateSeries(out, n)

    def x_shift(self) -> "BivariateSeries":
        """Multiply by x."""
        return BivariateSeries(
            [[Fraction(0), *c] if c else [] for c in self.coeffs], self.order
        )

    def exp(self) -> "BivariateSeries":
        """exp of a series with zero constant term, via the convolution
        e_n = (1/n) sum_k k h_k e_{n-k}."""
        if any(self.coeffs[0]):
            raise ValueError("exp needs a series with zero constant term")
        e: list[list[Fraction]] = [[Fraction(1)]]
        for n in range(1, self.order + 1):
            acc: list[Fraction] = []
            for k in range(1, n + 1):
                if self.coeffs[k]:
                    acc = _px_add(acc, _px_mul([c * k for c in self.coeffs[k]], e[n - k]))
            e.append([c / n for c in acc])
        return BivariateSeries(e, self.order)

    def coefficient(self, n: int) -> list[Fraction]:
        return list(self.coeffs[n])

    def max_abs_coefficient(self) -> Fraction:
        best = Fraction(0)
        for c in self.coeffs:
            for v in c:
                if abs(v) > best:
                    best = abs(v)
        return best


def functional_equation_residual(order: int = 12) -> Fraction:
    """Exact residual of the tree generating function's fixed-point
    equation H = z + x (exp(H) - 1 - H), with H assembled from the tree
    polynomials through z^order.  Zero iff the triangle satisfies the
    equation to that order.
    """
    coeffs: list[list[Fraction]] = [[]]
    for n in range(1, order + 1):
        f = Fraction(1, math.factorial(n))
        coeffs.append([c * f for c in tree_poly(n - 1).coeffs])
    h = BivariateSeries(coeffs, order)
    inner = h.exp() - BivariateSeries.one(order) - h
    residual = BivariateSeries.z_term(order) + inner.x_shift() - h
    return residual.max_abs_coefficient()
