"""Exact counting triangles for set partitions and phylogenetic trees.

Three triangles are maintained, each by its two-term recurrence:

``s``      partitions of an n-set into k classes,
           S(n,k) = S(n-1,k-1) + k*S(n-1,k)
``sstar``  partitions with every class of size >= 2,
           S*(n,k) = (n-1)*S*(n-2,k-1) + k*S*(n-1,k)
``t``      phylogenetic trees with n labeled leaves and m internal
           vertices, T(n,m) = (n+m-2)*T(n-1,m-1) + m*T(n-1,m)

Rows are built forward with plain Python integers, so every value is
exact.  Row sums are always recorded; full rows are kept densely for
small n and at sparse checkpoints beyond that, so revisiting a row
does not restart the whole triangle.
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

__all__ = [
    "CountTriangle",
    "triangle",
    "triangle_row",
    "stirling2",
    "stirling2_star",
    "tree_count_T",
    "tree_count_via_partition",
    "semilabeled_F",
    "phylo_F_star",
    "bell",
    "bell_star",
    "bell_star_alternating",
    "schroeder_t",
    "save_rows",
    "load_rows",
    "verify_rows",
    "CacheFormatError",
    "FAMILIES",
    "ROW_FAMILIES",
]

# Triangles computed by recurrence.  ROW_FAMILIES additionally admits the
# reflected ("reversed") triangles, which reuse the same storage.
FAMILIES = ("s", "sstar", "t")
ROW_FAMILIES = ("s", "sstar", "t", "f", "fstar")

# Keep every row up to this n ...
_DENSE_LIMIT = 256
# ... and beyond it only rows at this stride (plus the row before, so the
# two-back recurrence for sstar can restart from a checkpoint).
_CHECKPOINT_STRIDE = 64


class CacheFormatError(ValueError):
    """A row-cache file does not follow the ``family,n,k_min,...`` format."""


class CountTriangle:
    """Lazily extended triangle of exact counts for one family."""

    def __init__(self, family: str):
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}")
        self.family = family
        self._sums: dict[int, int] = {}
        self._rows: dict[int, tuple[int, ...]] = {}
        self._first_n = 2 if family == "t" else 1
        self._top_n = 0       # largest n computed so far
        self._top: tuple[int, ...] = ()
        self._top_prev: tuple[int, ...] = ()  # only used by sstar

    # -- shape ---------------------------------------------------------

    def k_min(self, n: int) -> int:
        self._check_n(n)
        return 1

    def k_max(self, n: int) -> int:
        self._check_n(n)
        if self.family == "s":
            return n
        if self.family == "sstar":
            return n // 2
        return n - 1

    def _check_n(self, n: int) -> None:
        if not isinstance(n, int):
            raise TypeError(f"n must be an int, got {type(n).__name__}")
        if n < self._first_n:
            raise ValueError(
                f"family {self.family!r} has rows for n >= {self._first_n}, got {n}"
            )

    # -- forward recurrence --------------------------------------------

    def _base_row(self) -> tuple[int, ...]:
        # s: row 1 is (S(1,1),) = (1,).  sstar: row 1 is empty (no class
        # of size >= 2 exists), row 2 handled by the generic step from
        # the empty row would be wrong, so it is seeded explicitly.
        # t: row 2 is (T(2,1),) = (1,).
        if self.family == "sstar":
            return ()
        return (1,)

    def _step(self, n: int, prev: Sequence[int], prev2: Sequence[int]) -> tuple[int, ...]:
        """Row n from row n-1 (and row n-2 for sstar)."""
        fam = self.family
        if fam == "s":
            # prev has length n-1, new row length n, k = j+1
            last = len(prev) - 1
            return tuple(
                (prev[j - 1] if j >= 1 else 0)
                + (j + 1) * (prev[j] if j <= last else 0)
                for j in range(n)
            )
        if fam == "t":
            last = len(prev) - 1
            row = []
            for k in range(1, n):
                v = k * prev[k - 1] if k - 1 <= last else 0
                if k >= 2:
                    v += (n + k - 2) * prev[k - 2]
                row.append(v)
            return tuple(row)
        # sstar
        if n == 2:
            return (1,)
        width = n // 2
        lp, lp2 = len(prev), len(prev2)
        row = []
        for k in range(1, width + 1):
            v = k * prev[k - 1] if k - 1 < lp else 0
            if k >= 2 and k - 2 < lp2:
                v += (n - 1) * prev2[k - 2]
            row.append(v)
        return tuple(row)

    def _record(self, n: int, row: tuple[int, ...], keep: bool = False) -> None:
        self._sums[n] = sum(row)
        if keep or n <= _DENSE_LIMIT or n % _CHECKPOINT_STRIDE in (0, _CHECKPOINT_STRIDE - 1):
            self._rows[n] = row

    def ensure(self, n: int, keep: Iterable[int] = ()) -> None:
        """Extend the triangle so rows up to n have recorded sums."""
        self._check_n(n)
        keep_set = set(keep)
        if self._top_n == 0:
            first = self._first_n
            row = self._base_row()
            self._top_n, self._top = first, row
            self._top_prev = ()
            self._record(first, row, keep=first in keep_set)
        while self._top_n < n:
            m = self._top_n + 1
            row = self._step(m, self._top, self._top_prev)
            self._top_prev = self._top
            self._top_n, self._top = m, row
            self._record(m, row, keep=m in keep_set)

    def row(self, n: int) -> tuple[int, ...]:
        """Exact row n as a tuple indexed by k - k_min."""
        self._check_n(n)
        got = self._rows.get(n)
        if got is not None:
            return got
        if n > self._top_n:
            self.ensure(n, keep=(n,))
            return self._rows[n]
        # Row was evicted: rebuild from the nearest checkpoint below.
        start = self._restart_point(n)
        if start is None:
            tri = CountTriangle(self.family)
            tri.ensure(n, keep=(n,))
            row = tri._rows[n]
        else:
            n0, prev, prev2 = start
            row = prev
            while n0 < n:
                n0 += 1
                row = self._step(n0, prev, prev2)
                prev2, prev = prev, row
        self._rows[n] = row
        return row

    def _restart_point(self, n: int) -> tuple[int, tuple[int, ...], tuple[int, ...]] | None:
        need_pair = self.family == "sstar"
        for n0 in range(n, self._first_n - 1, -1):
            if n0 not in self._rows:
                continue
            if need_pair:
                if n0 - 1 in self._rows:
                    return n0, self._rows[n0], self._rows[n0 - 1]
                if n0 <= 2:
                    return n0, self._rows[n0], ()
                continue
            return n0, self._rows[n0], ()
        return None

    def entry(self, n: int, k: int) -> int:
        """Single triangle entry, 0 outside the support."""
        self._check_n(n)
        if k < 1 or k > self.k_max(n):
            return 0
        row = self.row(n)
        if k - 1 >= len(row):
            return 0
        return row[k - 1]

    def row_sum(self, n: int) -> int:
        self._check_n(n)
        if n not in self._sums:
            self.ensure(n)
        return self._sums[n]


_TRIANGLES: dict[str, CountTriangle] = {}


def triangle(family: str) -> CountTriangle:
    """Shared triangle instance for a family."""
    if family not in _TRIANGLES:
        _TRIANGLES[family] = CountTriangle(family)
    return _TRIANGLES[family]


def triangle_row(family: str, n: int) -> tuple[int, tuple[int, ...]]:
    """(k_min, values) for any of the five row families.

    ``f`` and ``fstar`` are the reflections F(n,k) = S(n,n-k+1) and
    F*(n,k) = S*(n,n-k+1); their rows are the base rows reversed, with
    k_min shifted so only the nonzero span is returned.
    """
    if family in FAMILIES:
        return 1, triangle(family).row(n)
    if family == "f":
        return 1, tuple(reversed(triangle("s").row(n)))
    if family == "fstar":
        row = tuple(reversed(triangle("sstar").row(n)))
        return n - n // 2 + 1, row
    raise ValueError(f"unknown family {family!r}, expected one of {ROW_FAMILIES}")


# -- scalar accessors ----------------------------------------------------

def stirling2(n: int, k: int) -> int:
    """Partitions of an n-set into k classes."""
    return triangle("s").entry(n, k)


def stirling2_star(n: int, k: int) -> int:
    """Partitions of an n-set into k classes, all of size >= 2."""
    return triangle("sstar").entry(n, k)


def tree_count_T(n: int, m: int) -> int:
    """Phylogenetic trees with n labeled leaves and m internal vertices.

    Internal vertices (the root included) have at least two children.
    Zero for m >= n: such a tree cannot have that many internals.
    """
    if n < 2:
        raise ValueError(f"tree rows start at n = 2, got n = {n}")
    if m >= n:
        return 0
    return triangle("t").entry(n, m)


def tree_count_via_partition(n: int, m: int) -> int:
    """T(n,m) computed on the partition side, as S*(n+m-1, m).

    Independent route used to cross-check the tree recurrence: trees
    with n leaves and m internals biject with partitions of an
    (n+m-1)-set into m classes of size >= 2.
    """
    if n < 2:
        raise ValueError(f"tree rows start at n = 2, got n = {n}")
    if m < 1 or m >= n:
        return 0
    return stirling2_star(n + m - 1, m)


def semilabeled_F(n: int, k: int) -> int:
    """Semilabeled trees with n non-root vertices and k labeled leaves.

    Equals S(n, n-k+1): collapse each tree level-by-level onto the
    partition classes.
    """
    return stirling2(n, n - k + 1)


def phylo_F_star(n: int, k: int) -> int:
    """As semilabeled_F but every internal vertex has >= 2 children."""
    return stirling2_star(n, n - k + 1)


def bell(n: int) -> int:
    """Number of partitions of an n-set."""
    return triangle("s").row_sum(n)


def bell_star(n: int) -> int:
    """Number of partitions of an n-set with all classes of size >= 2."""
    if n == 1:
        return 0
    return triangle("sstar").row_sum(n)


def bell_star_alternating(n: int) -> int:
    """bell_star(n) as the alternating sum of ordinary Bell numbers.

    B*(n) = sum_{i<n} (-1)^(n-1-i) B(i), an independent route to the
    same value (inclusion-exclusion over the singleton classes).
    """
    if n < 2:
        raise ValueError(f"alternating form needs n >= 2, got {n}")
    return sum((-1) ** (n - 1 - i) * bell(i) for i in range(1, n))


def schroeder_t(n: int) -> int:
    """Total phylogenetic trees with n labeled leaves.

    t(1) = 1 by convention (the single leaf, no internal vertex); for
    n >= 2 it is the sum of the tree triangle row.
    """
    if n == 1:
        return 1
    return triangle("t").row_sum(n)


# -- row cache files -----------------------------------------------------

def default_cache_path() -> str:
    """Row-cache location, honoring the PHYLOCOUNT_CACHE override."""
    return os.environ.get("PHYLOCOUNT_CACHE", "phylocount_rows.cache")


def save_rows(path: str, family: str, n_values: Iterable[int]) -> int:
    """Append-free write of selected rows as ``family,n,k_min,v1,...`` lines."""
    if family not in ROW_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    lines = []
    for n in sorted(set(n_values)):
        k_min, row = triangle_row(family, n)
        lines.append(",".join([family, str(n), str(k_min), *map(str, row)]))
    with open(path, "w", encoding="ascii") as fp:
        fp.write("\n".join(lines) + ("\n" if lines else ""))
    return len(lines)


def load_rows(path: str) -> list[tuple[str, int, int, tuple[int, ...]]]:
    """Parse a row-cache file; malformed content raises CacheFormatError."""
    records = []
    with open(path, encoding="ascii") as fp:
        for lineno, line in enumerate(fp, 1):
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) < 3:
                raise CacheFormatError(f"{path}:{lineno}: expected family,n,k_min,values")
            family = parts[0]
            if family not in ROW_FAMILIES:
                raise CacheFormatError(f"{path}:{lineno}: unknown family {family!r}")
            try:
                n = int(parts[1])
                k_min = int(parts[2])
                values = tuple(int(v) for v in parts[3:])
            except ValueError as exc:
                raise CacheFormatError(f"{path}:{lineno}: non-integer field ({exc})") from None
            records.append((family, n, k_min, values))
    return records


def verify_rows(path: str) -> list[str]:
    """Recompute every cached row; returns a list of mismatch messages."""
    problems = []
    for family, n, k_min, values in load_rows(path):
        want_k_min, want = triangle_row(family, n)
        if (k_min, values) != (want_k_min, want):
            problems.append(f"{family} n={n}: cached row differs from recomputed row")
    return problems
