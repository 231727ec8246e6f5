"""Brute-force enumeration oracles.

Everything in this module counts by explicit construction: set
partitions through the restricted-growth recursion, trees through
canonical-form enumeration.  No recurrences, no closed forms; the
point is independence from the fast routes so the two can be compared
on overlapping ranges.

Enumeration blows up quickly, so each entry point enforces a hard size
cap.  Pass ``unsafe=True`` (or set PHYLOCOUNT_UNSAFE_SIZES=1) to go
past it anyway.
"""

from __future__ import annotations

import json
import os
from itertools import combinations
from typing import IO, Iterator, Sequence

__all__ = [
    "SizeCapError",
    "PARTITION_CAP",
    "TREE_CAP",
    "iter_set_partitions",
    "enumerate_partitions",
    "becker_map",
    "becker_inverse",
    "iter_semilabeled_trees",
    "iter_phylo_trees",
    "count_semilabeled",
    "count_phylo",
    "count_phylo_by_leaves",
    "dump_partitions",
    "dump_trees",
]

PARTITION_CAP = 12
TREE_CAP = 9

Partition = tuple[tuple[int, ...], ...]


class SizeCapError(ValueError):
    """Requested size exceeds the enumeration cap for this oracle."""


def _check_cap(value: int, cap: int, unsafe: bool, what: str) -> None:
    if unsafe or os.environ.get("PHYLOCOUNT_UNSAFE_SIZES") == "1":
        return
    if value > cap:
        raise SizeCapError(
            f"{what} enumeration capped at {cap} (asked for {value}); "
            "pass unsafe=True or set PHYLOCOUNT_UNSAFE_SIZES=1 to override"
        )


# -- set partitions --------------------------------------------------------

def iter_set_partitions(n: int, unsafe: bool = False) -> Iterator[Partition]:
    """Yield every partition of {1,...,n} in canonical form.

    Canonical: classes sorted by least element, elements ascending
    within each class.  The recursion places element i into each
    existing class or a fresh one, so canonical order holds by
    construction.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    _check_cap(n, PARTITION_CAP, unsafe, "set-partition")
    if n == 0:
        yield ()
        return

    blocks: list[list[int]] = []

    def place(i: int) -> Iterator[Partition]:
        if i > n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from place(i + 1)
            b.pop()
        blocks.append([i])
        yield from place(i + 1)
        blocks.pop()

    yield from place(1)


def enumerate_partitions(n: int, min_block_size: int = 1, unsafe: bool = False) -> list[int]:
    """Count partitions of {1,...,n} by class count.

    Returns counts indexed by k (length n+1, index 0 unused for n >= 1).
    Partitions containing a class smaller than min_block_size are
    skipped, so min_block_size=2 counts the singleton-free family.
    """
    counts = [0] * (n + 1)
    for part in iter_set_partitions(n, unsafe=unsafe):
        if min_block_size > 1 and any(len(b) < min_block_size for b in part):
            continue
        counts[len(part)] += 1
    return counts


def _canonical(blocks: Sequence[Sequence[int]]) -> Partition:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


def _validate_partition(part: Sequence[Sequence[int]]) -> int:
    seen: set[int] = set()
    total = 0
    for b in part:
        if len(b) == 0:
            raise ValueError("empty class in partition")
        for x in b:
            if not isinstance(x, int) or x < 1:
                raise ValueError(f"partition elements must be positive ints, got {x!r}")
            if x in seen:
                raise ValueError(f"element {x} appears twice")
            seen.add(x)
        total += len(b)
    if seen and max(seen) != total:
        raise ValueError("partition must cover {1,...,n} with no gaps")
    return total


def becker_map(part: Sequence[Sequence[int]]) -> Partition:
    """Map a partition of {1..n} with >= 1 singleton to a singleton-free
    partition of {1..n+1}.

    All singleton classes are merged with the new element n+1 into one
    class; every other class is kept.  This is one direction of the
    bijection behind B*(n+1) + B*(n) = B(n).
    """
    n = _validate_partition(part)
    singles = sorted(b[0] for b in part if len(b) == 1)
    if not singles:
        raise ValueError("becker_map needs at least one singleton class")
    blocks = [tuple(b) for b in part if len(b) >= 2]
    blocks.append(tuple(singles + [n + 1]))
    return _canonical(blocks)


def becker_inverse(part: Sequence[Sequence[int]]) -> Partition:
    """Inverse of becker_map: singleton-free partition of {1..m} to a
    partition of {1..m-1} with at least one singleton."""
    m = _validate_partition(part)
    if m < 2:
        raise ValueError("becker_inverse needs a partition of {1,...,m} with m >= 2")
    if any(len(b) < 2 for b in part):
        raise ValueError("becker_inverse input must be singleton-free")
    blocks: list[tuple[int, ...]] = []
    hit = None
    for b in part:
        if m in b:
            hit = b
        else:
            blocks.append(tuple(b))
    if hit is None:
        raise ValueError(f"element {m} missing from partition")
    blocks.extend((x,) for x in hit if x != m)
    return _canonical(blocks)


# -- trees -------------------------------------------------------------------
#
# A tree with v non-root vertices and labeled leaves is represented by
# a canonical nested form: a leaf is ("L", label), an internal vertex
# is ("N", children) with children ordered by their least label.  Sibling
# subtrees carry disjoint nonempty label sets, so least-label order is a
# total order and each tree has exactly one form.

_Form = tuple
_BRANCH_MEMO: dict[tuple[int, frozenset, int], frozenset] = {}


def _branch_forms(v: int, labels: frozenset, c_min: int) -> frozenset:
    """All branch forms with v vertices and exactly this leaf label set."""
    if not labels or len(labels) > v:
        return frozenset()
    key = (v, labels, c_min)
    got = _BRANCH_MEMO.get(key)
    if got is not None:
        return got
    if v == 1:
        forms = frozenset({("L", next(iter(labels)))})
    else:
        forms = frozenset(
            ("N", kids)
            for kids in _kid_tuples(v - 1, labels, c_min)
            if len(kids) >= c_min
        )
    _BRANCH_MEMO[key] = forms
    return forms


def _kid_tuples(v_total: int, labels: frozenset, c_min: int) -> Iterator[tuple]:
    """Unordered families of branches using v_total vertices and these labels.

    The branch holding the least label is chosen first, so every family
    is produced exactly once, already in canonical order.
    """
    if not labels:
        if v_total == 0:
            yield ()
        return
    if len(labels) > v_total:
        return
    a = min(labels)
    rest_pool = sorted(labels - {a})
    for v1 in range(1, v_total + 1):
        room_after = v_total - v1
        for extra in range(0, min(v1 - 1, len(rest_pool)) + 1):
            if len(rest_pool) - extra > room_after:
                continue
            for chosen in combinations(rest_pool, extra):
                l1 = frozenset((a, *chosen))
                sub = _branch_forms(v1, l1, c_min)
                if not sub:
                    continue
                for rest in _kid_tuples(room_after, labels - l1, c_min):
                    for f1 in sub:
                        yield (f1, *rest)


def _form_to_nested(form: _Form):
    if form[0] == "L":
        return form[1]
    return [_form_to_nested(child) for child in form[1]]


def _iter_trees(v: int, k: int, c_min: int, unsafe: bool) -> Iterator[list]:
    if v < 1 or k < 0:
        raise ValueError("need v >= 1 vertices and k >= 0 labels")
    _check_cap(v, TREE_CAP, unsafe, "tree")
    labels = frozenset(range(1, k + 1))
    for kids in _kid_tuples(v, labels, c_min):
        if len(kids) >= c_min:
            yield [_form_to_nested(f) for f in kids]


def iter_semilabeled_trees(v: int, k: int, unsafe: bool = False) -> Iterator[list]:
    """Rooted trees with v non-root vertices and leaves labeled 1..k.

    Every leaf carries a label, internal vertices are unlabeled, any
    vertex may have a single child.  Trees are yielded as nested lists;
    a leaf appears as its label.
    """
    return _iter_trees(v, k, 1, unsafe)


def iter_phylo_trees(v: int, k: int, unsafe: bool = False) -> Iterator[list]:
    """As iter_semilabeled_trees, but all internal vertices (root
    included) have at least two children."""
    return _iter_trees(v, k, 2, unsafe)


def count_semilabeled(v: int, k: int, unsafe: bool = False) -> int:
    """Number of semilabeled trees with v non-root vertices, k labels."""
    return sum(1 for _ in iter_semilabeled_trees(v, k, unsafe=unsafe))


def count_phylo(v: int, k: int, unsafe: bool = False) -> int:
    """Number of phylogenetic trees with v non-root vertices, k labels."""
    return sum(1 for _ in iter_phylo_trees(v, k, unsafe=unsafe))


def count_phylo_by_leaves(n_leaves: int, m_internal: int, unsafe: bool = False) -> int:
    """Phylogenetic trees with n_leaves labeled leaves and m_internal
    internal vertices (root included), counted by direct enumeration.

    Such a tree has n_leaves + m_internal - 1 non-root vertices.
    """
    if n_leaves < 2 or m_internal < 1:
        return 0
    return count_phylo(n_leaves + m_internal - 1, n_leaves, unsafe=unsafe)


# -- dumps -------------------------------------------------------------------

def dump_partitions(n: int, fp: IO[str], unsafe: bool = False) -> int:
    """Write every partition of {1..n} as one JSON line; returns the count."""
    count = 0
    for part in iter_set_partitions(n, unsafe=unsafe):
        fp.write(json.dumps([list(b) for b in part]) + "\n")
        count += 1
    return count


def dump_trees(v: int, k: int, fp: IO[str], phylo: bool = False, unsafe: bool = False) -> int:
    """Write every tree (nested-list form) as one JSON line; returns the count."""
    it = iter_phylo_trees(v, k, unsafe=unsafe) if phylo else iter_semilabeled_trees(v, k, unsafe=unsafe)
    count = 0
    for tree in it:
        fp.write(json.dumps(tree) + "\n")
        count += 1
    return count
