"""Exact triangle recurrences, row sums, identities, and row caches."""

import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phylocount.triangles import (
    CacheFormatError,
    CountTriangle,
    bell,
    bell_star,
    bell_star_alternating,
    default_cache_path,
    load_rows,
    phylo_F_star,
    save_rows,
    schroeder_t,
    semilabeled_F,
    stirling2,
    stirling2_star,
    tree_count_T,
    tree_count_via_partition,
    triangle_row,
    verify_rows,
)

# frozen from the brute-force oracle and dual-route computation
S_ROW_10 = (1, 511, 9330, 34105, 42525, 22827, 5880, 750, 45, 1)
SSTAR_ROW_11 = (1, 1012, 22935, 56980, 17325)
T_ROW_8 = (1, 246, 6825, 56980, 190575, 270270, 135135)
F_ROW_7 = (1, 21, 140, 350, 301, 63, 1)
B_20 = 51724158235372
BSTAR_20 = 5224266196935
T_20 = 887094711304119347388416


def test_frozen_rows():
    assert triangle_row("s", 10) == (1, S_ROW_10)
    assert triangle_row("sstar", 11) == (1, SSTAR_ROW_11)
    assert triangle_row("t", 8) == (1, T_ROW_8)
    assert triangle_row("f", 7) == (1, F_ROW_7)
    assert triangle_row("fstar", 7) == (5, (105, 56, 1))


def test_frozen_row_sums():
    assert bell(20) == B_20
    assert bell_star(20) == BSTAR_20
    assert schroeder_t(20) == T_20


def test_small_anchors():
    assert triangle_row("s", 1) == (1, (1,))
    assert triangle_row("sstar", 1) == (1, ())
    assert triangle_row("sstar", 2) == (1, (1,))
    assert triangle_row("sstar", 5) == (1, (1, 10))
    assert bell_star(1) == 0
    assert [schroeder_t(n) for n in (1, 2, 3, 4)] == [1, 1, 4, 26]
    for n in range(2, 41):
        assert tree_count_T(n, 1) == 1
    assert tree_count_T(4, 5) == 0


def test_reflection_rows():
    for n in range(1, 30):
        _, s = triangle_row("s", n)
        k_min, f = triangle_row("f", n)
        assert k_min == 1 and f == s[::-1]
        assert semilabeled_F(n, 1) == stirling2(n, n)
    for n in range(2, 30):
        _, s = triangle_row("sstar", n)
        k_min, f = triangle_row("fstar", n)
        assert k_min == n - n // 2 + 1 and f == s[::-1]
        assert phylo_F_star(n, n) == stirling2_star(n, 1)


def test_tree_partition_identity():
    for n in range(2, 16):
        for m in range(1, n):
            assert tree_count_T(n, m) == tree_count_via_partition(n, m)


def test_bell_split_and_alternating():
    for n in range(1, 61):
        assert bell(n) == bell_star(n + 1) + bell_star(n)
    for n in range(2, 61):
        assert bell_star(n) == bell_star_alternating(n)
    with pytest.raises(ValueError):
        bell_star_alternating(1)


def test_entry_bounds():
    assert stirling2(5, 0) == 0
    assert stirling2(5, 6) == 0
    assert stirling2_star(7, 4) == 0
    assert tree_count_T(3, 3) == 0


def test_checkpoint_restart_matches_fresh():
    # a throwaway instance, so the module singletons keep their dense rows
    tri = CountTriangle("sstar")
    tri.ensure(300)
    far = tri.row(300)
    mid = tri.row(270)  # forces a restart from a checkpoint pair
    fresh = CountTriangle("sstar")
    fresh.ensure(300, keep=(270, 300))
    assert far == fresh.row(300)
    assert mid == fresh.row(270)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=60))
def test_row_sum_consistency(n):
    _, row = triangle_row("s", n)
    assert sum(row) == bell(n)
    assert row[0] == 1 and row[-1] == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=2, max_value=50), st.data())
def test_recurrence_spot(n, data):
    k = data.draw(st.integers(min_value=1, max_value=n))
    assert stirling2(n, k) == stirling2(n - 1, k - 1) + k * stirling2(n - 1, k)
    m = data.draw(st.integers(min_value=1, max_value=max(1, n // 2)))
    if n >= 3:
        assert stirling2_star(n, m) == (n - 1) * stirling2_star(n - 2, m - 1) + m * stirling2_star(
            n - 1, m
        )


def test_cache_roundtrip(tmp_path):
    path = str(tmp_path / "rows.cache")
    count = save_rows(path, "sstar", range(1, 12))
    assert count == 11
    records = load_rows(path)
    assert records[0] == ("sstar", 1, 1, ())
    assert ("sstar", 11, 1, SSTAR_ROW_11) in records
    assert verify_rows(path) == []


def test_cache_tamper_detected(tmp_path):
    path = str(tmp_path / "rows.cache")
    save_rows(path, "t", range(2, 8))
    lines = open(path).read().splitlines()
    lines[3] = lines[3].rsplit(",", 1)[0] + ",999"
    open(path, "w").write("\n".join(lines) + "\n")
    problems = verify_rows(path)
    assert len(problems) == 1 and "t n=5" in problems[0]


def test_cache_malformed(tmp_path):
    path = str(tmp_path / "rows.cache")
    open(path, "w").write("s,notanint,1,5\n")
    with pytest.raises(CacheFormatError):
        load_rows(path)
    open(path, "w").write("bogus,3,1,1\n")
    with pytest.raises(CacheFormatError):
        load_rows(path)


def test_cache_env_override(monkeypatch):
    monkeypatch.setenv("PHYLOCOUNT_CACHE", "/elsewhere/rows.cache")
    assert default_cache_path() == "/elsewhere/rows.cache"
    monkeypatch.delenv("PHYLOCOUNT_CACHE")
    assert default_cache_path() == "phylocount_rows.cache"


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        triangle_row("nope", 3)
    with pytest.raises(ValueError):
        save_rows(os.devnull, "nope", [1])
