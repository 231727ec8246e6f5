"""Acceptance gate: the ten headline guarantees of this package, each as
one test printing a single PASS/FAIL line.  Tolerances and ranges are
pinned here and nowhere else; loosening them is not a fix."""

import math
import time
from fractions import Fraction

from phylocount.asymptotics import (
    lambert_r,
    moser_wyman_log_ratio,
    schroeder_log_ratio,
    stats_convergence,
)
from phylocount.bruteforce import (
    count_phylo,
    count_phylo_by_leaves,
    count_semilabeled,
    enumerate_partitions,
)
from phylocount.distribution import LLT_TARGET, limit_report
from phylocount.polynomials import (
    check_newton,
    check_slc,
    functional_equation_residual,
    isolate_real_roots,
    s_star_poly,
    verify_interlacing,
    verify_tree_roots,
)
from phylocount.triangles import (
    bell,
    bell_star,
    bell_star_alternating,
    phylo_F_star,
    schroeder_t,
    semilabeled_F,
    stirling2,
    stirling2_star,
    tree_count_T,
    triangle_row,
)


def _gate(num: int, label: str, problems: list[str]) -> None:
    verdict = "PASS" if not problems else "FAIL"
    print(f"[{verdict}] criterion {num:02d}: {label}")
    assert not problems, f"criterion {num:02d}: " + "; ".join(problems[:8])


def test_criterion_01_oracle_equivalence():
    start = time.perf_counter()
    problems = []
    for n in range(1, 11):
        counted = enumerate_partitions(n)
        for k in range(0, n + 1):
            if counted[k] != stirling2(n, k):
                problems.append(f"S({n},{k})")
        if sum(counted) != bell(n):
            problems.append(f"B_{n}")
        counted = enumerate_partitions(n, min_block_size=2)
        for k in range(0, n + 1):
            if counted[k] != stirling2_star(n, k):
                problems.append(f"S*({n},{k})")
        if sum(counted) != bell_star(n):
            problems.append(f"B*_{n}")
    for v in range(1, 10):
        for k in range(1, v + 1):
            if count_semilabeled(v, k) != semilabeled_F(v, k):
                problems.append(f"F({v},{k})")
            if count_phylo(v, k) != phylo_F_star(v, k):
                problems.append(f"F*({v},{k})")
    for leaves in range(2, 9):
        for m in range(1, leaves):
            if leaves + m > 9:
                break
            if count_phylo_by_leaves(leaves, m) != tree_count_T(leaves, m):
                problems.append(f"T({leaves},{m})")
    elapsed = time.perf_counter() - start
    if elapsed >= 120:
        problems.append(f"runtime {elapsed:.1f}s")
    _gate(1, "brute-force enumeration equals every recurrence", problems)


def test_criterion_02_identity_suite():
    problems = []
    for n in range(2, 41):
        for m in range(1, n):
            if tree_count_T(n, m) != stirling2_star(n + m - 1, m):
                problems.append(f"T({n},{m})")
    for n in range(1, 201):
        if bell(n) != bell_star(n + 1) + bell_star(n):
            problems.append(f"bell split at {n}")
    for n in range(2, 201):
        if bell_star_alternating(n) != bell_star(n):
            problems.append(f"alternating sum at {n}")
    _gate(2, "tree counts are partition counts; Bell splits hold", problems)


def test_criterion_03_anchor_values():
    problems = []
    if s_star_poly(4).coeffs != (0, 1, 3):
        problems.append("S_4 coefficients")
    if s_star_poly(5).coeffs != (0, 1, 10):
        problems.append("S_5 coefficients")
    iv = isolate_real_roots(s_star_poly(4), expected=2)
    if not (iv.covers(Fraction(-1, 3)) and iv.covers(0)):
        problems.append("S_4 roots")
    iv = isolate_real_roots(s_star_poly(5), expected=2)
    if not (iv.covers(Fraction(-1, 10)) and iv.covers(0)):
        problems.append("S_5 roots")
    if [schroeder_t(n) for n in (1, 2, 3, 4)] != [1, 1, 4, 26]:
        problems.append("t_1..t_4")
    if any(tree_count_T(n, 1) != 1 for n in range(2, 41)):
        problems.append("T(n,1)")
    if bell_star(1) != 0:
        problems.append("B*_1")
    _gate(3, "anchor rows, polynomials and their exact roots", problems)


def test_criterion_04_root_certificates_at_scale():
    problems = []
    for n in range(1, 201):
        rep = verify_tree_roots(n)
        if not rep.ok or rep.n_negative != n - 1:
            problems.append(f"tree roots at n={n}")
    for j in range(2, 61):
        rep = verify_interlacing(j)
        if not rep.ok or rep.counts != (j - 2, j - 1, j - 1):
            problems.append(f"interlacing at index {2 * j}")
    _gate(4, "certified real roots and interlacing chains", problems)


def test_criterion_05_row_inequalities():
    problems = []
    for family in ("s", "sstar", "t"):
        n_min = 2 if family == "t" else 1
        for n in range(n_min, 301):
            _, row = triangle_row(family, n)
            if check_slc(list(row)):
                problems.append(f"slc {family} n={n}")
            if check_newton(list(row)):
                problems.append(f"newton {family} n={n}")
    _gate(5, "strict log-concavity and Newton inequalities to n=300", problems)


def test_criterion_06_functional_equation():
    start = time.perf_counter()
    residual = functional_equation_residual(12)
    elapsed = time.perf_counter() - start
    problems = []
    if residual != 0:
        problems.append(f"residual {residual}")
    if elapsed >= 30:
        problems.append(f"runtime {elapsed:.1f}s")
    _gate(6, "series functional equation residual is exactly zero", problems)


def test_criterion_07_stat_expansion_regressions():
    problems = []
    for family in ("s", "sstar", "t"):
        mean_rec, var_rec = stats_convergence(family)
        if not mean_rec.bounded_by(3.0):
            problems.append(f"{family} mean ladder")
        if not var_rec.bounded_by(3.0):
            problems.append(f"{family} variance ladder")
    _gate(7, "scaled stat residuals stay bounded along the n ladder", problems)


def test_criterion_08_count_expansions():
    problems = []
    mw_100 = moser_wyman_log_ratio(100)
    mw_1000 = moser_wyman_log_ratio(1000)
    if not abs(math.expm1(mw_100)) < 0.01:
        problems.append(f"Bell estimate at 100: {math.expm1(mw_100):.2e}")
    if not abs(mw_1000) < abs(mw_100):
        problems.append("Bell estimate not improving at 1000")
    sc_50 = schroeder_log_ratio(50)
    if not abs(math.expm1(sc_50)) < 1e-3:
        problems.append(f"tree total at 50: {math.expm1(sc_50):.2e}")
    _gate(8, "Bell and tree-total expansions at their stated accuracy", problems)


def test_criterion_09_limit_trends():
    problems = []
    for family, (lo, hi) in (("s", (100, 800)), ("sstar", (100, 800)), ("t", (100, 400))):
        a = limit_report(family, lo)
        b = limit_report(family, hi)
        if not b.sup_cdf_distance < a.sup_cdf_distance:
            problems.append(f"{family} CDF distance")
        if not abs(b.llt_value_at_mode - LLT_TARGET) < abs(a.llt_value_at_mode - LLT_TARGET):
            problems.append(f"{family} LLT gap")
        if not abs(b.mode_offset) < 0.5:
            problems.append(f"{family} mode offset {b.mode_offset:+.3f}")
    _gate(9, "normal-limit distances shrink; modes track the mean", problems)


def test_criterion_10_lambert_solver():
    problems = []
    for y in (1.0, math.e, 10.0, 1e3, 1e6, 1e9):
        r = lambert_r(y)
        rel = abs(r * math.exp(r) - y) / y
        if rel > 1e-13:
            problems.append(f"residual {rel:.2e} at {y:g}")
    if abs(lambert_r(math.e) - 1.0) > 1e-13:
        problems.append("r(e) != 1")
    _gate(10, "saddle-point solver at full float accuracy", problems)
