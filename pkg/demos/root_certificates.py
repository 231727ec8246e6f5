"""Exact root certificates for the generating polynomials.

The tree polynomials P_n and the singleton-free partition polynomials
S_m are real-rooted with simple roots: one at 0, the rest strictly
inside (-1, 0).  The library proves this per polynomial with exact
rational arithmetic: disjoint sign-change intervals that exhaust the
degree.  This script prints a few certificates and the interlacing
pattern that drives the induction.
"""

from fractions import Fraction

from phylocount import (
    check_newton,
    check_slc,
    isolate_real_roots,
    s_star_poly,
    tree_poly,
    triangle_row,
    verify_interlacing,
    verify_tree_roots,
)

for n in (4, 8, 12):
    rep = verify_tree_roots(n)
    print(f"P_{n}: degree {rep.degree}, exact root 0, "
          f"{rep.n_negative} isolated roots in (-1, 0):")
    for lo, hi in rep.negative_intervals.intervals:
        print(f"    ({float(lo):+.12f}, {float(hi):+.12f})")

# the two smallest nontrivial S-polynomials have rational roots
for m, root in ((4, Fraction(-1, 3)), (5, Fraction(-1, 10))):
    poly = s_star_poly(m)
    iv = isolate_real_roots(poly, expected=2)
    assert iv.covers(root) and iv.covers(0)
    print(f"S_{m} coefficients {poly.coeffs}: certified roots 0 and {root}")

print("\ninterlacing around index 12 (S_11, S_12, S_13):")
rep = verify_interlacing(6)
for name, iv in (("S_11", rep.roots_low), ("S_12", rep.roots_mid), ("S_13", rep.roots_high)):
    mids = ", ".join(f"{float((lo + hi) / 2):+.6f}" for lo, hi in iv.intervals)
    print(f"  {name}: {mids}")

print("\nreal roots force strong row inequalities; spot check at n=40:")
for family in ("s", "sstar", "t"):
    _, row = triangle_row(family, 40)
    assert not check_slc(list(row)) and not check_newton(list(row))
    print(f"  {family}(40,.): strictly log-concave, Newton inequality holds")
