"""Command-line front end.

Subcommands:
  table    exact triangle rows and row sums
  stats    exact row statistics plus finite-n limit measurements
  compare  closed-form values against asymptotic estimates
  verify   named check suites (roots, slc, limits, identities)
  oracle   brute-force enumeration against the recurrences
  cache    save / verify / show row-cache files

Exit codes: 0 all good, 1 a check failed, 2 usage error.
Environment: PHYLOCOUNT_CACHE sets the default cache path,
PHYLOCOUNT_UNSAFE_SIZES=1 lifts the brute-force size caps.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .asymptotics import (
    ORDER_HEURISTIC,
    ORDER_INV_N,
    stats_S_asymp,
    stats_S_salvy,
    stats_Sstar_asymp,
    stats_T_asymp,
)
from .bruteforce import (
    PARTITION_CAP,
    TREE_CAP,
    SizeCapError,
    becker_inverse,
    becker_map,
    count_phylo,
    count_phylo_by_leaves,
    count_semilabeled,
    enumerate_partitions,
    iter_set_partitions,
)
from .distribution import (
    LLT_TARGET,
    DegenerateVarianceError,
    limit_report,
    row_stats_pgf,
    stats_S_closed,
    stats_Sstar_closed,
    stats_T_closed,
)
from .polynomials import (
    RootCountError,
    check_newton,
    check_slc,
    isolate_real_roots,
    tree_poly,
    verify_interlacing,
    verify_tree_roots,
)
from .triangles import (
    FAMILIES,
    ROW_FAMILIES,
    CacheFormatError,
    bell,
    bell_star,
    bell_star_alternating,
    default_cache_path,
    load_rows,
    phylo_F_star,
    save_rows,
    semilabeled_F,
    stirling2,
    stirling2_star,
    tree_count_T,
    triangle_row,
    verify_rows,
)

FLOAT_FMT = "%.17g"

_STATS_MIN_N = {"s": 1, "f": 1, "sstar": 2, "fstar": 2, "t": 1}
_COMPARE_MIN_N = {"s": 10, "sstar": 10, "t": 4}
_ROW_SUM_NAME = {"s": "B", "f": "B", "sstar": "B*", "fstar": "B*", "t": "t"}


def _f(x: float) -> str:
    return FLOAT_FMT % x


def _range_arg(text: str) -> tuple[int, int]:
    parts = text.split("..")
    try:
        if len(parts) == 1:
            a = b = int(parts[0])
        elif len(parts) == 2:
            a, b = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _width_arg(text: str) -> Fraction:
    if text.startswith("2^-"):
        try:
            k = int(text[3:])
        except ValueError:
            k = 0
        if k >= 1:
            return Fraction(1, 2**k)
    raise argparse.ArgumentTypeError(f"expected a width of the form 2^-K, got {text!r}")


def _usage(message: str) -> int:
    print(f"phylocount: error: {message}", file=sys.stderr)
    return 2


def _emit(rows: list[dict], fmt: str, plain) -> None:
    if fmt == "json":
        json.dump(rows, sys.stdout, indent=2)
        print()
    elif fmt == "csv":
        if rows:
            print(",".join(rows[0].keys()))
        for row in rows:
            cells = []
            for v in row.values():
                if v is None:
                    cells.append("")
                elif isinstance(v, float):
                    cells.append(_f(v))
                else:
                    s = str(v)
                    if "," in s or '"' in s:
                        s = '"' + s.replace('"', '""') + '"'
                    cells.append(s)
            print(",".join(cells))
    else:
        for row in rows:
            print(plain(row))


# -- table -----------------------------------------------------------------


def cmd_table(args: argparse.Namespace) -> int:
    a, b = args.n
    min_n = 1 if args.family in ("s", "f") else 2 if args.family != "t" else 1
    if a < min_n:
        return _usage(f"family {args.family} starts at n = {min_n}")
    rows = []
    for n in range(a, b + 1):
        k_min, values = triangle_row(args.family, n)
        rows.append(
            {
                "family": args.family,
                "n": n,
                "k_min": k_min,
                "values": ",".join(map(str, values)),
                "row_sum": str(sum(values)),
            }
        )

    def plain(row: dict) -> str:
        label = _ROW_SUM_NAME[row["family"]]
        return (
            f"{row['family']} n={row['n']} k={row['k_min']}..: "
            f"{row['values'] or '-'}  {label}_{row['n']}={row['row_sum']}"
        )

    _emit(rows, args.format, plain)
    return 0


# -- stats -----------------------------------------------------------------


def cmd_stats(args: argparse.Namespace) -> int:
    a, b = args.n
    if a < _STATS_MIN_N[args.family]:
        return _usage(f"stats for family {args.family} start at n = {_STATS_MIN_N[args.family]}")
    rows = []
    for n in range(a, b + 1):
        st = row_stats_pgf(args.family, n)
        rec = {
            "family": args.family,
            "n": n,
            "mean": str(st.mean),
            "mean_float": st.mean_f,
            "variance": str(st.variance),
            "variance_float": st.var_f,
            "sup_cdf_distance": None,
            "llt_value": None,
            "mode_index": None,
            "mode_offset": None,
            "mode_tie": None,
        }
        try:
            rep = limit_report(args.family, n)
        except DegenerateVarianceError:
            rep = None
        if rep is not None:
            rec.update(
                {
                    "sup_cdf_distance": rep.sup_cdf_distance,
                    "llt_value": rep.llt_value_at_mode,
                    "mode_index": rep.mode_index,
                    "mode_offset": rep.mode_offset,
                    "mode_tie": rep.mode_tie,
                }
            )
        rows.append(rec)

    def plain(row: dict) -> str:
        out = (
            f"{row['family']} n={row['n']}: mean {row['mean']} ({row['mean_float']:.6g}) "
            f"var {row['variance']} ({row['variance_float']:.6g})"
        )
        if row["mode_index"] is not None:
            out += (
                f"  supCDF {row['sup_cdf_distance']:.4g}"
                f"  llt {row['llt_value']:.6g} (target {LLT_TARGET:.6g})"
                f"  mode {row['mode_index']} offset {row['mode_offset']:+.3f}"
            )
            if row["mode_tie"]:
                out += " TIE"
        return out

    _emit(rows, args.format, plain)
    return 0


# -- compare ---------------------------------------------------------------


def cmd_compare(args: argparse.Namespace) -> int:
    a, b = args.n
    if a < _COMPARE_MIN_N[args.family]:
        return _usage(
            f"compare for family {args.family} starts at n = {_COMPARE_MIN_N[args.family]}"
        )
    if args.salvy and args.family not in ("s", "sstar"):
        return _usage("--salvy applies to families s and sstar only")
    if args.salvy and a < 16:
        return _usage("--salvy starts at n = 16")
    closed = {"s": stats_S_closed, "sstar": stats_Sstar_closed, "t": stats_T_closed}[args.family]
    asymp = {"s": stats_S_asymp, "sstar": stats_Sstar_asymp, "t": stats_T_asymp}[args.family]
    rows = []
    for n in range(a, b + 1):
        exact = closed(n)
        est_mean, est_var = asymp(n)
        for quantity, ex, est in (
            ("mean", exact.mean, est_mean),
            ("variance", exact.variance, est_var),
        ):
            exf = float(ex)
            rows.append(
                {
                    "n": n,
                    "family": args.family,
                    "quantity": quantity,
                    "exact": str(ex),
                    "estimate": est.value,
                    "scaled_residual": abs(exf - est.value) * n,
                    "error_order": est.error_order,
                }
            )
        if args.salvy:
            sm, sv = stats_S_salvy(n)
            for quantity, ex, est in (("mean", exact.mean, sm), ("variance", exact.variance, sv)):
                exf = float(ex)
                rows.append(
                    {
                        "n": n,
                        "family": args.family,
                        "quantity": quantity + "_salvy",
                        "exact": str(ex),
                        "estimate": est.value,
                        "scaled_residual": abs(exf - est.value) / abs(exf),
                        "error_order": est.error_order,
                    }
                )

    def plain(row: dict) -> str:
        return (
            f"{row['family']} n={row['n']} {row['quantity']}: exact {row['exact']} "
            f"estimate {row['estimate']:.10g} scaled residual {row['scaled_residual']:.4g} "
            f"[{row['error_order']}]"
        )

    _emit(rows, args.format, plain)
    return 0


# -- verify ----------------------------------------------------------------


def _verify_roots(a: int, b: int, width: Fraction | None) -> int:
    failures = 0
    for n in range(max(1, a), b + 1):
        try:
            rep = verify_tree_roots(n)
        except (RootCountError, ValueError) as exc:
            print(f"P_{n}: FAIL ({exc})")
            failures += 1
            continue
        line = (
            f"P_{n}: ok, exact root 0 plus {rep.n_negative} simple roots in (-1,0), "
            f"max width {float(rep.negative_intervals.max_width()):.3g}"
        )
        if n <= 12:
            pairs = ", ".join(
                f"[{float(lo):.10g}, {float(hi):.10g}]" for lo, hi in rep.negative_intervals.intervals
            )
            line += f"  intervals: {pairs}" if pairs else ""
        print(line)
        if width is not None:
            iv = isolate_real_roots(tree_poly(n), width=width, expected=n)
            if iv.count != n or iv.max_width() > width:
                print(f"P_{n}: FAIL (independent isolation disagrees)")
                failures += 1
    for j in range(2, (b - 1) // 2 + 1):
        try:
            rep = verify_interlacing(j)
        except (RootCountError, ValueError) as exc:
            print(f"S-chain {2*j}: FAIL ({exc})")
            failures += 1
            continue
        print(
            f"S-chain {2*j-1},{2*j},{2*j+1}: ok, interlacing certified "
            f"(negative root counts {rep.counts})"
        )
    print(f"roots: {'PASS' if failures == 0 else f'{failures} FAILURES'}")
    return 0 if failures == 0 else 1


def _verify_slc(a: int, b: int) -> int:
    failures = 0
    for family in FAMILIES:
        start = max(a, 1 if family == "s" else 2)
        bad = []
        for n in range(start, b + 1):
            _, row = triangle_row(family, n)
            if len(row) < 2:
                continue
            problems = check_slc(list(row)) + check_newton(list(row))
            if problems:
                bad.append((n, problems[0]))
        if bad:
            failures += len(bad)
            print(f"{family}: FAIL at n={bad[0][0]}: {bad[0][1]} ({len(bad)} rows)")
        else:
            print(f"{family}: rows {start}..{b} strictly log-concave, Newton holds")
    print(f"slc: {'PASS' if failures == 0 else f'{failures} FAILURES'}")
    return 0 if failures == 0 else 1


def _verify_limits(a: int, b: int) -> int:
    failures = 0
    for family in FAMILIES:
        hi_n = min(b, 400) if family == "t" else b
        lo = limit_report(family, a)
        hi = limit_report(family, hi_n)
        checks = [
            ("supCDF shrinks", hi.sup_cdf_distance < lo.sup_cdf_distance),
            (
                "llt approaches target",
                abs(hi.llt_value_at_mode - LLT_TARGET) < abs(lo.llt_value_at_mode - LLT_TARGET),
            ),
            ("mode offset < 0.5", abs(hi.mode_offset) < 0.5),
            ("no mode ties", not (lo.mode_tie or hi.mode_tie)),
        ]
        bad = [name for name, ok in checks if not ok]
        failures += len(bad)
        print(
            f"{family} n={a} vs n={hi_n}: supCDF {lo.sup_cdf_distance:.4f} -> "
            f"{hi.sup_cdf_distance:.4f}, |llt-target| "
            f"{abs(lo.llt_value_at_mode - LLT_TARGET):.2e} -> "
            f"{abs(hi.llt_value_at_mode - LLT_TARGET):.2e}, "
            f"offset {hi.mode_offset:+.3f}"
            + ("" if not bad else f"  FAIL: {', '.join(bad)}")
        )
    print(f"limits: {'PASS' if failures == 0 else f'{failures} FAILURES'}")
    return 0 if failures == 0 else 1


def _verify_identities(a: int, b: int) -> int:
    failures = 0
    lo = max(2, a)
    bad = sum(
        1
        for n in range(lo, b + 1)
        for m in range(1, n)
        if tree_count_T(n, m) != stirling2_star(n + m - 1, m)
    )
    if bad:
        failures += bad
        print(f"tree/partition identity: FAIL on {bad} pairs in n={lo}..{b}")
    else:
        print(f"tree/partition identity: T(n,m) = S*(n+m-1,m) for n={lo}..{b}, m<n")
    bad = sum(1 for n in range(max(1, a), b + 1) if bell(n) != bell_star(n + 1) + bell_star(n))
    if bad:
        failures += bad
        print(f"singleton split: FAIL on {bad} values")
    else:
        print(f"singleton split: B_n = B*_(n+1) + B*_n for n={max(1, a)}..{b}")
    bad = sum(1 for n in range(lo, b + 1) if bell_star(n) != bell_star_alternating(n))
    if bad:
        failures += bad
        print(f"alternating sum: FAIL on {bad} values")
    else:
        print(f"alternating sum: B*_n matches for n={lo}..{b}")
    print(f"identities: {'PASS' if failures == 0 else f'{failures} FAILURES'}")
    return 0 if failures == 0 else 1


_SUITES = {
    "roots": (_verify_roots, (1, 60)),
    "slc": (_verify_slc, (1, 300)),
    "limits": (_verify_limits, (100, 800)),
    "identities": (_verify_identities, (1, 200)),
}


def cmd_verify(args: argparse.Namespace) -> int:
    runner, default_range = _SUITES[args.suite]
    a, b = args.n if args.n is not None else default_range
    if args.suite == "roots":
        return runner(a, b, args.width)
    return runner(a, b)


# -- oracle ----------------------------------------------------------------


def cmd_oracle(args: argparse.Namespace) -> int:
    n_max = args.n_max
    unsafe = args.unsafe_sizes
    failures = 0

    top = min(n_max, PARTITION_CAP) if not unsafe else n_max
    for n in range(1, top + 1):
        counts = enumerate_partitions(n, unsafe=unsafe)
        want = [0] + [stirling2(n, k) for k in range(1, n + 1)]
        starred = enumerate_partitions(n, min_block_size=2, unsafe=unsafe)
        want_star = [0] + [stirling2_star(n, k) for k in range(1, n + 1)]
        if counts != want or sum(counts) != bell(n):
            failures += 1
            print(f"partitions n={n}: FAIL")
        if starred != want_star or sum(starred) != bell_star(n):
            failures += 1
            print(f"partitions without singletons n={n}: FAIL")
    print(f"partitions: n=1..{top} match S, S*, B, B*" if failures == 0 else "partitions: FAIL")

    tree_top = min(n_max, TREE_CAP) if not unsafe else n_max
    tree_fail = 0
    for v in range(1, tree_top + 1):
        for k in range(1, v + 1):
            if count_semilabeled(v, k, unsafe=unsafe) != semilabeled_F(v, k):
                tree_fail += 1
                print(f"semilabeled v={v} k={k}: FAIL")
            if count_phylo(v, k, unsafe=unsafe) != phylo_F_star(v, k):
                tree_fail += 1
                print(f"phylo v={v} k={k}: FAIL")
    for leaves in range(2, tree_top + 1):
        for m in range(1, tree_top + 2 - leaves):
            if count_phylo_by_leaves(leaves, m, unsafe=unsafe) != tree_count_T(leaves, m):
                tree_fail += 1
                print(f"trees by leaves n={leaves} m={m}: FAIL")
    failures += tree_fail
    print(
        f"trees: up to {tree_top} vertices match F, F*, T"
        if tree_fail == 0
        else "trees: FAIL"
    )

    becker_top = min(n_max - 1, PARTITION_CAP - 1) if not unsafe else n_max - 1
    becker_fail = 0
    for n in range(1, becker_top + 1):
        images = set()
        total = 0
        for part in iter_set_partitions(n, unsafe=unsafe):
            if not any(len(block) == 1 for block in part):
                continue
            total += 1
            image = becker_map(part)
            if becker_inverse(image) != tuple(tuple(b) for b in part):
                becker_fail += 1
            images.add(image)
        if len(images) != total or total != bell_star(n + 1):
            becker_fail += 1
            print(f"becker n={n}: FAIL")
    failures += becker_fail
    print(
        f"becker bijection: n=1..{becker_top} maps onto singleton-free partitions"
        if becker_fail == 0
        else "becker bijection: FAIL"
    )

    print(f"oracle: {'PASS' if failures == 0 else f'{failures} FAILURES'}")
    return 0 if failures == 0 else 1


# -- cache -----------------------------------------------------------------


def cmd_cache(args: argparse.Namespace) -> int:
    path = args.cache if args.cache else default_cache_path()
    if args.action == "save":
        if args.family is None or args.n is None:
            return _usage("cache save needs --family and --n")
        a, b = args.n
        start = max(a, 2 if args.family == "t" else 1)
        count = save_rows(path, args.family, range(start, b + 1))
        print(f"saved {count} rows of family {args.family} to {path}")
        return 0
    try:
        if args.action == "verify":
            problems = verify_rows(path)
            for p in problems:
                print(p)
            print(f"cache verify: {'PASS' if not problems else f'{len(problems)} MISMATCHES'}")
            return 0 if not problems else 1
        records = load_rows(path)
    except FileNotFoundError:
        return _usage(f"no cache file at {path}")
    except CacheFormatError as exc:
        print(f"cache: malformed file: {exc}", file=sys.stderr)
        return 1
    by_family: dict[str, list[int]] = {}
    for family, n, _, _ in records:
        by_family.setdefault(family, []).append(n)
    for family in sorted(by_family):
        ns = sorted(by_family[family])
        print(f"{family}: {len(ns)} rows, n {ns[0]}..{ns[-1]}")
    if not records:
        print("cache is empty")
    return 0


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phylocount",
        description="Exact and asymptotic counts of set partitions and phylogenetic trees.",
        epilog=(
            "Environment: PHYLOCOUNT_CACHE overrides the default cache path; "
            "PHYLOCOUNT_UNSAFE_SIZES=1 lifts the brute-force size caps."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser, default: str) -> None:
        p.add_argument("--format", choices=("csv", "json", "plain"), default=default)

    p = sub.add_parser("table", help="exact triangle rows and row sums")
    p.add_argument("--family", choices=ROW_FAMILIES, required=True)
    p.add_argument("--n", type=_range_arg, required=True, metavar="A..B")
    add_format(p, "plain")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser(
        "stats",
        help="row statistics (family t: n indexes the tree polynomial, row T(n+1,.))",
    )
    p.add_argument("--family", choices=ROW_FAMILIES, required=True)
    p.add_argument("--n", type=_range_arg, required=True, metavar="A..B")
    add_format(p, "plain")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("compare", help="exact statistics against asymptotic estimates")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=_range_arg, required=True, metavar="A..B")
    p.add_argument("--salvy", action="store_true", help="add the log-only estimates")
    add_format(p, "csv")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="run a named check suite")
    p.add_argument("--suite", choices=tuple(_SUITES), required=True)
    p.add_argument("--n", type=_range_arg, default=None, metavar="A..B")
    p.add_argument(
        "--width",
        type=_width_arg,
        default=None,
        metavar="2^-K",
        help="roots suite: also isolate via Sturm sequences to this width",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force enumeration against the recurrences")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--unsafe-sizes", action="store_true", help="lift the size caps")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("cache", help="row-cache files")
    p.add_argument("action", choices=("save", "verify", "show"))
    p.add_argument("--family", choices=ROW_FAMILIES, default=None)
    p.add_argument("--n", type=_range_arg, default=None, metavar="A..B")
    p.add_argument("--cache", default=None, metavar="PATH")
    p.set_defaults(func=cmd_cache)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except SizeCapError as exc:
        print(f"phylocount: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
