"""Command-line interface: output formats, check suites, cache files,
and usage-error exit codes.  Everything drives main() in-process."""

import json

import pytest

from phylocount.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- table -------------------------------------------------------------------


def test_table_plain_rows(capsys):
    code, out, _ = run(capsys, "table", "--family", "sstar", "--n", "5")
    assert code == 0
    assert out.strip() == "sstar n=5 k=1..: 1,10  B*_5=11"
    code, out, _ = run(capsys, "table", "--family", "t", "--n", "4")
    assert code == 0
    assert out.strip() == "t n=4 k=1..: 1,10,15  t_4=26"
    code, out, _ = run(capsys, "table", "--family", "s", "--n", "1")
    assert code == 0
    assert out.strip() == "s n=1 k=1..: 1  B_1=1"


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--family", "f", "--n", "4", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "family,n,k_min,values,row_sum"
    assert lines[1] == 'f,4,1,"1,6,7,1",15'


def test_table_json(capsys):
    code, out, _ = run(
        capsys, "table", "--family", "fstar", "--n", "7", "--format", "json"
    )
    assert code == 0
    rows = json.loads(out)
    assert rows == [
        {
            "family": "fstar",
            "n": 7,
            "k_min": 5,
            "values": "105,56,1",
            "row_sum": "162",
        }
    ]


def test_table_range(capsys):
    code, out, _ = run(capsys, "table", "--family", "s", "--n", "1..6")
    assert code == 0
    assert len(out.strip().splitlines()) == 6


# -- stats -------------------------------------------------------------------


def test_stats_plain(capsys):
    code, out, _ = run(capsys, "stats", "--family", "t", "--n", "2")
    assert code == 0
    assert "mean 7/4" in out and "var 3/16" in out
    code, out, _ = run(capsys, "stats", "--family", "s", "--n", "1")
    assert code == 0
    assert "supCDF" not in out  # degenerate row has no limit diagnostics


def test_stats_json(capsys):
    code, out, _ = run(
        capsys, "stats", "--family", "sstar", "--n", "5", "--format", "json"
    )
    assert code == 0
    (row,) = json.loads(out)
    assert row["mean"] == "21/11"
    assert row["variance"] == "10/121"
    assert row["mode_index"] == 2
    assert row["mode_tie"] is False


# -- compare -----------------------------------------------------------------


def test_compare_csv(capsys):
    code, out, _ = run(capsys, "compare", "--family", "t", "--n", "100")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,family,quantity,exact,estimate,scaled_residual,error_order"
    assert len(lines) == 3
    assert lines[1].startswith("100,t,mean,")
    assert lines[2].startswith("100,t,variance,")


def test_compare_salvy_rows(capsys):
    code, out, _ = run(capsys, "compare", "--family", "s", "--n", "20", "--salvy")
    assert code == 0
    quantities = [line.split(",")[2] for line in out.strip().splitlines()[1:]]
    assert quantities == ["mean", "variance", "mean_salvy", "variance_salvy"]


# -- verify ------------------------------------------------------------------


def test_verify_identities(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "identities", "--n", "1..40")
    assert code == 0
    assert out.strip().endswith("identities: PASS")


def test_verify_slc(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "slc", "--n", "1..40")
    assert code == 0
    assert out.strip().endswith("slc: PASS")


def test_verify_roots_with_width(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "roots", "--n", "1..10", "--width", "2^-40"
    )
    assert code == 0
    assert out.strip().endswith("roots: PASS")


def test_verify_limits_default_range(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "limits")
    assert code == 0
    assert out.strip().endswith("limits: PASS")


# -- oracle ------------------------------------------------------------------


def test_oracle_small(capsys):
    code, out, _ = run(capsys, "oracle", "--n-max", "5")
    assert code == 0
    assert out.strip().endswith("oracle: PASS")


# -- cache -------------------------------------------------------------------


def test_cache_roundtrip(tmp_path, capsys):
    path = str(tmp_path / "rows.cache")
    code, out, _ = run(
        capsys, "cache", "save", "--family", "sstar", "--n", "1..30", "--cache", path
    )
    assert code == 0
    assert "saved 30 rows" in out
    code, out, _ = run(capsys, "cache", "show", "--cache", path)
    assert code == 0
    assert "sstar: 30 rows, n 1..30" in out
    code, out, _ = run(capsys, "cache", "verify", "--cache", path)
    assert code == 0
    assert "cache verify: PASS" in out


def test_cache_detects_tampering(tmp_path, capsys):
    path = str(tmp_path / "rows.cache")
    assert run(capsys, "cache", "save", "--family", "t", "--n", "2..8", "--cache", path)[0] == 0
    lines = (tmp_path / "rows.cache").read_text().splitlines()
    for i, line in enumerate(lines):
        if line.startswith("t,5,"):
            head, _, _ = line.rpartition(",")
            lines[i] = head + ",999"
            break
    (tmp_path / "rows.cache").write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "cache", "verify", "--cache", path)
    assert code == 1
    assert "MISMATCHES" in out


def test_cache_missing_and_malformed(tmp_path, capsys):
    code, _, err = run(capsys, "cache", "show", "--cache", str(tmp_path / "nope"))
    assert code == 2
    bad = tmp_path / "bad.cache"
    bad.write_text("s,2,1,one,two\n")
    code, _, err = run(capsys, "cache", "verify", "--cache", str(bad))
    assert code == 1
    assert "malformed" in err


def test_cache_env_default_path(tmp_path, capsys, monkeypatch):
    target = tmp_path / "env.cache"
    monkeypatch.setenv("PHYLOCOUNT_CACHE", str(target))
    code, out, _ = run(capsys, "cache", "save", "--family", "s", "--n", "1..5")
    assert code == 0
    assert target.exists()
    code, out, _ = run(capsys, "cache", "show")
    assert code == 0
    assert "s: 5 rows, n 1..5" in out


# -- usage errors ------------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        (),
        ("table", "--family", "q", "--n", "3"),
        ("table", "--family", "s", "--n", "5..1"),
        ("table", "--family", "s", "--n", "x"),
        ("compare", "--family", "t", "--n", "100..120", "--salvy"),
        ("compare", "--family", "s", "--n", "5"),
        ("verify", "--suite", "roots", "--n", "1..5", "--width", "0.1"),
        ("cache", "save", "--cache", "/tmp/unused.cache"),
        ("stats", "--family", "sstar", "--n", "0"),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code = main(list(argv))
    capsys.readouterr()
    assert code == 2


def test_help_exits_clean(capsys):
    assert main(["--help"]) == 0
    out, _ = capsys.readouterr()
    assert "table" in out and "oracle" in out
