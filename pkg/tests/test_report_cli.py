"""Report serialization round trips and command line entry points."""

import csv
import io
import json
from dataclasses import replace
from fractions import Fraction

import pytest

import alphadet.cli as cli
from alphadet.report import (
    build_report,
    from_json,
    sanity_check,
    to_csv,
    to_json,
    to_text,
)
from alphadet.verify import CheckResult


# ---------------------------------------------------------------------------
# report


def test_build_report_rows():
    r = build_report(2, 2)
    assert (r.n, r.l) == (2, 2)
    assert [row.shape.parts for row in r.rows] == [(4,), (3, 1), (2, 2)]
    assert [row.kostka for row in r.rows] == [1, 1, 1]
    assert [row.generic_multiplicity for row in r.rows] == [1, 1, 1]
    assert r.oracle is None
    assert not r.alpha_specializations


def test_json_round_trip_plain():
    r = build_report(2, 2, alphas=(Fraction(1), Fraction(-1, 2)))
    assert from_json(to_json(r)) == r


def test_json_round_trip_full():
    r = build_report(
        2, 2, alphas=(Fraction(1),), include_matrices=True, with_oracle=True
    )
    r2 = from_json(to_json(r))
    assert r2 == r
    # serialization is stable under a round trip
    assert to_json(r2) == to_json(r)


def test_json_schema_fields():
    r = build_report(3, 1, alphas=(Fraction(1),), with_oracle=True)
    doc = json.loads(to_json(r))
    assert set(doc) == {"n", "l", "rows", "alpha_specializations", "oracle"}
    assert doc["rows"][0]["shape"] == [3]
    assert doc["rows"][0]["trace"] == ["1", "3", "2"]
    assert doc["rows"][0]["transition"] is None
    assert doc["oracle"]["agrees"] is True
    assert doc["oracle"]["generic"] == [1, 2, 1]
    spec = doc["alpha_specializations"][0]
    assert spec["alpha"] == "1"
    assert spec["multiplicities"] == [1, 0, 0]


def test_to_csv_structure():
    r = build_report(2, 2, alphas=(Fraction(1),))
    rows = list(csv.reader(io.StringIO(to_csv(r))))
    assert rows[0] == [
        "n", "l", "shape", "kostka", "generic_multiplicity", "trace", "mult@1",
    ]
    assert len(rows) == 4
    assert rows[1][2] == "4"
    assert rows[2][2] == "3,1"
    # trace column holds the ascending coefficients
    assert rows[1][5] == "1,2,1"
    assert [row[6] for row in rows[1:]] == ["1", "0", "1"]


def test_to_text_mentions_shapes():
    text = to_text(build_report(2, 2))
    assert "(3,1)" in text
    assert "1 - a^2" in text
    assert text.splitlines()[1].split() == ["shape", "size", "mult", "trace"]


def test_sanity_check_clean_and_tampered():
    r = build_report(2, 2)
    assert sanity_check(r) == []
    bad = replace(r, rows=(replace(r.rows[0], kostka=5),) + r.rows[1:])
    assert sanity_check(bad)


# ---------------------------------------------------------------------------
# CLI


def test_cli_decompose_text(capsys):
    assert cli.main(["decompose", "--n", "2", "--l", "2"]) == 0
    out = capsys.readouterr().out
    assert "3,1" in out or "(3, 1)" in out


def test_cli_decompose_json_with_oracle(capsys):
    rc = cli.main(
        ["decompose", "--n", "2", "--l", "2", "--alpha=1", "--alpha=-1/2",
         "--oracle", "--format", "json"]
    )
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["oracle"]["agrees"] is True
    alphas = [s["alpha"] for s in doc["alpha_specializations"]]
    assert alphas == ["1", "-1/2"]


def test_cli_transition_check(capsys):
    rc = cli.main(
        ["transition", "--n", "2", "--l", "2", "--lam", "3,1", "--check",
         "--format", "json"]
    )
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["matrix"] == [[["1", "0", "-1"]]]
    assert doc["size"] == 1
    assert all(doc["checks"].values())


def test_cli_trace_check(capsys):
    rc = cli.main(["trace", "--n", "3", "--l", "2", "--lam", "5,1", "--check"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "check matrix-trace: pass" in out


def test_cli_zonal(capsys):
    rc = cli.main(["zonal", "--n", "2", "--l", "2", "--lam", "2,2"])
    assert rc == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out == ["s=0: 1", "s=1: -1/2", "s=2: 1"]
    # n != 2 without an explicit permutation is refused
    assert cli.main(["zonal", "--n", "3", "--l", "1", "--lam", "2,1"]) == 2
    assert cli.main(["zonal", "--n", "3", "--l", "1", "--lam", "2,1", "--g", "2,1,3"]) == 0


def test_cli_adet(tmp_path, capsys):
    path = tmp_path / "m.csv"
    path.write_text("1,2\n3,4\n")
    assert cli.main(["adet", str(path), "--alpha=-1"]) == 0
    assert capsys.readouterr().out.strip() == "-2"
    assert cli.main(["adet", str(path), "--alpha=1", "--alpha=1/2"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out == ["alpha=1: 10", "alpha=1/2: 7"]


def test_cli_adet_bad_inputs(tmp_path, capsys):
    missing = tmp_path / "nope.csv"
    assert cli.main(["adet", str(missing), "--alpha=1"]) == 2
    bad = tmp_path / "bad.csv"
    bad.write_text("1,2,3\n4,5,6\n")
    assert cli.main(["adet", str(bad), "--alpha=1"]) == 2


def test_cli_verify_pass(capsys):
    assert cli.main(["verify", "gkp", "--max-l", "3"]) == 0
    out = capsys.readouterr().out
    assert "[PASS]" in out
    assert out.strip().endswith("4/4 checks passed")


def test_cli_verify_forced_failure(monkeypatch, capsys):
    def fake(name, **kwargs):
        return [CheckResult("forced", False, "forced failure")]

    monkeypatch.setattr(cli, "run_suite", fake)
    assert cli.main(["verify", "gkp"]) == 1
    out = capsys.readouterr().out
    assert "[FAIL] forced" in out
    assert "0/1 checks passed" in out


def test_cli_usage_errors():
    with pytest.raises(SystemExit) as err:
        cli.main(["verify", "no-such-suite"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        cli.main(["decompose", "--l", "2"])  # missing --n
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        cli.main(["transition", "--n", "2", "--l", "2", "--lam", "bogus"])
    assert err.value.code == 2


def test_cli_version():
    with pytest.raises(SystemExit) as err:
        cli.main(["--version"])
    assert err.value.code == 0


def test_cli_cap_exceeded_is_exit_2(capsys):
    rc = cli.main(["decompose", "--n", "5", "--l", "3"])
    assert rc == 2
    assert "cap" in capsys.readouterr().err


def test_cli_explore_json(capsys):
    rc = cli.main(
        ["explore-diagonalizable", "--n", "2", "--l", "2", "--lam", "3,1",
         "--alpha=1/2", "--format", "json"]
    )
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    probe = doc["probes"][0]
    assert probe["alpha"] == "1/2"
    assert probe["diagonalizable"] is True
    # 1x1 matrix: charpoly t - (1 - a^2) at a=1/2 is t - 3/4
    assert probe["charpoly"] == ["-3/4", "1"]
