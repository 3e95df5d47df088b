"""End-to-end checks of the command-line surface, run in process."""

import csv
import io
import json

import pytest

from coinwait import (
    DyadicRational,
    IdentityReport,
    SimulationRunawayError,
    correlation_set,
    occurrence_counts,
    parse_pattern,
    waiting_time_table,
)
from coinwait import cli
from coinwait.cli import main


def run(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse usage failures
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


# -- expect ------------------------------------------------------------


def test_expect_text(capsys):
    code, out, err = run(["expect", "10101", "--stake", "5"], capsys)
    assert code == 0
    assert "expected tosses   42" in out
    assert "overlaps (c_j=1)  1 3 5" in out
    assert "expected profit   +37" in out


def test_expect_accepts_heads_tails(capsys):
    code, out, _ = run(["expect", "HH"], capsys)
    assert code == 0
    assert "expected tosses   6" in out


def test_expect_json_envelope(capsys):
    code, out, _ = run(["expect", "11", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"command", "inputs", "results"}
    assert doc["command"] == "expect"
    assert doc["inputs"] == {"pattern": "11", "stake": None}
    assert doc["results"]["expected_tosses"] == 6
    assert doc["results"]["overlaps"] == [1, 2]


def test_expect_json_big_numbers_become_strings(capsys):
    code, out, _ = run(["expect", "1" * 60, "--format", "json"], capsys)
    assert code == 0
    results = json.loads(out)["results"]
    assert isinstance(results["expected_tosses"], str)
    assert int(results["expected_tosses"]) == (1 << 61) - 2


def test_expect_csv(capsys):
    code, out, _ = run(["expect", "110", "--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == [
        "pattern", "length", "overlaps", "expected_tosses",
        "lower_bound", "upper_bound", "stake", "expected_profit",
    ]
    assert rows[1][0] == "110"
    assert rows[1][3] == "8"


def test_expect_rejects_bad_pattern(capsys):
    code, _, err = run(["expect", "21"], capsys)
    assert code == 1
    assert "invalid symbol" in err


def test_expect_rejects_negative_stake(capsys):
    code, _, err = run(["expect", "11", "--stake", "-2"], capsys)
    assert code == 1


# -- table -------------------------------------------------------------


def test_table_csv_round_trips(capsys):
    code, out, _ = run(["table", "--lengths", "2..6", "--format", "csv"], capsys)
    assert code == 0
    reader = csv.reader(io.StringIO(out))
    assert next(reader) == ["length", "average", "pattern"]
    groups = {}
    for length, average, pattern in reader:
        groups.setdefault((int(length), int(average)), []).append(pattern)
    want = {
        (row.length, row.average): list(row.patterns)
        for row in waiting_time_table(range(2, 7))
    }
    assert groups == want


def test_table_json_round_trips(capsys):
    code, out, _ = run(["table", "--lengths", "2..4", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    want = [
        {"length": r.length, "average": r.average, "patterns": list(r.patterns)}
        for r in waiting_time_table(range(2, 5))
    ]
    assert doc["results"] == want


def test_table_text_notes_complements(capsys):
    _, out, _ = run(["table", "--lengths", "2..2"], capsys)
    assert "complement" in out
    _, out_all, _ = run(["table", "--lengths", "2..2", "--all-patterns"], capsys)
    assert "complement" not in out_all
    assert "01" in out_all


def test_table_single_length_argument(capsys):
    code, out, _ = run(["table", "--lengths", "3", "--format", "csv"], capsys)
    assert code == 0
    assert out.count("\n") == 5  # header plus four canonical triples


def test_table_rejects_bad_ranges(capsys):
    assert run(["table", "--lengths", "5..3"], capsys)[0] == 1
    assert run(["table", "--lengths", "abc"], capsys)[0] == 1
    assert run(["table", "--lengths", "2..13"], capsys)[0] == 1


def test_table_cap_is_adjustable(capsys):
    code, out, _ = run(
        ["table", "--lengths", "13", "--cap", "13", "--format", "csv"], capsys
    )
    assert code == 0
    assert out.count("\n") == (1 << 12) + 1


# -- dist --------------------------------------------------------------


def test_dist_csv_header_and_values(capsys):
    code, out, _ = run(["dist", "01", "--horizon", "6", "--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "tau", "probability", "decimal", "cumulative", "residual"]
    assert rows[1] == ["2", "1", "1/4", "0.25", "0.25", "0.75"]
    assert rows[-1][0] == "6"


def test_dist_json_residual_is_exact(capsys):
    code, out, _ = run(["dist", "1101", "--horizon", "20", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    counts = occurrence_counts(parse_pattern("1101"), 20)
    assert doc["results"]["residual"] == DyadicRational(
        counts.sigma[20], 20
    ).fraction_str()
    masses = [float(r["decimal"]) for r in doc["results"]["rows"]]
    assert abs(sum(masses) + counts.sigma[20] / 2**20 - 1.0) < 1e-12


def test_dist_rejects_horizon_below_length(capsys):
    code, _, err = run(["dist", "1101", "--horizon", "3"], capsys)
    assert code == 1
    assert "horizon" in err


# -- simulate ----------------------------------------------------------


def test_simulate_text_and_determinism(capsys):
    args = ["simulate", "11", "--trials", "20000", "--seed", "9"]
    code, out1, _ = run(args, capsys)
    assert code == 0
    assert "exact expectation  6" in out1
    _, out2, _ = run(args, capsys)
    assert out1 == out2


def test_simulate_json_fields(capsys):
    code, out, _ = run(
        ["simulate", "10", "--trials", "5000", "--seed", "4", "--format", "json"],
        capsys,
    )
    assert code == 0
    results = json.loads(out)["results"]
    assert results["generator"] == "pcg64"
    assert results["exact"] == 4
    assert results["trials"] == 5000
    assert abs(results["sample_mean"] - 4) < 0.5


def test_simulate_rejects_bad_trials(capsys):
    assert run(["simulate", "11", "--trials", "0"], capsys)[0] == 1


def test_simulate_runaway_maps_to_internal_guard_exit(capsys, monkeypatch):
    def explode(*args, **kwargs):
        raise SimulationRunawayError("a game exceeded the cap")

    monkeypatch.setattr(cli, "simulate", explode)
    code, _, err = run(["simulate", "11"], capsys)
    assert code == 3
    assert "internal guard" in err


# -- verify ------------------------------------------------------------


def test_verify_passes_clean(capsys):
    code, out, _ = run(
        ["verify", "--lengths", "2..3", "--horizon", "32", "--oracle-n", "8"], capsys
    )
    assert code == 0
    assert "all identities hold" in out


def test_verify_json(capsys):
    code, out, _ = run(
        ["verify", "--lengths", "2..2", "--horizon", "16", "--oracle-n", "6",
         "--format", "json"],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["all_ok"] is True
    assert {r["pattern"] for r in doc["results"]["patterns"]} == {"10", "11"}


def test_verify_reports_failures_with_exit_two(capsys, monkeypatch):
    def always_broken(p, horizon):
        return IdentityReport(
            pattern=p,
            horizon=horizon,
            correlation=correlation_set(p),
            doubling_failures=(3,),
            expansion_failures=(),
            telescoping_failures=(),
        )

    monkeypatch.setattr(cli, "verify_identities", always_broken)
    code, out, _ = run(
        ["verify", "--lengths", "2..2", "--horizon", "16", "--oracle-n", "4"], capsys
    )
    assert code == 2
    assert "FAIL" in out
    assert "doubling at n=3" in out


def test_verify_rejects_small_horizon(capsys):
    code, _, err = run(["verify", "--lengths", "2..6", "--horizon", "10"], capsys)
    assert code == 1
    assert "horizon" in err


# -- shared plumbing ---------------------------------------------------


def test_output_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "out.csv"
    code, out, _ = run(
        ["table", "--lengths", "2..2", "--format", "csv", "--output", str(target)],
        capsys,
    )
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8").startswith("length,average,pattern\n")


def test_usage_errors_exit_one(capsys):
    assert run([], capsys)[0] == 1
    assert run(["expect"], capsys)[0] == 1
    assert run(["frobnicate"], capsys)[0] == 1
    assert run(["expect", "11", "--format", "yaml"], capsys)[0] == 1
