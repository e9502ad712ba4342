import io
import json
import struct

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from slo.cli import main, parse_args
from slo.harness import check_acceptance, summarize
from slo.league import SloConfig, run_slo
from slo.objectives import lookup, names
from slo.baselines import PsoConfig, run_pso
from slo.output import (
    SUMMARY_SCHEMA,
    TRACE_HEADER,
    emit_snapshot,
    emit_summary_json,
    emit_trace_csv,
    read_snapshot,
    read_trace_csv,
    to_string,
)
from slo.league import Tier


def test_parse_defaults():
    inv = parse_args(["run", "--objective", "g1", "--seed", "42"])
    cfg = inv.config
    assert (cfg.n_a, cfg.n_b, cfg.n_c, cfg.seasons, cfg.alpha, cfg.seed) == (30, 30, 30, 100, 0.05, 42)
    assert inv.algo == "slo" and inv.objective == "g1"
    assert parse_args(["table", "--objective", "g2"]).runs == 5


def test_parse_pso():
    inv = parse_args(["run", "--objective", "g3", "--algo", "pso", "--swarm", "90", "--iters", "100"])
    assert isinstance(inv.config, PsoConfig)
    assert (inv.config.swarm_size, inv.config.iterations) == (90, 100)


@pytest.mark.parametrize("argv,needle", [
    (["run", "--objective", "g9"], "g1, g2, g3, g4"),
    (["run", "--objective", "g1", "--seasons", "ten"], "--seasons"),
    (["run", "--objective", "g1", "--alpha", "2"], "--alpha"),
    (["run", "--objective", "g1", "--seed", "-1"], "--seed"),
    (["run", "--objective", "g1", "--bogus"], "--bogus"),
    (["run", "--objective", "g1", "--swarm", "10"], "--swarm"),
    (["run", "--objective", "g1", "--algo", "ga", "--na", "3"], "--na"),
    (["run"], "--objective"),
    (["snapshot", "--objective", "g1"], "snapshot"),
])
def test_usage_errors(capsys, argv, needle):
    with pytest.raises(SystemExit) as exc:
        parse_args(argv)
    assert exc.value.code == 2
    assert needle in capsys.readouterr().err


def test_list_objectives():
    out = io.StringIO()
    assert main(["list-objectives"], out=out) == 0
    listed = [line.split("\t")[0] for line in out.getvalue().splitlines()]
    assert listed == names()


def test_trace_csv_round_trip():
    result = run_slo(SloConfig(seasons=100, seed=3), lookup("g2"))
    text = to_string(emit_trace_csv, result)
    lines = text.split("\n")
    assert lines[0] == ",".join(TRACE_HEADER)
    assert len(text.splitlines()) == 101 and "\r" not in text
    parsed = read_trace_csv(io.StringIO(text))
    assert parsed == result.trace
    gb = [r.global_best for r in parsed]
    assert all(a <= b for a, b in zip(gb, gb[1:]))


def test_baseline_trace_has_empty_tier_columns():
    result = run_pso(PsoConfig(swarm_size=5, iterations=3), lookup("g1"))
    rows = to_string(emit_trace_csv, result).splitlines()[1:]
    assert all(row.split(",")[1:4] == ["", "", ""] for row in rows)
    assert read_trace_csv(io.StringIO("\n".join([",".join(TRACE_HEADER)] + rows))) == result.trace


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_reals_round_trip_bit_exact(x):
    from slo.records import RunResult, SeasonRecord

    r = RunResult("slo", "g1", 0, [x], x, x, [SeasonRecord(1, x, x, x, x)])
    back = read_trace_csv(io.StringIO(to_string(emit_trace_csv, r)))[0]
    assert struct.pack("<d", back.global_best) == struct.pack("<d", x)
    doc = json.loads(to_string(emit_summary_json, summarize([r])))
    assert struct.pack("<d", doc["runs"][0]["best_raw"]) == struct.pack("<d", x)


def test_snapshot_round_trip():
    config = SloConfig(seasons=2, seed=8)
    _, before, after = run_slo(config, lookup("g4"), keep_league=True)
    text = to_string(emit_snapshot, before)
    assert text.splitlines()[0] == "tier,team_index,dim_0,dim_1,score"
    assert len(text.splitlines()) == 91
    parsed = read_snapshot(io.StringIO(text))
    assert [len(parsed[t]) for t in Tier] == [30, 30, 30]
    for tier in Tier:
        for (values, score), team in zip(parsed[tier], before.tier(tier)):
            assert values == team.values.tolist() and score == team.score


def test_summary_json_schema():
    g2 = lookup("g2")
    results = [run_slo(SloConfig(5, 5, 5, seasons=5, seed=s), g2) for s in range(5)]
    summary = summarize(results)
    doc = json.loads(to_string(emit_summary_json, summary, check_acceptance(summary, g2)))
    jsonschema.validate(doc, SUMMARY_SCHEMA)
    assert len(doc["runs"]) == 5 and doc["objective"] == "g2"
    single = json.loads(to_string(emit_summary_json, summarize(results[:1])))
    jsonschema.validate(single, SUMMARY_SCHEMA)
    agg = single["aggregates"]
    assert agg["best"] == agg["median"] == agg["worst"] == agg["mean"] and agg["stddev"] == 0


def test_table_command_writes_files(tmp_path):
    out = io.StringIO()
    trace = tmp_path / "trace.csv"
    summary = tmp_path / "summary.json"
    code = main(["table", "--objective", "g4", "--runs", "2", "--seasons", "20", "--seed", "3",
                 "--trace", str(trace), "--summary", str(summary)], out=out)
    assert code == 0
    doc = json.loads(summary.read_text())
    assert [r["seed"] for r in doc["runs"]] == [3, 4]
    for i in range(2):
        assert len((tmp_path / f"trace.run{i}.csv").read_text().splitlines()) == 21


def test_run_with_snapshots(tmp_path):
    before, after = tmp_path / "b.csv", tmp_path / "a.csv"
    code = main(["run", "--objective", "g4", "--seasons", "5", "--na", "3", "--nb", "4", "--nc", "5",
                 "--snapshot-before", str(before), "--snapshot-after", str(after)], out=io.StringIO())
    assert code == 0
    parsed = read_snapshot(io.StringIO(before.read_text()))
    assert [len(parsed[t]) for t in Tier] == [3, 4, 5]
    assert before.read_text() != after.read_text()


def test_check_exit_codes():
    out = io.StringIO()
    assert main(["run", "--objective", "g1", "--check"], out=out) == 0
    assert "PASS" in out.getvalue()
    # one season cannot meet the G2 table tolerance
    out = io.StringIO()
    assert main(["run", "--objective", "g2", "--seasons", "1", "--check"], out=out) == 1
    assert "FAIL" in out.getvalue()


def test_write_failure_reports_path(tmp_path, capsys):
    missing = tmp_path / "nope" / "trace.csv"
    code = main(["run", "--objective", "g1", "--seasons", "2", "--trace", str(missing)], out=io.StringIO())
    assert code == 1
    assert str(missing) in capsys.readouterr().err


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "slo", "list-objectives"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.count("\n") == 4
