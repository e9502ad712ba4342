"""Plot-ready file formats: trace CSV, population snapshot CSV, summary JSON.

Reals are written in their shortest round-trip form (``repr``), so reading a
file back gives bit-identical floats.
"""
from __future__ import annotations

import csv
import io
import json
from typing import IO, Iterable

from .harness import Check, SummaryTable
from .league import League, Tier
from .records import RunResult, SeasonRecord

TRACE_HEADER = ["season", "best_wealthy", "best_regular", "best_weakest", "global_best"]

SUMMARY_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["objective", "algorithm", "runs", "aggregates"],
    "properties": {
        "objective": {"type": "string"},
        "algorithm": {"enum": ["slo", "pso", "ga"]},
        "runs": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["run", "seed", "best_raw", "best_score", "best_point"],
                "properties": {
                    "run": {"type": "integer", "minimum": 0},
                    "seed": {"type": "integer", "minimum": 0},
                    "best_raw": {"type": "number"},
                    "best_score": {"type": "number"},
                    "best_point": {"type": "array", "items": {"type": "number"}, "minItems": 1},
                },
            },
        },
        "aggregates": {
            "type": "object",
            "required": ["best", "median", "worst", "mean", "stddev", "best_point"],
            "properties": {
                "best": {"type": "number"},
                "median": {"type": "number"},
                "worst": {"type": "number"},
                "mean": {"type": "number"},
                "stddev": {"type": "number", "minimum": 0},
                "best_point": {"type": "array", "items": {"type": "number"}},
            },
        },
        "acceptance": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "value", "tolerance", "passed"],
                "properties": {
                    "name": {"type": "string"},
                    "value": {"type": "number"},
                    "tolerance": {"type": "number"},
                    "passed": {"type": "boolean"},
                },
            },
        },
    },
}


def _real(x: float | None) -> str:
    return "" if x is None else repr(float(x))


def _writer(destination: IO[str]):
    return csv.writer(destination, lineterminator="\n")


def emit_trace_csv(result: RunResult, destination: IO[str]) -> None:
    w = _writer(destination)
    w.writerow(TRACE_HEADER)
    for r in result.trace:
        w.writerow([r.season, _real(r.best_wealthy), _real(r.best_regular), _real(r.best_weakest), _real(r.global_best)])


def read_trace_csv(source: IO[str]) -> list[SeasonRecord]:
    reader = csv.DictReader(source)
    if reader.fieldnames != TRACE_HEADER:
        raise ValueError(f"unexpected trace header {reader.fieldnames}")

    def opt(s):
        return float(s) if s else None

    return [
        SeasonRecord(
            season=int(row["season"]),
            global_best=float(row["global_best"]),
            best_wealthy=opt(row["best_wealthy"]),
            best_regular=opt(row["best_regular"]),
            best_weakest=opt(row["best_weakest"]),
        )
        for row in reader
    ]


def emit_snapshot(league: League, destination: IO[str]) -> None:
    dim = len(league.global_best_point)
    w = _writer(destination)
    w.writerow(["tier", "team_index"] + [f"dim_{d}" for d in range(dim)] + ["score"])
    for team in league.teams():
        w.writerow([team.tier.value, team.index] + [_real(v) for v in team.values] + [_real(team.score)])


def read_snapshot(source: IO[str]) -> dict[Tier, list[tuple[list[float], float]]]:
    """Parse a snapshot back into ``{tier: [(values, score), ...]}`` in team order."""
    reader = csv.reader(source)
    header = next(reader)
    dim = len(header) - 3
    out: dict[Tier, list[tuple[list[float], float]]] = {t: [] for t in Tier}
    for row in reader:
        out[Tier(row[0])].append(([float(v) for v in row[2 : 2 + dim]], float(row[-1])))
    return out


def summary_document(summary: SummaryTable, checks: Iterable[Check] | None = None) -> dict:
    doc = {
        "objective": summary.objective,
        "algorithm": summary.algorithm,
        "runs": [
            {
                "run": row.run,
                "seed": row.seed,
                "best_raw": row.best_raw,
                "best_score": row.best_score,
                "best_point": row.best_point,
            }
            for row in summary.rows
        ],
        "aggregates": {
            "best": summary.best,
            "median": summary.median,
            "worst": summary.worst,
            "mean": summary.mean,
            "stddev": summary.stddev,
            "best_point": summary.best_point,
        },
    }
    if checks is not None:
        doc["acceptance"] = [
            {"name": c.name, "value": c.value, "tolerance": c.tolerance, "passed": c.passed} for c in checks
        ]
    return doc


def emit_summary_json(summary: SummaryTable, destination: IO[str], checks: Iterable[Check] | None = None) -> None:
    json.dump(summary_document(summary, checks), destination, indent=2)
    destination.write("\n")


def to_string(emit, obj, *args) -> str:
    buf = io.StringIO()
    emit(obj, buf, *args)
    return buf.getvalue()
