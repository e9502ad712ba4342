"""Command line entry point.

    slo run --objective g1 --seed 42 --trace g1.csv
    slo table --objective g2 --runs 5 --summary g2.json --check
    slo snapshot --objective g4 --snapshot-before before.csv --snapshot-after after.csv
    slo list-objectives
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .baselines import GaConfig, PsoConfig
from .harness import (
    BASELINE_TOLERANCE,
    ExperimentConfig,
    RunFailed,
    check_acceptance,
    run_experiment,
    summarize,
)
from .league import SloConfig, run_slo
from .objectives import REGISTRY, UnknownObjective, lookup, names
from .output import emit_snapshot, emit_summary_json, emit_trace_csv

SLO_FLAGS = ("na", "nb", "nc", "seasons", "alpha")
BASELINE_FLAGS = ("swarm", "iters")


class UsageError(Exception):
    pass


@dataclass
class CliInvocation:
    subcommand: str
    objective: str | None
    algo: str
    seed: int
    runs: int
    config: SloConfig | PsoConfig | GaConfig | None
    options: argparse.Namespace


def _objective(text: str) -> str:
    try:
        return lookup(text).name
    except UnknownObjective as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _u64(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"must be an unsigned 64-bit integer, got {value}")
    return value


def _alpha(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 < value <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in (0, 1], got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slo", description="Soccer League Optimization experiments")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--objective", type=_objective, required=True, help=f"one of {', '.join(names())}")
    common.add_argument("--seed", type=_u64, default=0, help="seed (table: seed of run 0, run i uses seed+i)")
    common.add_argument("--na", type=_positive, help="wealthiest teams (default 30)")
    common.add_argument("--nb", type=_positive, help="regular teams (default 30)")
    common.add_argument("--nc", type=_positive, help="weakest teams (default 30)")
    common.add_argument("--seasons", type=_positive, help="seasons (default 100)")
    common.add_argument("--alpha", type=_alpha, help="training step as a fraction of domain width (default 0.05)")

    experiment = argparse.ArgumentParser(add_help=False)
    experiment.add_argument("--algo", choices=["slo", "pso", "ga"], default="slo")
    experiment.add_argument("--swarm", type=_positive, help="PSO swarm size or GA population (default 90)")
    experiment.add_argument("--iters", type=_positive, help="PSO iterations or GA generations (default 100)")
    experiment.add_argument("--trace", type=Path, help="trace CSV path; table runs write one file per run")
    experiment.add_argument("--summary", type=Path, help="summary JSON path")
    experiment.add_argument("--check", action="store_true", help="exit nonzero unless tolerance checks pass")

    run = sub.add_parser("run", parents=[common, experiment], help="one seeded run")
    run.add_argument("--snapshot-before", type=Path)
    run.add_argument("--snapshot-after", type=Path)

    table = sub.add_parser("table", parents=[common, experiment], help="multi-run experiment with summary")
    table.add_argument("--runs", type=_positive, default=5)

    snap = sub.add_parser("snapshot", parents=[common], help="population positions before/after a SLO run")
    snap.add_argument("--snapshot-before", type=Path)
    snap.add_argument("--snapshot-after", type=Path)

    sub.add_parser("list-objectives", help="print the registered objectives")
    return parser


def _config(args: argparse.Namespace) -> SloConfig | PsoConfig | GaConfig:
    algo = getattr(args, "algo", "slo")
    given = lambda flags: [f for f in flags if getattr(args, f, None) is not None]  # noqa: E731
    if algo == "slo":
        if given(BASELINE_FLAGS):
            raise UsageError(f"--{given(BASELINE_FLAGS)[0]} only applies to --algo pso|ga")
        defaults = SloConfig()
        return SloConfig(
            n_a=args.na or defaults.n_a,
            n_b=args.nb or defaults.n_b,
            n_c=args.nc or defaults.n_c,
            seasons=args.seasons or defaults.seasons,
            alpha=args.alpha if args.alpha is not None else defaults.alpha,
            seed=args.seed,
        )
    if given(SLO_FLAGS):
        raise UsageError(f"--{given(SLO_FLAGS)[0]} only applies to --algo slo")
    if getattr(args, "snapshot_before", None) or getattr(args, "snapshot_after", None):
        raise UsageError("snapshots are only available for --algo slo")
    if algo == "pso":
        d = PsoConfig()
        return PsoConfig(swarm_size=args.swarm or d.swarm_size, iterations=args.iters or d.iterations, seed=args.seed)
    d = GaConfig()
    return GaConfig(population=args.swarm or d.population, generations=args.iters or d.generations, seed=args.seed)


def parse_args(argv: Sequence[str] | None = None) -> CliInvocation:
    """Parse and validate; raises ``SystemExit(2)`` on usage errors."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.subcommand == "list-objectives":
        return CliInvocation("list-objectives", None, "slo", 0, 0, None, args)
    try:
        config = _config(args)
    except (UsageError, ValueError) as exc:
        parser.error(str(exc))
    if args.subcommand == "snapshot" and not (args.snapshot_before or args.snapshot_after):
        parser.error("snapshot needs --snapshot-before and/or --snapshot-after")
    return CliInvocation(
        subcommand=args.subcommand,
        objective=args.objective,
        algo=getattr(args, "algo", "slo"),
        seed=args.seed,
        runs=getattr(args, "runs", 1),
        config=config,
        options=args,
    )


def _write(path: Path, emit, *payload) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            emit(*payload, fh)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _trace_path(path: Path, run: int, runs: int) -> Path:
    if runs == 1:
        return path
    if "{run}" in str(path):
        return Path(str(path).format(run=run))
    return path.with_name(f"{path.stem}.run{run}{path.suffix}")


def _list_objectives(out) -> int:
    for name in names():
        spec = REGISTRY[name]
        bounds = " x ".join(f"[{lo:g}, {hi:g}]" for lo, hi in spec.bounds)
        print(f"{name}\t{spec.sense.value}\t{bounds}\tf*={spec.known_optimum_value!r}", file=out)
    return 0


def _experiment(inv: CliInvocation, out) -> int:
    opts = inv.options
    spec = lookup(inv.objective)
    experiment = ExperimentConfig(inv.objective, inv.algo, inv.runs, inv.seed, inv.config)
    snapshots = inv.subcommand == "run" and (opts.snapshot_before or opts.snapshot_after)

    if snapshots:
        result, before, after = run_slo(inv.config, spec, keep_league=True)
        results = [result]
        if opts.snapshot_before:
            _write(opts.snapshot_before, emit_snapshot, before)
        if opts.snapshot_after:
            _write(opts.snapshot_after, emit_snapshot, after)
    else:
        results = run_experiment(experiment)

    summary = summarize(results)
    tolerances = None if inv.algo == "slo" else BASELINE_TOLERANCE
    checks = check_acceptance(summary, spec, tolerances) if opts.check else None

    print(f"{spec.name} {inv.algo}: {len(results)} run(s)", file=out)
    print("run\tseed\tscore\tf(best)\tbest point", file=out)
    for row in summary.rows:
        point = " ".join(f"{v:.4f}" for v in row.best_point)
        print(f"{row.run}\t{row.seed}\t{row.best_score:.4e}\t{row.best_raw:.6g}\t{point}", file=out)
    print(f"median score {summary.median:.4e}  stddev {summary.stddev:.2e}", file=out)

    if opts.trace:
        for i, result in enumerate(results):
            _write(_trace_path(opts.trace, i, len(results)), emit_trace_csv, result)
    if opts.summary:
        _write(opts.summary, lambda s, fh: emit_summary_json(s, fh, checks), summary)
    if checks is not None:
        for c in checks:
            print(c.line(), file=out)
        return 0 if all(c.passed for c in checks) else 1
    return 0


def _snapshot(inv: CliInvocation, out) -> int:
    opts = inv.options
    result, before, after = run_slo(inv.config, lookup(inv.objective), keep_league=True)
    if opts.snapshot_before:
        _write(opts.snapshot_before, emit_snapshot, before)
    if opts.snapshot_after:
        _write(opts.snapshot_after, emit_snapshot, after)
    print(f"{inv.objective}: best score {result.best_score!r} at {result.best_point}", file=out)
    return 0


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    inv = parse_args(argv)
    try:
        if inv.subcommand == "list-objectives":
            return _list_objectives(out)
        if inv.subcommand == "snapshot":
            return _snapshot(inv, out)
        return _experiment(inv, out)
    except (OSError, RunFailed) as exc:
        print(f"slo: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
