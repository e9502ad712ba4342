"""Reproduce the four 5-run result tables and their convergence traces.

    python scripts/reproduce_tables.py --out results/

Writes <out>/<g>_summary.json and <out>/<g>_trace.run<i>.csv for g1..g4 and
prints each table with its tolerance check.
"""
import argparse
from pathlib import Path

from slo.harness import ExperimentConfig, check_acceptance, run_experiment, summarize
from slo.objectives import lookup
from slo.output import emit_summary_json, emit_trace_csv


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--out", type=Path, default=Path("results"))
    parser.add_argument("--runs", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    ok = True
    for name in ("g1", "g2", "g3", "g4"):
        spec = lookup(name)
        results = run_experiment(ExperimentConfig(name, runs=args.runs, base_seed=args.seed), workers=args.workers)
        summary = summarize(results)
        checks = check_acceptance(summary, spec)
        ok &= all(c.passed for c in checks)

        print(f"\n{name}: f* = {spec.known_optimum_value:.6g} at {spec.known_optimum_points}")
        print("run  F(best)        best point")
        for row in summary.rows:
            print(f"{row.run + 1:>3}  {row.best_score: .4e}   {row.best_point[0]: .4f} {row.best_point[1]: .4f}")
        for c in checks:
            print("    " + c.line())

        with open(args.out / f"{name}_summary.json", "w") as fh:
            emit_summary_json(summary, fh, checks)
        for i, result in enumerate(results):
            with open(args.out / f"{name}_trace.run{i}.csv", "w", newline="\n") as fh:
                emit_trace_csv(result, fh)
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
