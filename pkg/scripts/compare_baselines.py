"""SLO vs PSO vs GA on one benchmark (g3 by default), 5 seeds each.

Prints the median error of each algorithm every 10 iterations, and the
evaluation budget used. With --out, writes one trace CSV per run.
"""
import argparse
import statistics
from pathlib import Path

from slo.harness import ExperimentConfig, run_experiment
from slo.objectives import lookup
from slo.output import emit_trace_csv

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--objective", default="g3")
parser.add_argument("--runs", type=int, default=5)
parser.add_argument("--out", type=Path)
args = parser.parse_args()

spec = lookup(args.objective)
runs = {algo: run_experiment(ExperimentConfig(args.objective, algo, runs=args.runs)) for algo in ("slo", "pso", "ga")}

print(f"{args.objective}: median |f(best) - f*| over {args.runs} runs")
print("iter " + "".join(f"{algo:>12}" for algo in runs))
for i in [0, 9, 19, 29, 49, 69, 99]:
    cols = []
    for results in runs.values():
        errs = [abs(-r.trace[i].global_best - spec.known_optimum_value) for r in results if i < len(r.trace)]
        cols.append(f"{statistics.median(errs):12.3e}")
    print(f"{i + 1:>4} " + "".join(cols))
print("evals" + "".join(f"{max(r.evaluations_used for r in rs):>12}" for rs in runs.values()))

if args.out:
    args.out.mkdir(parents=True, exist_ok=True)
    for algo, results in runs.items():
        for i, r in enumerate(results):
            with open(args.out / f"{args.objective}_{algo}.run{i}.csv", "w", newline="\n") as fh:
                emit_trace_csv(r, fh)
