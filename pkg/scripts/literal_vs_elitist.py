"""Literal season rules (every move kept) against the default elitist rules.

Literal mode keeps each worsened training move and each transfer as is. It
leaves the league spread over the box and the best-of-history depends on
luck; the default releases players that did not help and lets a team reject
a transfer window that made it worse.
"""
import statistics

import numpy as np

from slo.harness import TABLE_TOLERANCES, point_distance
from slo.league import SloConfig, Tier, run_slo
from slo.objectives import lookup

SEEDS = range(20)

for alpha in (0.05, 0.1):
    print(f"alpha = {alpha}")
    print("      mode     median |f-f*|  median dist  wealthy spread  tol")
    for name in ("g1", "g2", "g3", "g4"):
        spec = lookup(name)
        for elitist in (False, True):
            errs, dists, spread = [], [], []
            for seed in SEEDS:
                result, _, league = run_slo(SloConfig(seed=seed, alpha=alpha, elitist=elitist), spec, keep_league=True)
                errs.append(abs(result.best_raw - spec.known_optimum_value))
                dists.append(point_distance(result.best_point, spec))
                spread.append(np.array([t.values for t in league.tier(Tier.WEALTHIEST)]).std(axis=0).mean())
            mode = "elitist" if elitist else "literal"
            print(f"  {name}  {mode:8} {statistics.median(errs):12.3e} {statistics.median(dists):12.4f}"
                  f" {statistics.median(spread):14.4f}  {TABLE_TOLERANCES[name].raw:g}")
