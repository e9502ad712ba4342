"""Multi-run experiments, summaries and tolerance checks."""
from __future__ import annotations

import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Sequence, Union

from .baselines import GaConfig, PsoConfig, run_ga, run_pso
from .league import SloConfig, run_slo
from .objectives import ObjectiveSpec, lookup
from .records import RunResult

__all__ = [
    "ALGORITHMS",
    "TABLE_TOLERANCES",
    "BASELINE_TOLERANCE",
    "ExperimentConfig",
    "RunFailed",
    "SummaryRow",
    "SummaryTable",
    "Check",
    "Tolerance",
    "run_experiment",
    "summarize",
    "check_acceptance",
    "point_distance",
]

AlgorithmConfig = Union[SloConfig, PsoConfig, GaConfig]

ALGORITHMS = {
    "slo": (SloConfig, run_slo),
    "pso": (PsoConfig, run_pso),
    "ga": (GaConfig, run_ga),
}


@dataclass(frozen=True)
class Tolerance:
    raw: float
    distance: float | None = None


# median over 5 runs; raw is |f(best) - f*|, distance to the nearest known optimizer
TABLE_TOLERANCES = {
    "g1": Tolerance(raw=5e-3, distance=0.15),
    "g2": Tolerance(raw=1e-2, distance=0.05),
    "g3": Tolerance(raw=1e-2, distance=0.1),
    "g4": Tolerance(raw=2e-3, distance=0.05),
}
BASELINE_TOLERANCE = Tolerance(raw=5e-2)


class RunFailed(RuntimeError):
    def __init__(self, run: int, seed: int, cause: Exception):
        self.run = run
        self.seed = seed
        super().__init__(f"run {run} (seed {seed}) failed: {cause}")


@dataclass
class ExperimentConfig:
    objective_name: str
    algorithm: str = "slo"
    runs: int = 5
    base_seed: int = 0
    algorithm_config: AlgorithmConfig | None = None

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; valid: {', '.join(ALGORITHMS)}")
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")
        if self.base_seed < 0 or self.base_seed + self.runs > 2**64:
            raise ValueError("seeds base_seed .. base_seed + runs - 1 must fit in 64 bits")
        lookup(self.objective_name)
        config_type, _ = ALGORITHMS[self.algorithm]
        if self.algorithm_config is None:
            self.algorithm_config = config_type()
        elif not isinstance(self.algorithm_config, config_type):
            raise TypeError(f"{self.algorithm} expects {config_type.__name__}, got {type(self.algorithm_config).__name__}")

    def seed(self, run: int) -> int:
        return self.base_seed + run

    @property
    def objective(self) -> ObjectiveSpec:
        return lookup(self.objective_name)


def _one_run(config: ExperimentConfig, run: int) -> RunResult:
    _, runner = ALGORITHMS[config.algorithm]
    seed = config.seed(run)
    try:
        return runner(replace(config.algorithm_config, seed=seed), config.objective)
    except Exception as exc:
        raise RunFailed(run, seed, exc) from exc


def run_experiment(config: ExperimentConfig, workers: int = 1) -> list[RunResult]:
    """Run ``config.runs`` independent seeded runs, ordered by run index."""
    if workers <= 1:
        return [_one_run(config, i) for i in range(config.runs)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_one_run, [config] * config.runs, range(config.runs)))


@dataclass(frozen=True)
class SummaryRow:
    run: int
    seed: int
    best_raw: float
    best_score: float
    best_point: list[float]


@dataclass
class SummaryTable:
    objective: str
    algorithm: str
    rows: list[SummaryRow]
    best: float
    median: float
    worst: float
    mean: float
    stddev: float
    best_point: list[float] = field(default_factory=list)

    @property
    def scores(self) -> list[float]:
        return [r.best_score for r in self.rows]


def summarize(results: Sequence[RunResult]) -> SummaryTable:
    """Aggregate run results; statistics are over the maximized score."""
    if not results:
        raise ValueError("cannot summarize an empty result list")
    rows = [
        SummaryRow(run=i, seed=r.seed, best_raw=r.best_raw, best_score=r.best_score, best_point=list(r.best_point))
        for i, r in enumerate(results)
    ]
    scores = [r.best_score for r in results]
    champion = max(results, key=lambda r: r.best_score)
    return SummaryTable(
        objective=results[0].objective,
        algorithm=results[0].algorithm,
        rows=rows,
        best=max(scores),
        median=statistics.median(scores),
        worst=min(scores),
        mean=math.fsum(scores) / len(scores),
        stddev=statistics.pstdev(scores),
        best_point=list(champion.best_point),
    )


def point_distance(point: Sequence[float], spec: ObjectiveSpec) -> float:
    """Euclidean distance to the nearest known optimizer."""
    return min(math.dist(point, opt) for opt in spec.known_optimum_points)


@dataclass(frozen=True)
class Check:
    name: str
    value: float
    tolerance: float
    passed: bool

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.value:.4g} <= {self.tolerance:g}"


def check_acceptance(summary: SummaryTable, spec: ObjectiveSpec, tolerances: Tolerance | None = None) -> list[Check]:
    """Median raw error and median best-point distance against tolerances.

    Failures are reported, never raised.
    """
    tol = tolerances or TABLE_TOLERANCES[spec.name]
    label = f"{spec.name}/{summary.algorithm}"
    raw_err = statistics.median(abs(r.best_raw - spec.known_optimum_value) for r in summary.rows)
    checks = [Check(f"{label} median |f - f*|", raw_err, tol.raw, raw_err <= tol.raw)]
    if tol.distance is not None:
        dist = statistics.median(point_distance(r.best_point, spec) for r in summary.rows)
        checks.append(Check(f"{label} median distance to optimum", dist, tol.distance, dist <= tol.distance))
    return checks
