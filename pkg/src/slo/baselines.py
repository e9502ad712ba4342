"""Global-best PSO and a real-coded GA, used as comparison baselines.

Both maximize the same score as SLO (``-f`` for minimization problems) and
keep every position inside the objective's box.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .league import NonFiniteScore, make_rng
from .objectives import ObjectiveSpec, from_score
from .records import RunResult, SeasonRecord

__all__ = ["PsoConfig", "GaConfig", "run_pso", "run_ga"]


@dataclass
class PsoConfig:
    swarm_size: int = 90
    iterations: int = 100
    inertia: float = 0.729
    cognitive: float = 1.49445
    social: float = 1.49445
    seed: int = 0

    def __post_init__(self):
        if self.swarm_size < 2:
            raise ValueError(f"swarm_size must be >= 2, got {self.swarm_size}")
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")
        for name in ("inertia", "cognitive", "social"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be finite and positive, got {value}")


@dataclass
class GaConfig:
    population: int = 90
    generations: int = 100
    tournament_size: int = 3
    crossover_rate: float = 0.9
    mutation_rate: float = 0.1
    mutation_sigma_fraction: float = 0.1
    blend_extension: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.population < 2:
            raise ValueError(f"population must be >= 2, got {self.population}")
        if self.generations < 1:
            raise ValueError(f"generations must be >= 1, got {self.generations}")
        if self.tournament_size < 1:
            raise ValueError(f"tournament_size must be >= 1, got {self.tournament_size}")
        for name in ("crossover_rate", "mutation_rate"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")
        if self.mutation_sigma_fraction < 0 or self.blend_extension < 0:
            raise ValueError("mutation_sigma_fraction and blend_extension must be non-negative")


def _scores(objective: ObjectiveSpec, points: np.ndarray) -> np.ndarray:
    out = np.array([objective.score(p) for p in points.tolist()])
    bad = np.flatnonzero(~np.isfinite(out))
    if bad.size:
        i = int(bad[0])
        raise NonFiniteScore(f"{objective.name}: non-finite value at member {i}, point {points[i].tolist()}")
    return out


def _result(algorithm, objective, seed, point, score, trace, evaluations) -> RunResult:
    return RunResult(
        algorithm=algorithm,
        objective=objective.name,
        seed=seed,
        best_point=[float(v) for v in point],
        best_score=float(score),
        best_raw=from_score(objective, float(score)),
        trace=trace,
        evaluations_used=evaluations,
    )


def run_pso(config: PsoConfig, objective: ObjectiveSpec, *, initial: np.ndarray | None = None) -> RunResult:
    rng = make_rng(config.seed)
    lower = np.asarray(objective.lower, dtype=float)
    upper = np.asarray(objective.upper, dtype=float)
    shape = (config.swarm_size, objective.dimension)

    x = rng.uniform(lower, upper, size=shape) if initial is None else np.array(initial, dtype=float)
    v = np.zeros(shape)
    score = _scores(objective, x)
    evaluations = len(x)
    pbest, pbest_score = x.copy(), score.copy()
    g = int(np.argmax(pbest_score))
    gbest, gbest_score = pbest[g].copy(), pbest_score[g]

    trace = []
    for it in range(1, config.iterations + 1):
        r1 = rng.random(shape)
        r2 = rng.random(shape)
        v = config.inertia * v + config.cognitive * r1 * (pbest - x) + config.social * r2 * (gbest - x)
        x = x + v
        clipped = (x < lower) | (x > upper)
        x = np.clip(x, lower, upper)
        # no velocity carried into a wall
        v[clipped] = 0.0

        score = _scores(objective, x)
        evaluations += len(x)
        better = score > pbest_score
        pbest[better] = x[better]
        pbest_score[better] = score[better]
        g = int(np.argmax(pbest_score))
        if pbest_score[g] > gbest_score:
            gbest, gbest_score = pbest[g].copy(), pbest_score[g]
        trace.append(SeasonRecord(season=it, global_best=float(gbest_score)))

    return _result("pso", objective, config.seed, gbest, gbest_score, trace, evaluations)


def _tournament(rng: np.random.Generator, score: np.ndarray, size: int) -> int:
    entrants = rng.integers(len(score), size=size)
    return int(entrants[np.argmax(score[entrants])])


def run_ga(config: GaConfig, objective: ObjectiveSpec, *, initial: np.ndarray | None = None) -> RunResult:
    """Real-coded GA: tournament selection, BLX blend crossover, Gaussian mutation, elitism of one."""
    rng = make_rng(config.seed)
    lower = np.asarray(objective.lower, dtype=float)
    upper = np.asarray(objective.upper, dtype=float)
    sigma = config.mutation_sigma_fraction * (upper - lower)
    n, dim = config.population, objective.dimension

    pop = rng.uniform(lower, upper, size=(n, dim)) if initial is None else np.array(initial, dtype=float)
    score = _scores(objective, pop)
    evaluations = n

    trace = []
    for gen in range(1, config.generations + 1):
        elite = int(np.argmax(score))
        children = [pop[elite].copy()]
        while len(children) < n:
            a = pop[_tournament(rng, score, config.tournament_size)]
            b = pop[_tournament(rng, score, config.tournament_size)]
            if rng.random() < config.crossover_rate:
                lo, hi = np.minimum(a, b), np.maximum(a, b)
                ext = config.blend_extension * (hi - lo)
                pair = rng.uniform(lo - ext, hi + ext, size=(2, dim))
            else:
                pair = np.stack([a, b])
            mutate = rng.random((2, dim)) < config.mutation_rate
            pair = pair + mutate * rng.normal(0.0, 1.0, size=(2, dim)) * sigma
            children.extend(np.clip(pair, lower, upper))
        children = np.array(children[:n])

        child_score = _scores(objective, children[1:])
        evaluations += n - 1
        pop = children
        score = np.concatenate([[score[elite]], child_score])
        best = int(np.argmax(score))
        trace.append(SeasonRecord(season=gen, global_best=float(score[best])))

    best = int(np.argmax(score))
    return _result("ga", objective, config.seed, pop[best], score[best], trace, evaluations)
