"""Soccer League Optimization.

The population is split once, at initialization, into three fixed tiers by
score: wealthiest, regular and weakest. Each season every team trains one
randomly chosen post (dimension) and is re-evaluated; a team *improved* when
its score rose strictly. Then the transfer window opens:

* teams that did not improve release the player they just trained
  (the post goes back to its pre-season value);
* wealthy teams that did not improve buy the trained player of the best
  improved regular teams, at the player's own post;
* regular teams that did not improve buy from the best improved weakest teams;
* regular teams that sold a player refill the vacated post from a remaining
  improved weakest team, or with a discovered (uniform random) player;
* weakest teams that sold a player, or did not improve, discover a new one;
* a team whose vector got worse over the window reverts to how it entered it.

With ``SloConfig(elitist=False)`` the release and revert steps are skipped:
every training move and every transfer is kept whatever it does to the score.

Random draws happen in a fixed order (wealthy, regular, weakest; stable index
order inside a tier) so a seed fully determines a run.
"""
from __future__ import annotations

import copy
import dataclasses
import enum
import math
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .objectives import ObjectiveSpec, from_score
from .records import RunResult, SeasonRecord

__all__ = [
    "Tier",
    "Team",
    "League",
    "SloConfig",
    "TransferKind",
    "Transfer",
    "NonFiniteScore",
    "make_rng",
    "initialize_league",
    "select_post",
    "train",
    "evaluate_and_delta",
    "update_global_best",
    "transfer_phase",
    "play_season",
    "run_slo",
    "release_unimproved",
    "season_record",
]


class Tier(enum.Enum):
    WEALTHIEST = "wealthiest"
    REGULAR = "regular"
    WEAKEST = "weakest"


class NonFiniteScore(ArithmeticError):
    pass


@dataclass
class SloConfig:
    n_a: int = 30
    n_b: int = 30
    n_c: int = 30
    seasons: int = 100
    alpha: float = 0.05
    seed: int = 0
    # False keeps every worsened training move and every transfer (literal mode)
    elitist: bool = True

    def __post_init__(self):
        for name in ("n_a", "n_b", "n_c", "seasons"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        if not (0.0 < self.alpha <= 1.0):
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha!r}")
        if not (0 <= self.seed < 2**64):
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")

    @property
    def population(self) -> int:
        return self.n_a + self.n_b + self.n_c


@dataclass
class Team:
    values: np.ndarray
    score: float
    tier: Tier
    index: int
    # last season's training record; set together by train()
    trained_post: int | None = None
    pre_train_score: float | None = None
    pre_train_value: float | None = None
    delta: float | None = None

    @property
    def label(self) -> str:
        return f"{self.tier.value}[{self.index}]"

    @property
    def improved(self) -> bool:
        return self.delta is not None and self.delta > 0.0


@dataclass
class League:
    wealthiest: list[Team]
    regular: list[Team]
    weakest: list[Team]
    global_best_point: np.ndarray
    global_best_score: float
    season_index: int = 0
    evaluations: int = 0
    last_transfers: list[Transfer] = field(default_factory=list)

    def teams(self) -> Iterator[Team]:
        yield from self.wealthiest
        yield from self.regular
        yield from self.weakest

    def tier(self, tier: Tier) -> list[Team]:
        return {Tier.WEALTHIEST: self.wealthiest, Tier.REGULAR: self.regular, Tier.WEAKEST: self.weakest}[tier]

    def tier_best(self, tier: Tier) -> float:
        return max(t.score for t in self.tier(tier))


class TransferKind(enum.Enum):
    REGULAR_TO_WEALTHY = "regular_to_wealthy"
    WEAKEST_TO_REGULAR = "weakest_to_regular"
    DISCOVERY = "discovery"
    REFILL_FROM_WEAKEST = "refill_from_weakest"
    REFILL_DISCOVERY = "refill_discovery"


@dataclass(frozen=True)
class Transfer:
    season: int
    kind: TransferKind
    donor: str | None
    recipient: str
    post: int
    value: float
    # False when the recipient rejected the window's moves as a net loss
    kept: bool = True


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _score(objective: ObjectiveSpec, values: np.ndarray, label: str = "") -> float:
    point = values.tolist()
    score = objective.score(point)
    if not math.isfinite(score):
        raise NonFiniteScore(f"{objective.name}: non-finite value at team {label or '?'}, point {point}")
    return score


def _discover(objective: ObjectiveSpec, post: int, rng: np.random.Generator) -> float:
    lo, hi = objective.bounds[post]
    return float(rng.uniform(lo, hi))


def initialize_league(config: SloConfig, objective: ObjectiveSpec, rng: np.random.Generator) -> League:
    lower = np.asarray(objective.lower, dtype=float)
    upper = np.asarray(objective.upper, dtype=float)
    n = config.population
    points = rng.uniform(lower, upper, size=(n, objective.dimension))
    scores = [_score(objective, p) for p in points]
    # stable sort keeps generation order on ties
    order = sorted(range(n), key=lambda i: -scores[i])

    tiers = ([], [], [])
    sizes = (config.n_a, config.n_b, config.n_c)
    cursor = 0
    for bucket, tier, size in zip(tiers, Tier, sizes):
        for k in range(size):
            i = order[cursor + k]
            bucket.append(Team(values=points[i].copy(), score=scores[i], tier=tier, index=k))
        cursor += size

    best = order[0]
    return League(
        wealthiest=tiers[0],
        regular=tiers[1],
        weakest=tiers[2],
        global_best_point=points[best].copy(),
        global_best_score=scores[best],
        evaluations=n,
    )


def select_post(team: Team, dimension_count: int, rng: np.random.Generator) -> int:
    if dimension_count < 1:
        raise ValueError("dimension_count must be >= 1")
    post = int(rng.integers(dimension_count))
    team.trained_post = post
    return post


def train(team: Team, post: int, objective: ObjectiveSpec, alpha: float, rng: np.random.Generator) -> Team:
    lo, hi = objective.bounds[post]
    width = alpha * (hi - lo)
    step = float(rng.uniform(-width, width))
    team.trained_post = post
    team.pre_train_score = team.score
    team.pre_train_value = float(team.values[post])
    team.delta = None
    team.values[post] = min(max(team.values[post] + step, lo), hi)
    return team


def evaluate_and_delta(league: League, objective: ObjectiveSpec) -> League:
    for team in league.teams():
        if team.trained_post is None or team.pre_train_score is None:
            raise RuntimeError(f"team {team.label} has not trained this season")
        team.score = _score(objective, team.values, team.label)
        team.delta = team.score - team.pre_train_score
        league.evaluations += 1
    return league


def update_global_best(league: League) -> League:
    for team in league.teams():
        if team.score > league.global_best_score:
            league.global_best_score = team.score
            league.global_best_point = team.values.copy()
    return league


def _pairs(recipients: list[Team], donors: list[Team]) -> tuple[list[tuple[Team, Team]], list[Team]]:
    """Worst non-improved recipients against best improved donors.

    Returns the pairs and the donors left over.
    """
    needy = sorted((t for t in recipients if not t.improved), key=lambda t: t.delta)
    sellers = sorted((t for t in donors if t.improved), key=lambda t: -t.delta)
    k = min(len(needy), len(sellers))
    return list(zip(needy[:k], sellers[:k])), sellers[k:]


def release_unimproved(league: League) -> League:
    """Undo this season's training on every team that did not improve.

    The restored vector is exactly the pre-training one, so its cached
    pre-training score is reused without another evaluation.
    """
    for team in league.teams():
        if not team.improved:
            team.values[team.trained_post] = team.pre_train_value
            team.score = team.pre_train_score
    return league


def transfer_phase(
    league: League, objective: ObjectiveSpec, rng: np.random.Generator, elitist: bool = True
) -> tuple[League, list[Transfer]]:
    season = league.season_index
    # donors always sell the value they held right after training
    trained = {id(t): t.values.copy() for t in league.teams()}
    if elitist:
        release_unimproved(league)
    before = {id(t): (t.values.copy(), t.score) for t in league.teams()}
    pending: list[tuple[int, Transfer]] = []
    changed: dict[int, Team] = {}

    def put(kind, donor, recipient, post, value):
        recipient.values[post] = value
        changed[id(recipient)] = recipient
        pending.append((id(recipient), Transfer(season, kind, donor.label if donor else None, recipient.label, post, value)))

    def sold(donor, post):
        return float(trained[id(donor)][post])

    wealthy_pairs, _ = _pairs(league.wealthiest, league.regular)
    regular_pairs, spare_weakest = _pairs(league.regular, league.weakest)

    for recipient, donor in wealthy_pairs:
        post = donor.trained_post
        put(TransferKind.REGULAR_TO_WEALTHY, donor, recipient, post, sold(donor, post))

    for recipient, donor in regular_pairs:
        post = donor.trained_post
        put(TransferKind.WEAKEST_TO_REGULAR, donor, recipient, post, sold(donor, post))
        put(TransferKind.DISCOVERY, None, donor, post, _discover(objective, post, rng))

    spare = iter(spare_weakest)
    for _, seller in wealthy_pairs:
        post = seller.trained_post
        source = next(spare, None)
        if source is None:
            put(TransferKind.REFILL_DISCOVERY, None, seller, post, _discover(objective, post, rng))
        else:
            put(TransferKind.REFILL_FROM_WEAKEST, source, seller, post, sold(source, post))
            put(TransferKind.DISCOVERY, None, source, post, _discover(objective, post, rng))

    for team in league.weakest:
        if not team.improved:
            post = team.trained_post
            put(TransferKind.DISCOVERY, None, team, post, _discover(objective, post, rng))

    reverted = set()
    for key, team in changed.items():
        team.score = _score(objective, team.values, team.label)
        league.evaluations += 1
        old_values, old_score = before[key]
        if elitist and team.score < old_score:
            team.values, team.score = old_values, old_score
            reverted.add(key)

    log = [dataclasses.replace(t, kept=False) if key in reverted else t for key, t in pending]
    return league, log


def play_season(
    league: League, objective: ObjectiveSpec, config: SloConfig, rng: np.random.Generator
) -> tuple[League, SeasonRecord]:
    """Run one season; the transfer log is left on ``league.last_transfers``."""
    league.season_index += 1
    for team in league.teams():
        post = select_post(team, objective.dimension, rng)
        train(team, post, objective, config.alpha, rng)
    evaluate_and_delta(league, objective)
    update_global_best(league)
    _, league.last_transfers = transfer_phase(league, objective, rng, elitist=config.elitist)
    # vectors built by transfers are observations too
    update_global_best(league)
    return league, season_record(league)


def season_record(league: League) -> SeasonRecord:
    return SeasonRecord(
        season=league.season_index,
        global_best=league.global_best_score,
        best_wealthy=league.tier_best(Tier.WEALTHIEST),
        best_regular=league.tier_best(Tier.REGULAR),
        best_weakest=league.tier_best(Tier.WEAKEST),
    )


def run_slo(config: SloConfig, objective: ObjectiveSpec, *, keep_league: bool = False):
    """Run SLO for ``config.seasons`` seasons.

    With ``keep_league=True`` returns ``(result, initial_league, final_league)``
    where the initial league is a copy taken before the first season.
    """
    rng = make_rng(config.seed)
    league = initialize_league(config, objective, rng)
    initial = copy.deepcopy(league) if keep_league else None

    trace = []
    for _ in range(config.seasons):
        league, record = play_season(league, objective, config, rng)
        trace.append(record)

    result = RunResult(
        algorithm="slo",
        objective=objective.name,
        seed=config.seed,
        best_point=league.global_best_point.tolist(),
        best_score=league.global_best_score,
        best_raw=from_score(objective, league.global_best_score),
        trace=trace,
        evaluations_used=league.evaluations,
    )
    if keep_league:
        return result, initial, league
    return result
