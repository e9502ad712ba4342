"""Per-season trace records and run results shared by SLO and the baselines."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SeasonRecord:
    """Scores (maximized) after one season or iteration.

    Tier columns hold the best team score in each tier at the end of the
    season, after transfers. Baselines have no tiers and leave them as
    ``None``.
    """

    season: int
    global_best: float
    best_wealthy: float | None = None
    best_regular: float | None = None
    best_weakest: float | None = None


@dataclass
class RunResult:
    algorithm: str
    objective: str
    seed: int
    best_point: list[float]
    best_score: float
    best_raw: float
    trace: list[SeasonRecord] = field(default_factory=list)
    evaluations_used: int = 0

    def global_trace(self) -> list[float]:
        return [r.global_best for r in self.trace]
