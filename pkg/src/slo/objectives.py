"""Benchmark objectives: Beale (g1), Goldstein-Price (g2), Freudenstein-Roth (g3)
and the six-hump camelback (g4).

Every objective is registered as a minimization problem. The optimizers work
on a *score* that is always maximized; :func:`to_score` does the conversion.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

__all__ = [
    "Sense",
    "ObjectiveSpec",
    "InvalidObjective",
    "UnknownObjective",
    "eval_g1",
    "eval_g2",
    "eval_g3",
    "eval_g4",
    "to_score",
    "lookup",
    "names",
    "REGISTRY",
]


class Sense(enum.Enum):
    MINIMIZE = "minimize"
    MAXIMIZE = "maximize"


class InvalidObjective(ValueError):
    pass


class UnknownObjective(KeyError):
    def __init__(self, name: str, valid: Sequence[str]):
        self.name = name
        self.valid = list(valid)
        super().__init__(f"unknown objective {name!r}; valid names: {', '.join(self.valid)}")

    def __str__(self) -> str:
        return self.args[0]


def eval_g1(point: Sequence[float]) -> float:
    """Beale function. Zero at (3, 0.5)."""
    x, y = point
    return (
        (1.5 - x * (1.0 - y)) ** 2
        + (2.25 - x * (1.0 - y**2)) ** 2
        + (2.625 - x * (1.0 - y**3)) ** 2
    )


def eval_g2(point: Sequence[float]) -> float:
    """Goldstein-Price function. Equals 3 at (0, -1)."""
    x, y = point
    a = 1.0 + (x + y + 1.0) ** 2 * (19.0 - 14.0 * x + 3.0 * x**2 - 14.0 * y + 6.0 * x * y + 3.0 * y**2)
    b = 30.0 + (2.0 * x - 3.0 * y) ** 2 * (
        18.0 - 32.0 * x + 12.0 * x**2 + 48.0 * y - 36.0 * x * y + 27.0 * y**2
    )
    return a * b


def eval_g3(point: Sequence[float]) -> float:
    """Freudenstein-Roth function shifted up by one, so the minimum at (5, 4) is 1."""
    x, y = point
    r1 = -13.0 + x - y**3 + 5.0 * y**2 - 2.0 * y
    r2 = -29.0 + x + y**3 + y**2 - 14.0 * y
    return 1.0 + r1**2 + r2**2


def eval_g4(point: Sequence[float]) -> float:
    """Six-hump camelback, standard form (minus sign on the quartic x term)."""
    x, y = point
    return 4.0 * x**2 - 2.1 * x**4 + x**6 / 3.0 + x * y - 4.0 * y**2 + 4.0 * y**4


@dataclass(frozen=True)
class ObjectiveSpec:
    name: str
    func: Callable[[Sequence[float]], float]
    bounds: tuple[tuple[float, float], ...]
    sense: Sense = Sense.MINIMIZE
    known_optimum_value: float | None = None
    known_optimum_points: tuple[tuple[float, ...], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not self.bounds:
            raise InvalidObjective(f"{self.name}: at least one dimension is required")
        for d, (lo, hi) in enumerate(self.bounds):
            if not (math.isfinite(lo) and math.isfinite(hi)):
                raise InvalidObjective(f"{self.name}: non-finite bounds in dimension {d}: ({lo}, {hi})")
            if lo >= hi:
                raise InvalidObjective(f"{self.name}: lower >= upper in dimension {d}: ({lo}, {hi})")

    @property
    def dimension(self) -> int:
        return len(self.bounds)

    @property
    def lower(self) -> tuple[float, ...]:
        return tuple(lo for lo, _ in self.bounds)

    @property
    def upper(self) -> tuple[float, ...]:
        return tuple(hi for _, hi in self.bounds)

    def __call__(self, point: Sequence[float]) -> float:
        return float(self.func(point))

    def score(self, point: Sequence[float]) -> float:
        return to_score(self, self(point))

    def contains(self, point: Sequence[float]) -> bool:
        return all(lo <= v <= hi for v, (lo, hi) in zip(point, self.bounds))


def to_score(spec: ObjectiveSpec, raw: float) -> float:
    """Map a raw objective value to the maximized score (``-raw`` when minimizing)."""
    if spec.sense is Sense.MAXIMIZE:
        return raw
    # + 0.0 turns -0.0 into 0.0
    return -raw + 0.0


def from_score(spec: ObjectiveSpec, score: float) -> float:
    if spec.sense is Sense.MAXIMIZE:
        return score
    return -score + 0.0


# Optimizer locations for g4 come from a dense grid plus Nelder-Mead refinement
# (see tests/test_objectives.py::test_g4_optima_match_grid_refinement).
_G4_MIN = -1.0316284534898776

REGISTRY: dict[str, ObjectiveSpec] = {
    spec.name: spec
    for spec in (
        ObjectiveSpec(
            "g1", eval_g1, ((-4.5, 4.5), (-4.5, 4.5)),
            known_optimum_value=0.0, known_optimum_points=((3.0, 0.5),),
        ),
        ObjectiveSpec(
            "g2", eval_g2, ((-2.0, 2.0), (-2.0, 2.0)),
            known_optimum_value=3.0, known_optimum_points=((0.0, -1.0),),
        ),
        ObjectiveSpec(
            "g3", eval_g3, ((-10.0, 10.0), (-10.0, 10.0)),
            known_optimum_value=1.0, known_optimum_points=((5.0, 4.0),),
        ),
        ObjectiveSpec(
            "g4", eval_g4, ((-3.0, 3.0), (-2.0, 2.0)),
            known_optimum_value=_G4_MIN,
            known_optimum_points=((0.089842, -0.712656), (-0.089842, 0.712656)),
        ),
    )
}


def names() -> list[str]:
    return sorted(REGISTRY)


def lookup(name: str) -> ObjectiveSpec:
    try:
        return REGISTRY[name.lower()]
    except KeyError:
        raise UnknownObjective(name, names()) from None
