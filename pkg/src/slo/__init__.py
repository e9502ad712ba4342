"""Soccer League Optimization with benchmark objectives, PSO/GA baselines and an experiment harness."""
from .baselines import GaConfig, PsoConfig, run_ga, run_pso
from .harness import ExperimentConfig, check_acceptance, run_experiment, summarize
from .league import League, SloConfig, Team, Tier, run_slo
from .objectives import ObjectiveSpec, Sense, lookup
from .records import RunResult, SeasonRecord

__version__ = "0.1.0"

__all__ = [
    "ExperimentConfig", "GaConfig", "League", "ObjectiveSpec", "PsoConfig", "RunResult", "SeasonRecord",
    "Sense", "SloConfig", "Team", "Tier", "check_acceptance", "lookup", "run_experiment", "run_ga",
    "run_pso", "run_slo", "summarize",
]
