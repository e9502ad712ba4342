import statistics

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slo.harness import (
    ExperimentConfig,
    RunFailed,
    Tolerance,
    check_acceptance,
    point_distance,
    run_experiment,
    summarize,
)
from slo.league import SloConfig
from slo.objectives import lookup
from slo.records import RunResult

SMALL = SloConfig(5, 5, 5, seasons=10)


def fake(score, point=(0.0, 0.0), objective="g2", seed=0):
    return RunResult("slo", objective, seed, list(point), score, -score)


def test_seeds_derive_from_base():
    cfg = ExperimentConfig("g1", runs=5, base_seed=100, algorithm_config=SMALL)
    results = run_experiment(cfg)
    assert [r.seed for r in results] == [100, 101, 102, 103, 104]
    assert len({tuple(r.best_point) for r in results}) == 5


def test_single_run():
    assert len(run_experiment(ExperimentConfig("g3", runs=1, algorithm_config=SMALL))) == 1


def test_repeatable():
    cfg = ExperimentConfig("g4", runs=3, base_seed=9, algorithm_config=SMALL)
    a, b = run_experiment(cfg), run_experiment(cfg)
    assert [r.trace for r in a] == [r.trace for r in b]


def test_parallel_matches_serial():
    cfg = ExperimentConfig("g2", runs=3, algorithm_config=SMALL)
    assert [r.trace for r in run_experiment(cfg, workers=2)] == [r.trace for r in run_experiment(cfg)]


def test_results_re_evaluate():
    for algo in ("slo", "pso", "ga"):
        for r in run_experiment(ExperimentConfig("g1", algo, runs=2)):
            assert lookup("g1")(r.best_point) == r.best_raw


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig("g1", runs=0)
    with pytest.raises(ValueError):
        ExperimentConfig("g1", algorithm="sa")
    with pytest.raises(KeyError):
        ExperimentConfig("g7")
    with pytest.raises(TypeError):
        ExperimentConfig("g1", "pso", algorithm_config=SMALL)


def test_run_failure_carries_index(monkeypatch):
    import slo.harness as h

    def boom(config, objective):
        raise ArithmeticError("nan")

    monkeypatch.setitem(h.ALGORITHMS, "slo", (SloConfig, boom))
    with pytest.raises(RunFailed, match="run 0 .seed 7."):
        run_experiment(ExperimentConfig("g1", runs=2, base_seed=7))


def test_summarize_identical():
    s = summarize([fake(-3.0)] * 5)
    assert s.stddev == 0.0 and s.best == s.median == s.worst == s.mean == -3.0


def test_summarize_table4_like():
    s = summarize([fake(1.0316, objective="g4")] * 5)
    assert s.median == 1.0316


def test_summarize_empty():
    with pytest.raises(ValueError):
        summarize([])


@given(st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=12), st.randoms())
def test_summary_order_independent_and_median(scores, rnd):
    results = [fake(s) for s in scores]
    shuffled = results[:]
    rnd.shuffle(shuffled)
    a, b = summarize(results), summarize(shuffled)
    assert (a.best, a.median, a.worst) == (b.best, b.median, b.worst)
    assert a.mean == pytest.approx(b.mean) and a.stddev == pytest.approx(b.stddev, abs=1e-6)
    ordered = sorted(scores)
    n = len(ordered)
    oracle = ordered[n // 2] if n % 2 else (ordered[n // 2 - 1] + ordered[n // 2]) / 2
    assert a.median == oracle


def test_acceptance_g2_pass_and_g1_fail():
    g2 = lookup("g2")
    s = summarize([fake(-3.0011, (0.0, -1.001))] * 5)
    assert all(c.passed for c in check_acceptance(s, g2, Tolerance(5e-3)))
    g1 = lookup("g1")
    s = summarize([fake(-0.2, (3.0, 0.5), "g1")] * 5)
    checks = check_acceptance(s, g1, Tolerance(5e-3))
    assert not checks[0].passed and checks[0].value == pytest.approx(0.2)


def test_g4_distance_uses_nearest_optimum():
    g4 = lookup("g4")
    assert point_distance((-0.09, 0.71), g4) == pytest.approx(
        ((0.089842 - 0.09) ** 2 + (0.712656 - 0.71) ** 2) ** 0.5)
    s = summarize([fake(1.0316, p, "g4") for p in [(0.0898, -0.7126), (-0.0898, 0.7126)] * 2 + [(0.09, -0.71)]])
    dist = [c for c in check_acceptance(s, g4) if "distance" in c.name][0]
    assert dist.passed and dist.value < 1e-3


def test_acceptance_uses_median_not_best():
    g3 = lookup("g3")
    rows = [fake(-1.0, (5, 4), "g3")] * 2 + [fake(-1.5, (5, 4), "g3")] * 3
    assert not check_acceptance(summarize(rows), g3)[0].passed
    assert statistics.median(abs(r.best_raw - 1) for r in rows) == 0.5
