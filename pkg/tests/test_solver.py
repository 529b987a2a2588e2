import random

import pytest

from mwis import (SolverConfig, brute_force, build_graph, is_independent,
                  solve, verify)
from conftest import cycle, path, random_graph, star


FAST = dict(population_size=40, unsuccessful_limit=80, pool_size=6,
            ls_iterations=2000)


def test_empty_graph():
    result = solve(build_graph([], []), SolverConfig(time_limit=5, **FAST))
    assert result.weight == 0
    assert result.solution == set()
    assert result.rounds == 0


def test_p3_solved_by_reduction_alone():
    result = solve(path([5, 1, 5]), SolverConfig(time_limit=5, **FAST))
    assert result.weight == 10
    assert result.solution == {0, 2}
    assert result.kernel_trace == []  # never reached the memetic phase


def test_fixture_zoo_hits_optimum():
    fixtures = [
        cycle([1] * 5),
        cycle([3, 1, 4, 1, 5, 9, 2]),
        path([2, 9, 4, 9, 2]),
        star(10, [1, 2, 3, 4]),
        star(2, [5, 5, 5]),
    ]
    for i, g in enumerate(fixtures):
        alpha, _ = brute_force(g)
        result = solve(g, SolverConfig(time_limit=5, seed=i, **FAST))
        assert result.weight == alpha
        assert is_independent(g, result.solution)


def test_random_instances_match_oracle():
    rng = random.Random(860)
    for trial in range(30):
        g = random_graph(rng, rng.randint(10, 20), rng.choice([0.1, 0.2, 0.4]))
        alpha, _ = brute_force(g)
        result = solve(g, SolverConfig(time_limit=5, seed=trial, **FAST))
        assert is_independent(g, result.solution)
        assert result.weight == sum(g.weight[v] for v in result.solution)
        assert result.weight == alpha


def test_input_graph_is_not_mutated():
    g = path([5, 1, 5])
    before = ([set(s) for s in g.adj], list(g.weight), g.live_count)
    solve(g, SolverConfig(time_limit=5, **FAST))
    assert ([set(s) for s in g.adj], list(g.weight), g.live_count) == before


def test_determinism_same_seed():
    rng = random.Random(99)
    g = random_graph(rng, 24, 0.2)
    cfg = SolverConfig(time_limit=30, seed=7, **FAST)
    a = solve(g, cfg)
    b = solve(g, cfg)
    assert a.solution == b.solution
    assert a.weight == b.weight
    assert a.rounds == b.rounds


def test_trace_and_rounds_accounting():
    rng = random.Random(4)
    # dense-ish weights chosen so the kernel usually survives reduction
    for trial in range(10):
        g = random_graph(rng, 22, 0.5, wlo=90, whi=110)
        result = solve(g, SolverConfig(time_limit=10, seed=trial, **FAST))
        assert is_independent(g, result.solution)
        for stats in result.kernel_trace:
            assert stats.kernel_vertices > 0
            assert stats.offset >= 0
            assert stats.best_evolve_weight > 0


def test_progress_events_emitted():
    rng = random.Random(12)
    g = random_graph(rng, 22, 0.5, wlo=90, whi=110)
    seen = []
    solve(g, SolverConfig(time_limit=10, **FAST),
          progress=lambda kind, payload: seen.append(kind))
    assert "reduced" in seen or not seen  # silent only if instantly empty


def test_should_stop_cuts_the_run_short():
    rng = random.Random(13)
    g = random_graph(rng, 30, 0.4, wlo=90, whi=110)
    result = solve(g, SolverConfig(time_limit=60, **FAST), should_stop=lambda: True)
    assert is_independent(g, result.solution)


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(population_size=0)
    with pytest.raises(ValueError):
        SolverConfig(mutation_prob=1.5)
    with pytest.raises(ValueError):
        SolverConfig(ordering="bogus")
    with pytest.raises(ValueError):
        SolverConfig(time_limit=0)


def test_verify_accepts_valid_solution():
    g = path([5, 1, 5])
    report = verify(g, [0, 2])
    assert report.ok
    assert report.weight == 10
    assert report.lines() == ["OK, weight=10"]


def test_verify_flags_adjacent_pair():
    g = path([5, 1, 5])
    report = verify(g, [0, 1])
    assert not report.ok
    assert report.violations == [(0, 1)]
    assert any("(0, 1)" in line for line in report.lines())


def test_verify_flags_duplicates_and_range():
    g = path([5, 1, 5])
    report = verify(g, [0, 0, 9])
    assert not report.ok
    assert report.duplicates == [0]
    assert report.out_of_range == [9]


def test_solve_beats_every_initial_construction():
    from mwis import InitStrategy, build_initial

    rng = random.Random(73)
    for trial in range(10):
        g = random_graph(rng, rng.randint(12, 24), rng.choice([0.15, 0.35]))
        result = solve(g, SolverConfig(time_limit=5, seed=trial, **FAST))
        for strategy in InitStrategy:
            ind = build_initial(g.copy(), strategy, random.Random(trial))
            assert result.weight >= ind.weight


def test_trace_offsets_never_decrease():
    rng = random.Random(41)
    for trial in range(8):
        g = random_graph(rng, 26, 0.5, wlo=90, whi=110)
        result = solve(g, SolverConfig(time_limit=10, seed=trial, **FAST))
        offsets = [s.offset for s in result.kernel_trace]
        assert offsets == sorted(offsets)
