import itertools
import math
import random

import pytest

from mwis import (PartitionPool, build_graph, edge_partition,
                  separator_from, validate_partition, vertex_separator)
from mwis.partition import max_block_size
from conftest import clique, path, random_graph


def min_balanced_bisection_cut(g) -> int:
    """Exhaustive oracle: smallest cut over all balanced 2-partitions."""
    ids = g.vertices()
    cap = max_block_size(len(ids), 2, 0.0)
    best = len(g.edges()) + 1
    for size in range(len(ids) - cap, cap + 1):
        for left in itertools.combinations(ids, size):
            left = set(left)
            if len(ids) - len(left) > cap:
                continue
            cut = sum(1 for u, v in g.edges() if (u in left) != (v in left))
            best = min(best, cut)
    return best


def test_p4_bisection_matches_exhaustive_minimum(rng):
    g = path([1, 1, 1, 1])
    assert min_balanced_bisection_cut(g) == 1
    part = edge_partition(g, 2, 0.0, rng)
    assert validate_partition(g, part) == []
    assert len(part.cut_edges(g)) == 1
    assert sorted(len(b) for b in part.blocks()) == [2, 2]


def test_singleton_blocks_cut_everything(rng):
    g = clique([1, 1, 1, 1])
    part = edge_partition(g, 4, 0.0, rng)
    assert validate_partition(g, part) == []
    assert len(part.cut_edges(g)) == g.live_edges


def test_disconnected_cliques_split_cleanly(rng):
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    g = build_graph(edges, [1] * 6)
    part = edge_partition(g, 2, 0.0, rng)
    assert len(part.cut_edges(g)) == 0


def test_partition_argument_errors(rng):
    g = path([1, 1, 1])
    with pytest.raises(ValueError):
        edge_partition(g, 1, 0.0, rng)
    with pytest.raises(ValueError):
        edge_partition(g, 4, 0.0, rng)


def test_p3_separator_is_middle(rng):
    g = path([1, 1, 1])
    part = vertex_separator(g, 2, 0.0, rng)
    assert validate_partition(g, part) == []
    assert part.separator() == [1]
    assert part.block_of[0] != part.block_of[2]


def test_k4_separator_is_valid(rng):
    g = clique([1, 1, 1, 1])
    part = vertex_separator(g, 2, 0.5, rng)
    assert validate_partition(g, part) == []


def test_edgeless_graph_needs_no_separator(rng):
    g = build_graph([], [1, 1, 1, 1])
    part = vertex_separator(g, 2, 0.0, rng)
    assert part.separator() == []


def test_randomized_partition_contracts():
    rng = random.Random(271828)
    for _ in range(80):
        g = random_graph(rng, rng.randint(4, 30), rng.choice([0.1, 0.3, 0.6]))
        k = rng.choice([2, 3, 4, 8])
        if k > g.live_count:
            continue
        eps = rng.choice([0.0, 0.03, 0.1, 0.5])
        part = edge_partition(g, k, eps, rng)
        assert validate_partition(g, part) == []
        bound = (1 + eps) * math.ceil(g.live_count / k)
        assert all(len(b) <= bound for b in part.blocks())
        sep = separator_from(g, part)
        assert validate_partition(g, sep) == []
        assert sep.cut_edges(g) == []


def test_determinism_per_seed():
    g0 = random_graph(random.Random(1), 25, 0.2)
    a = edge_partition(g0, 4, 0.03, random.Random(9))
    b = edge_partition(g0, 4, 0.03, random.Random(9))
    assert a.block_of == b.block_of
    c = vertex_separator(g0, 4, 0.03, random.Random(9))
    d = vertex_separator(g0, 4, 0.03, random.Random(9))
    assert c.block_of == d.block_of


def test_pool_fills_to_capacity(rng):
    g = random_graph(random.Random(2), 30, 0.2)
    pool = PartitionPool(g, capacity=10)
    pool.fetch(want_separator=False, rng=rng)
    assert len(pool._entries) == 10


def test_pool_discards_stale_entries(rng):
    g = random_graph(random.Random(3), 20, 0.25)
    pool = PartitionPool(g, capacity=4)
    first = pool.fetch(want_separator=False, rng=rng)
    g.remove_vertex(g.vertices()[0])
    second = pool.fetch(want_separator=False, rng=rng)
    assert second.generation == g.generation
    assert all(e.edge.generation == g.generation for e in pool._entries)


def test_pool_builds_separator_on_demand(rng):
    g = random_graph(random.Random(4), 16, 0.3)
    pool = PartitionPool(g, capacity=3)
    part = pool.fetch(want_separator=True, rng=rng, k=2)
    assert part.has_separator and part.k == 2
    assert validate_partition(g, part) == []


def test_pool_respects_block_bound(rng):
    g = random_graph(random.Random(5), 40, 0.15)
    pool = PartitionPool(g, capacity=8, max_blocks=64)
    for _ in range(8):
        part = pool.fetch(want_separator=False, rng=rng)
        assert 2 <= part.k <= 64


def test_pool_rejects_tiny_graph(rng):
    g = build_graph([], [1])
    pool = PartitionPool(g, capacity=2)
    with pytest.raises(ValueError):
        pool.fetch(want_separator=False, rng=rng)


def test_dump_lists_block_per_vertex(rng):
    g = path([1, 1, 1])
    part = vertex_separator(g, 2, 0.0, rng)
    lines = part.dump().splitlines()
    assert len(lines) == 3
    assert lines[1] == "-1"  # the middle sits in the separator
