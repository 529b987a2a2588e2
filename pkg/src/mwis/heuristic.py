"""Heuristic vertex forcing between exact-reduction rounds.

When the exact rules stall, the population is mined for vertices likely
to belong to a heavy solution; the top-rated ones are committed to the
global solution and deleted with their closed neighborhoods, which
reopens the reduction space.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .evolution import Population
from .graph import WeightedGraph

# Rank placed above every finite weight/degree ratio (degree-0 vertices
# are always safe to take).
_INFINITE_RANK = Fraction(2**63)


class SelectionStrategy(Enum):
    WEIGHT = "weight"
    DEGREE = "degree"
    WEIGHT_OVER_DEGREE = "weight_over_degree"
    HYBRID = "hybrid"
    SOLUTION_PARTICIPATION = "solution_participation"


@dataclass(frozen=True)
class SelectionConfig:
    """Strategy plus how much of the fittest solution to force per call.

    ``fraction=None`` forces exactly one vertex; participation mode always
    forces one regardless.
    """

    kind: SelectionStrategy = SelectionStrategy.HYBRID
    fraction: Optional[float] = None

    def __post_init__(self):
        if self.fraction is not None and not 0.0 < self.fraction <= 1.0:
            raise ValueError(f"fraction must be in (0, 1], got {self.fraction}")


def _participation_count(pop: Population, v: int) -> int:
    return sum(1 for ind in pop.individuals if v in ind.members)


def rate(kind: SelectionStrategy, g: WeightedGraph, pop: Population,
         v: int) -> Fraction:
    """Deterministic score of one vertex; selection always takes the argmax.

    Degree scores are negated so smaller degrees rank higher; the
    participation score breaks count ties by subtracting 1/w(v).
    """
    if kind is SelectionStrategy.WEIGHT:
        return Fraction(g.weight[v])
    if kind is SelectionStrategy.DEGREE:
        return Fraction(-g.degree(v))
    if kind is SelectionStrategy.WEIGHT_OVER_DEGREE:
        d = g.degree(v)
        if d == 0:
            return _INFINITE_RANK + g.weight[v]
        return Fraction(g.weight[v], d)
    if kind is SelectionStrategy.HYBRID:
        return Fraction(g.weight[v] - g.neighborhood_weight(v))
    if kind is SelectionStrategy.SOLUTION_PARTICIPATION:
        count = _participation_count(pop, v)
        if g.weight[v] == 0:
            return Fraction(count) - (len(pop.individuals) + 2)
        return Fraction(count) - Fraction(1, g.weight[v])
    raise ValueError(f"unknown strategy {kind}")


def heuristic_reduce(g: WeightedGraph, pop: Population,
                     selection: SelectionConfig,
                     solution_sink: set[int]) -> set[int]:
    """Force the top-rated vertices into the solution and delete N[forced].

    The first four strategies rate only the fittest individual's vertices,
    so any forced subset is pairwise non-adjacent; participation rates the
    whole graph and forces a single vertex.  Deletions are permanent.
    """
    if not pop.individuals:
        raise ValueError("population is empty")
    fittest = pop.best()
    if selection.kind is SelectionStrategy.SOLUTION_PARTICIPATION:
        candidates = g.vertices()
        take = 1
    else:
        candidates = sorted(fittest.members)
        if selection.fraction is None:
            take = 1
        else:
            take = max(1, int(selection.fraction * len(candidates)))
    if not candidates:
        return set()

    counts = None
    if selection.kind is SelectionStrategy.SOLUTION_PARTICIPATION:
        counts = {v: 0 for v in candidates}
        for ind in pop.individuals:
            for v in ind.members:
                if v in counts:
                    counts[v] += 1

    def score(v: int) -> Fraction:
        if counts is not None:
            if g.weight[v] == 0:
                return Fraction(counts[v]) - (len(pop.individuals) + 2)
            return Fraction(counts[v]) - Fraction(1, g.weight[v])
        return rate(selection.kind, g, pop, v)

    ranked = sorted(candidates, key=lambda v: (-score(v), v))
    forced = set(ranked[:take])

    doomed = set(forced)
    for v in forced:
        doomed.update(g.adj[v])
    for v in sorted(doomed):
        g.remove_vertex(v)
    solution_sink.update(forced)
    return forced
