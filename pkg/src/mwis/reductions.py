"""Exact data reductions, the exhaustive reduce loop, and solution rebuild.

Thirteen rules shrink the graph while an integer offset tracks the weight
already banked.  The master identity, checked throughout the test suite:

    offset + alpha_w(kernel) == alpha_w(original graph)

Each firing appends one :class:`ReductionEvent` holding (a) low-level undo
primitives that restore the graph exactly and (b) a small rebuild script
that, replayed in reverse over a kernel solution, produces an independent
set of the original graph.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .graph import WeightedGraph, is_independent
from .maxflow import FlowNetwork


class Rule(Enum):
    NEIGHBORHOOD_REMOVAL = "neighborhood_removal"
    DEGREE_ONE = "degree_one"
    TRIANGLE = "triangle"
    V_SHAPE = "v_shape"
    V_SHAPE_MIN = "v_shape_min"
    ISOLATED_CLIQUE = "isolated_clique"
    BASIC_SINGLE_EDGE = "basic_single_edge"
    EXTENDED_SINGLE_EDGE = "extended_single_edge"
    DOMINATION = "domination"
    TWIN = "twin"
    SIMPLICIAL_TRANSFER = "simplicial_transfer"
    CWIS = "cwis"
    NEIGHBORHOOD_FOLDING = "neighborhood_folding"


ALL_RULES: tuple[Rule, ...] = tuple(Rule)

# Undo primitives recorded while a rule mutates the graph, replayed in
# reverse by undo_event:
#   ("rm", v, neighbor_snapshot)   vertex removed
#   ("wt", v, old_weight)          weight changed
#   ("ea", u, v) / ("er", u, v)    edge added / removed between alive vertices
#   ("nv", v)                      fresh vertex appended

# Rebuild scripts, replayed newest-first over the growing solution
# (unconditional decisions travel in ``decided`` instead):
#   ("if_absent_take", others, v)     add v when no member of others is taken
#   ("toggle_on_absent", others, v)   add v when others are absent, else drop it
#   ("fold", fold_vertex, members, else_add)


@dataclass
class ReductionEvent:
    rule: Rule
    undo_ops: list[tuple] = field(default_factory=list)
    offset_delta: int = 0
    decided: tuple[int, ...] = ()
    rebuild: tuple = ()
    fold_vertex: Optional[int] = None
    fold_members: tuple[int, ...] = ()

    def touched(self) -> set[int]:
        """Vertices whose adjacency or weight this event changed."""
        out = set()
        for op in self.undo_ops:
            if op[0] == "rm":
                out.add(op[1])
                out.update(op[2])
            elif op[0] in ("ea", "er"):
                out.add(op[1])
                out.add(op[2])
            else:
                out.add(op[1])
        return out


def undo_event(g: WeightedGraph, ev: ReductionEvent) -> None:
    """Restore the graph to its exact state before ``ev``."""
    for op in reversed(ev.undo_ops):
        kind = op[0]
        if kind == "rm":
            g.restore_vertex(op[1], op[2])
        elif kind == "wt":
            g.set_vertex_weight(op[1], op[2])
        elif kind == "ea":
            g.remove_edge(op[1], op[2])
        elif kind == "er":
            g.add_edge(op[1], op[2])
        elif kind == "nv":
            g.pop_last_vertex()
        else:  # pragma: no cover - internal corruption
            raise AssertionError(f"unknown undo op {kind}")


# -- journaled mutation helpers -------------------------------------------

def _rm(g: WeightedGraph, v: int, ops: list[tuple]) -> None:
    ops.append(("rm", v, g.remove_vertex(v)))


def _set_w(g: WeightedGraph, v: int, w: int, ops: list[tuple]) -> None:
    ops.append(("wt", v, g.weight[v]))
    g.set_vertex_weight(v, w)


def _add_edge(g: WeightedGraph, u: int, v: int, ops: list[tuple]) -> None:
    g.add_edge(u, v)
    ops.append(("ea", u, v))


def _rm_edge(g: WeightedGraph, u: int, v: int, ops: list[tuple]) -> None:
    g.remove_edge(u, v)
    ops.append(("er", u, v))


def _new_vertex(g: WeightedGraph, w: int, ops: list[tuple]) -> int:
    v = g.add_vertex(w)
    ops.append(("nv", v))
    return v


def _is_clique(g: WeightedGraph, vertices) -> bool:
    vs = sorted(vertices)
    for i, u in enumerate(vs):
        nbrs = g.adj[u]
        for v in vs[i + 1:]:
            if v not in nbrs:
                return False
    return True


# -- the thirteen rules ----------------------------------------------------
# Every apply_* takes alive arguments, returns True iff it fired, and on
# True appends exactly one event to ``events``.

def apply_neighborhood_removal(g: WeightedGraph, v: int, events: list[ReductionEvent]) -> bool:
    """Take v outright when it outweighs its whole neighborhood."""
    if g.weight[v] < g.neighborhood_weight(v):
        return False
    ops: list[tuple] = []
    for u in sorted(g.adj[v]):
        _rm(g, u, ops)
    _rm(g, v, ops)
    events.append(ReductionEvent(Rule.NEIGHBORHOOD_REMOVAL, ops,
                                 offset_delta=g.weight[v], decided=(v,)))
    return True


def apply_degree_one(g: WeightedGraph, v: int, events: list[ReductionEvent]) -> bool:
    """Resolve a pendant vertex against its single neighbor."""
    if g.degree(v) != 1:
        return False
    (u,) = g.adj[v]
    wv = g.weight[v]
    ops: list[tuple] = []
    if wv >= g.weight[u]:
        _rm(g, v, ops)
        _rm(g, u, ops)
        events.append(ReductionEvent(Rule.DEGREE_ONE, ops, offset_delta=wv, decided=(v,)))
    else:
        _rm(g, v, ops)
        _set_w(g, u, g.weight[u] - wv, ops)
        events.append(ReductionEvent(Rule.DEGREE_ONE, ops, offset_delta=wv,
                                     rebuild=("if_absent_take", (u,), v)))
    return True


def _two_neighbors(g: WeightedGraph, v: int) -> tuple[int, int]:
    """Neighbors of a degree-two vertex, lighter first (ties: lower id)."""
    a, b = sorted(g.adj[v])
    if (g.weight[a], a) <= (g.weight[b], b):
        return a, b
    return b, a


def apply_triangle(g: WeightedGraph, v: int, events: list[ReductionEvent]) -> bool:
    """Resolve a degree-two vertex whose neighbors are adjacent."""
    if g.degree(v) != 2:
        return False
    x, y = _two_neighbors(g, v)
    if y not in g.adj[x]:
        return False
    wv, wx, wy = g.weight[v], g.weight[x], g.weight[y]
    ops: list[tuple] = []
    if wv >= wy:
        _rm(g, v, ops)
        _rm(g, x, ops)
        _rm(g, y, ops)
        events.append(ReductionEvent(Rule.TRIANGLE, ops, offset_delta=wv, decided=(v,)))
    elif wv >= wx:
        _rm(g, v, ops)
        _rm(g, x, ops)
        _set_w(g, y, wy - wv, ops)
        events.append(ReductionEvent(Rule.TRIANGLE, ops, offset_delta=wv,
                                     rebuild=("if_absent_take", (y,), v)))
    else:
        _rm(g, v, ops)
        _set_w(g, x, wx - wv, ops)
        _set_w(g, y, wy - wv, ops)
        events.append(ReductionEvent(Rule.TRIANGLE, ops, offset_delta=wv,
                                     rebuild=("if_absent_take", (x, y), v)))
    return True


def apply_v_shape(g: WeightedGraph, v: int, events: list[ReductionEvent]) -> bool:
    """Resolve a degree-two vertex with non-adjacent neighbors.

    Covers the take-v and fold cases plus the middle-weight rewiring; the
    lighter-than-both case lives in :func:`apply_v_shape_min`.
    """
    if g.degree(v) != 2:
        return False
    x, y = _two_neighbors(g, v)
    if y in g.adj[x]:
        return False
    wv, wx, wy = g.weight[v], g.weight[x], g.weight[y]
    if wv < wx:
        return False
    ops: list[tuple] = []
    if wv >= wy:
        if wv >= wx + wy:
            _rm(g, v, ops)
            _rm(g, x, ops)
            _rm(g, y, ops)
            events.append(ReductionEvent(Rule.V_SHAPE, ops, offset_delta=wv, decided=(v,)))
        else:
            outside = sorted((g.adj[x] | g.adj[y]) - {v, x, y})
            _rm(g, v, ops)
            _rm(g, x, ops)
            _rm(g, y, ops)
            fold = _new_vertex(g, wx + wy - wv, ops)
            for u in outside:
                _add_edge(g, fold, u, ops)
            events.append(ReductionEvent(Rule.V_SHAPE, ops, offset_delta=wv,
                                         rebuild=("fold", fold, (x, y), (v,)),
                                         fold_vertex=fold, fold_members=(x, y)))
    else:
        gained = sorted(g.adj[y] - g.adj[x] - {v, x})
        _rm(g, v, ops)
        for u in gained:
            _add_edge(g, x, u, ops)
        _set_w(g, y, wy - wv, ops)
        events.append(ReductionEvent(Rule.V_SHAPE, ops, offset_delta=wv,
                                     rebuild=("if_absent_take", (x, y), v)))
    return True


def apply_v_shape_min(g: WeightedGraph, v: int, events: list[ReductionEvent]) -> bool:
    """Degree-two vertex strictly lighter than both non-adjacent neighbors.

    Discounts both neighbors by w(v) and rewires v to their outside
    neighborhoods; no vertex is removed.  Skipped for w(v)=0, where the
    rewrite would bank nothing and make no progress.
    """
    if g.degree(v) != 2 or g.weight[v] < 1:
        return False
    x, y = _two_neighbors(g, v)
    if y in g.adj[x]:
        return False
    wv = g.weight[v]
    if wv >= g.weight[x]:
        return False
    ops: list[tuple] = []
    new_nbrs = sorted((g.adj[x] | g.adj[y]) - {v, x, y})
    _rm_edge(g, v, x, ops)
    _rm_edge(g, v, y, ops)
    for u in new_nbrs:
        _add_edge(g, v, u, ops)
    _set_w(g, x, g.weight[x] - wv, ops)
    _set_w(g, y, g.weight[y] - wv, ops)
    events.append(ReductionEvent(Rule.V_SHAPE_MIN, ops, offset_delta=wv,
                                 rebuild=("toggle_on_absent", (x, y), v)))
    return True


def apply_isolated_clique(g: WeightedGraph, v: int, events: list[ReductionEvent]) -> bool:
    """Take a simplicial vertex that is heaviest in its clique."""
    nbrs = g.adj[v]
    if nbrs and g.weight[v] < max(g.weight[u] for u in nbrs):
        return False
    if not _is_clique(g, nbrs):
        return False
    ops: list[tuple] = []
    for u in sorted(nbrs):
        _rm(g, u, ops)
    _rm(g, v, ops)
    events.append(ReductionEvent(Rule.ISOLATED_CLIQUE, ops,
                                 offset_delta=g.weight[v], decided=(v,)))
    return True


def apply_basic_single_edge(g: WeightedGraph, u: int, v: int,
                            events: list[ReductionEvent]) -> bool:
    """Drop v along edge (u, v) when u's exclusive neighborhood is light.

    Fires when w(v) plus the weight of N(u) outside N[v] is at most w(u):
    any solution through v can be rerouted through u at no loss.
    """
    if v not in g.adj[u]:
        return False
    exclusive = sum(g.weight[z] for z in g.adj[u] if z != v and z not in g.adj[v])
    if g.weight[v] + exclusive > g.weight[u]:
        return False
    ops: list[tuple] = []
    _rm(g, v, ops)
    events.append(ReductionEvent(Rule.BASIC_SINGLE_EDGE, ops))
    return True


def apply_extended_single_edge(g: WeightedGraph, u: int, v: int,
                               events: list[ReductionEvent]) -> bool:
    """Remove the common neighborhood of a dominatingly heavy edge side."""
    if v not in g.adj[u]:
        return False
    common = g.adj[u] & g.adj[v]
    if not common:
        return False
    if g.weight[v] < g.neighborhood_weight(v) - g.weight[u]:
        return False
    ops: list[tuple] = []
    for z in sorted(common):
        _rm(g, z, ops)
    events.append(ReductionEvent(Rule.EXTENDED_SINGLE_EDGE, ops))
    return True


def apply_domination(g: WeightedGraph, u: int, v: int,
                     events: list[ReductionEvent]) -> bool:
    """Remove u when its closed neighborhood covers v's and it is no heavier."""
    if v not in g.adj[u] or g.weight[u] > g.weight[v]:
        return False
    if g.degree(u) < g.degree(v):
        return False
    adj_u = g.adj[u]
    if any(z != u and z not in adj_u for z in g.adj[v]):
        return False
    ops: list[tuple] = []
    _rm(g, u, ops)
    events.append(ReductionEvent(Rule.DOMINATION, ops))
    return True


def apply_twin(g: WeightedGraph, u: int, v: int, events: list[ReductionEvent]) -> bool:
    """Resolve two degree-three vertices sharing their whole neighborhood."""
    if u == v or g.degree(u) != 3 or g.degree(v) != 3 or g.adj[u] != g.adj[v]:
        return False
    p, q, r = sorted(g.adj[u])
    w_pair = g.weight[u] + g.weight[v]
    w_nbrs = g.weight[p] + g.weight[q] + g.weight[r]
    ops: list[tuple] = []
    if w_pair >= w_nbrs:
        for z in (p, q, r):
            _rm(g, z, ops)
        _rm(g, u, ops)
        _rm(g, v, ops)
        events.append(ReductionEvent(Rule.TWIN, ops, offset_delta=w_pair,
                                     decided=tuple(sorted((u, v)))))
        return True
    if w_pair <= w_nbrs - min(g.weight[p], g.weight[q], g.weight[r]):
        return False
    if not is_independent(g, (p, q, r)):
        return False
    outside = sorted((g.adj[p] | g.adj[q] | g.adj[r]) - {u, v, p, q, r})
    for z in (p, q, r):
        _rm(g, z, ops)
    _rm(g, u, ops)
    _rm(g, v, ops)
    fold = _new_vertex(g, w_nbrs - w_pair, ops)
    for z in outside:
        _add_edge(g, fold, z, ops)
    events.append(ReductionEvent(Rule.TWIN, ops, offset_delta=w_pair,
                                 rebuild=("fold", fold, (p, q, r), tuple(sorted((u, v)))),
                                 fold_vertex=fold, fold_members=(p, q, r)))
    return True


def apply_simplicial_transfer(g: WeightedGraph, v: int,
                              events: list[ReductionEvent]) -> bool:
    """Cash in a simplicial vertex, discounting its heavier clique mates.

    Neighbors no heavier than v are deleted with it; the survivors keep
    competing with v's banked weight subtracted from theirs.
    """
    nbrs = g.adj[v]
    if not _is_clique(g, nbrs):
        return False
    wv = g.weight[v]
    light = sorted(u for u in nbrs if g.weight[u] <= wv)
    heavy = sorted(u for u in nbrs if g.weight[u] > wv)
    ops: list[tuple] = []
    for u in light:
        _rm(g, u, ops)
    _rm(g, v, ops)
    for u in heavy:
        _set_w(g, u, g.weight[u] - wv, ops)
    if heavy:
        ev = ReductionEvent(Rule.SIMPLICIAL_TRANSFER, ops, offset_delta=wv,
                            rebuild=("if_absent_take", tuple(heavy), v))
    else:
        ev = ReductionEvent(Rule.SIMPLICIAL_TRANSFER, ops, offset_delta=wv, decided=(v,))
    events.append(ev)
    return True


def critical_set(g: WeightedGraph) -> tuple[set[int], int]:
    """Independent set maximizing w(U) - w(N(U)), with that value.

    Solved as a max-closure problem on the bipartite double cover: picking
    v's left copy (profit w(v)) forces the right copies of its neighbors
    (cost w(u)).  After the min cut, U is the set of vertices whose left
    copy stays on the source side while the right copy does not; such a U
    is independent by the closure constraints.
    """
    ids = g.vertices()
    n = len(ids)
    if n == 0:
        return set(), 0
    index = {v: i for i, v in enumerate(ids)}
    net = FlowNetwork(2 * n + 2)
    s, t = 2 * n, 2 * n + 1
    for v in ids:
        i = index[v]
        net.add_edge(s, i, g.weight[v])
        net.add_edge(n + i, t, g.weight[v])
    inf = g.total_weight() + 1
    for v in ids:
        i = index[v]
        for u in sorted(g.adj[v]):
            net.add_edge(i, n + index[u], inf)
    net.max_flow(s, t)
    side = net.min_cut_source_side(s)
    chosen = {v for v in ids if index[v] in side and (n + index[v]) not in side}
    boundary = set()
    for v in chosen:
        boundary.update(g.adj[v])
    boundary -= chosen
    value = sum(g.weight[v] for v in chosen) - sum(g.weight[v] for v in boundary)
    return chosen, value


def apply_cwis(g: WeightedGraph, events: list[ReductionEvent],
               allow_zero: bool = False) -> bool:
    """Bank the critical independent set when its surplus is positive.

    ``allow_zero`` additionally fires on a nonempty set of surplus zero.
    """
    chosen, value = critical_set(g)
    if not chosen or value < 0 or (value == 0 and not allow_zero):
        return False
    assert is_independent(g, chosen)
    doomed = set()
    for v in chosen:
        doomed.update(g.adj[v])
    doomed -= chosen
    total = sum(g.weight[v] for v in chosen)
    ops: list[tuple] = []
    for u in sorted(doomed):
        _rm(g, u, ops)
    for v in sorted(chosen):
        _rm(g, v, ops)
    events.append(ReductionEvent(Rule.CWIS, ops, offset_delta=total,
                                 decided=tuple(sorted(chosen))))
    return True


def apply_neighborhood_folding(g: WeightedGraph, v: int,
                               events: list[ReductionEvent]) -> bool:
    """Fold v and its independent neighborhood into one surplus vertex."""
    nbrs = sorted(g.adj[v])
    if not nbrs or not is_independent(g, nbrs):
        return False
    wv = g.weight[v]
    w_nbrs = sum(g.weight[u] for u in nbrs)
    if w_nbrs <= wv or w_nbrs - min(g.weight[u] for u in nbrs) >= wv:
        return False
    outside = set()
    for u in nbrs:
        outside.update(g.adj[u])
    outside -= set(nbrs)
    outside.discard(v)
    ops: list[tuple] = []
    for u in nbrs:
        _rm(g, u, ops)
    _rm(g, v, ops)
    fold = _new_vertex(g, w_nbrs - wv, ops)
    for u in sorted(outside):
        _add_edge(g, fold, u, ops)
    events.append(ReductionEvent(Rule.NEIGHBORHOOD_FOLDING, ops, offset_delta=wv,
                                 rebuild=("fold", fold, tuple(nbrs), (v,)),
                                 fold_vertex=fold, fold_members=tuple(nbrs)))
    return True


# -- orderings --------------------------------------------------------------

@dataclass(frozen=True)
class ReductionOrdering:
    """Named sequence of enabled rules; each rule appears at most once."""

    name: str
    sequence: tuple[Rule, ...]

    def __post_init__(self):
        if len(set(self.sequence)) != len(self.sequence):
            raise ValueError(f"ordering {self.name!r} repeats a rule")
        if not self.sequence:
            raise ValueError(f"ordering {self.name!r} is empty")

    def without(self, rule: Rule) -> "ReductionOrdering":
        return ReductionOrdering(f"{self.name}-without-{rule.value}",
                                 tuple(r for r in self.sequence if r is not rule))


_R = Rule
ORDERING_PRESETS: dict[str, tuple[Rule, ...]] = {
    "baseline": (
        _R.NEIGHBORHOOD_REMOVAL, _R.DEGREE_ONE, _R.TRIANGLE, _R.V_SHAPE,
        _R.V_SHAPE_MIN, _R.ISOLATED_CLIQUE, _R.BASIC_SINGLE_EDGE,
        _R.EXTENDED_SINGLE_EDGE, _R.DOMINATION, _R.TWIN,
        _R.SIMPLICIAL_TRANSFER, _R.CWIS, _R.NEIGHBORHOOD_FOLDING,
    ),
    "time": (
        _R.BASIC_SINGLE_EDGE, _R.ISOLATED_CLIQUE, _R.V_SHAPE, _R.TWIN,
        _R.DEGREE_ONE, _R.NEIGHBORHOOD_REMOVAL, _R.EXTENDED_SINGLE_EDGE,
        _R.V_SHAPE_MIN, _R.TRIANGLE, _R.DOMINATION, _R.SIMPLICIAL_TRANSFER,
        _R.CWIS, _R.NEIGHBORHOOD_FOLDING,
    ),
    "weight": (
        _R.ISOLATED_CLIQUE, _R.CWIS, _R.NEIGHBORHOOD_FOLDING,
        _R.BASIC_SINGLE_EDGE, _R.V_SHAPE, _R.V_SHAPE_MIN, _R.TWIN,
        _R.DOMINATION, _R.NEIGHBORHOOD_REMOVAL, _R.DEGREE_ONE, _R.TRIANGLE,
        _R.SIMPLICIAL_TRANSFER, _R.EXTENDED_SINGLE_EDGE,
    ),
    "time_weight": (
        _R.ISOLATED_CLIQUE, _R.BASIC_SINGLE_EDGE, _R.CWIS, _R.V_SHAPE,
        _R.TWIN, _R.DEGREE_ONE, _R.V_SHAPE_MIN, _R.NEIGHBORHOOD_REMOVAL,
        _R.DOMINATION, _R.EXTENDED_SINGLE_EDGE, _R.TRIANGLE,
        _R.SIMPLICIAL_TRANSFER, _R.NEIGHBORHOOD_FOLDING,
    ),
    "best_perm": (
        _R.NEIGHBORHOOD_REMOVAL, _R.DEGREE_ONE, _R.TRIANGLE, _R.V_SHAPE,
        _R.V_SHAPE_MIN, _R.ISOLATED_CLIQUE, _R.TWIN, _R.CWIS,
        _R.SIMPLICIAL_TRANSFER, _R.DOMINATION, _R.BASIC_SINGLE_EDGE,
        _R.EXTENDED_SINGLE_EDGE, _R.NEIGHBORHOOD_FOLDING,
    ),
}


def ordering_preset(name: str) -> ReductionOrdering:
    """Look up a named full ordering of all thirteen rules."""
    try:
        return ReductionOrdering(name, ORDERING_PRESETS[name])
    except KeyError:
        known = ", ".join(sorted(ORDERING_PRESETS))
        raise ValueError(f"unknown ordering {name!r}; presets: {known}") from None


# -- the reduce loop ---------------------------------------------------------

class _Scheduler:
    """Per-rule dirty queues; a vertex re-enters every queue when anything
    in its closed neighborhood is touched."""

    UNQUEUED = tuple(r for r in ALL_RULES if r is not Rule.CWIS)

    def __init__(self, g: WeightedGraph):
        self.g = g
        start = g.vertices()
        self.queues: dict[Rule, deque[int]] = {r: deque(start) for r in self.UNQUEUED}
        self.inq: dict[Rule, set[int]] = {r: set(start) for r in self.UNQUEUED}
        self.cwis_pending = True

    def push(self, rule: Rule, v: int) -> None:
        if v not in self.inq[rule]:
            self.inq[rule].add(v)
            self.queues[rule].append(v)

    def mark_event(self, ev: ReductionEvent) -> None:
        g = self.g
        dirty = set()
        for v in ev.touched():
            if g.is_alive(v):
                dirty.add(v)
                dirty.update(g.adj[v])
        for v in sorted(dirty):
            for rule in self.UNQUEUED:
                self.push(rule, v)
        self.cwis_pending = True


def _try_edge_rule(g, c, events, attempt) -> bool:
    """Try an oriented edge rule from candidate c in both directions.

    Tries (lower id, higher id) first so that ties resolve toward removing
    the lower-id vertex deterministically.
    """
    for nb in sorted(g.adj[c]):
        lo, hi = (c, nb) if c < nb else (nb, c)
        if attempt(g, lo, hi, events):
            return True
        if attempt(g, hi, lo, events):
            return True
    return False


def _try_twin(g: WeightedGraph, c: int, events: list[ReductionEvent]) -> bool:
    if g.degree(c) != 3:
        return False
    probe = min(g.adj[c], key=lambda u: (g.degree(u), u))
    for u in sorted(g.adj[probe]):
        if u != c and apply_twin(g, min(c, u), max(c, u), events):
            return True
    return False


def _attempt(g: WeightedGraph, rule: Rule, c: int, events: list[ReductionEvent]) -> bool:
    if rule is Rule.NEIGHBORHOOD_REMOVAL:
        return apply_neighborhood_removal(g, c, events)
    if rule is Rule.DEGREE_ONE:
        return apply_degree_one(g, c, events)
    if rule is Rule.TRIANGLE:
        return apply_triangle(g, c, events)
    if rule is Rule.V_SHAPE:
        return apply_v_shape(g, c, events)
    if rule is Rule.V_SHAPE_MIN:
        return apply_v_shape_min(g, c, events)
    if rule is Rule.ISOLATED_CLIQUE:
        return apply_isolated_clique(g, c, events)
    if rule is Rule.BASIC_SINGLE_EDGE:
        return _try_edge_rule(g, c, events, apply_basic_single_edge)
    if rule is Rule.EXTENDED_SINGLE_EDGE:
        return _try_edge_rule(g, c, events, apply_extended_single_edge)
    if rule is Rule.DOMINATION:
        return _try_edge_rule(g, c, events, apply_domination)
    if rule is Rule.TWIN:
        return _try_twin(g, c, events)
    if rule is Rule.SIMPLICIAL_TRANSFER:
        return apply_simplicial_transfer(g, c, events)
    if rule is Rule.NEIGHBORHOOD_FOLDING:
        return apply_neighborhood_folding(g, c, events)
    raise AssertionError(rule)


@dataclass
class Kernel:
    """Reduced graph plus the event stack needed to climb back out."""

    graph: WeightedGraph
    events: list[ReductionEvent]

    @property
    def offset(self) -> int:
        return sum(ev.offset_delta for ev in self.events)

    def decided_in(self) -> set[int]:
        """Original vertices already forced into the solution."""
        return replay_events(self.events, set(), decided_only=True)

    def reconstruct(self, kernel_solution) -> set[int]:
        return reconstruct(self, kernel_solution)


def exact_reduce(g: WeightedGraph, ordering: ReductionOrdering | None = None,
                 events: list[ReductionEvent] | None = None,
                 allow_zero_cwis: bool = False) -> Kernel:
    """Apply the rules exhaustively in the given ordering.

    Each rule drains its dirty-candidate queue; after any firing the rule
    cursor restarts at the front of the ordering (queues keep their state).
    Terminates when no rule fires on any pending candidate.
    """
    ordering = ordering or ordering_preset("baseline")
    if events is None:
        events = []
    sched = _Scheduler(g)
    seq = ordering.sequence
    i = 0
    while i < len(seq):
        rule = seq[i]
        fired = False
        if rule is Rule.CWIS:
            if sched.cwis_pending:
                sched.cwis_pending = False
                fired = apply_cwis(g, events, allow_zero=allow_zero_cwis)
        else:
            queue, inq = sched.queues[rule], sched.inq[rule]
            while queue:
                c = queue.popleft()
                inq.discard(c)
                if g.is_alive(c) and _attempt(g, rule, c, events):
                    fired = True
                    break
        if fired:
            sched.mark_event(events[-1])
            i = 0
        else:
            i += 1
    return Kernel(g, events)


# -- reconstruction -----------------------------------------------------------

def replay_events(events: list[ReductionEvent], seed: set[int],
                  decided_only: bool = False) -> set[int]:
    """Replay the rebuild scripts newest-first over ``seed``.

    With ``decided_only`` the conditional branches are skipped, leaving the
    vertices every solution of the kernel must contain.
    """
    sol = set(seed)
    for ev in reversed(events):
        sol.update(ev.decided)
        script = ev.rebuild
        if not script:
            continue
        kind = script[0]
        if kind == "fold":
            _, fold, members, else_add = script
            if fold in sol:
                sol.discard(fold)
                sol.update(members)
            elif not decided_only:
                sol.update(else_add)
        elif decided_only:
            continue
        elif kind == "if_absent_take":
            _, others, v = script
            if sol.isdisjoint(others):
                sol.add(v)
        elif kind == "toggle_on_absent":
            _, others, v = script
            if sol.isdisjoint(others):
                sol.add(v)
            else:
                sol.discard(v)
        else:  # pragma: no cover - internal corruption
            raise AssertionError(f"unknown rebuild script {kind}")
    return sol


def reconstruct(kernel: Kernel, kernel_solution) -> set[int]:
    """Expand an independent set of the kernel to one of the original graph."""
    members = set(kernel_solution)
    if not is_independent(kernel.graph, members):
        raise ValueError("kernel solution is not independent in the kernel")
    return replay_events(kernel.events, members)


# -- ordering experiments ------------------------------------------------------

@dataclass(frozen=True)
class OrderingTrial:
    """One row of an ordering experiment."""

    label: str
    rules: tuple[str, ...]
    kernel_vertices: int
    kernel_edges: int
    offset: int
    elapsed_seconds: float
    kernel_ratio: float


def run_ordering_experiment(g: WeightedGraph, mode: str,
                            allow_zero_cwis: bool = False) -> list[OrderingTrial]:
    """Reduce copies of ``g`` under a family of orderings.

    Modes: ``disable_one`` drops each baseline rule in turn (13 rows);
    ``preset_sweep`` runs the five named presets (5 rows).
    """
    if mode == "disable_one":
        base = ordering_preset("baseline")
        orderings = [base.without(rule) for rule in base.sequence]
    elif mode == "preset_sweep":
        orderings = [ordering_preset(name) for name in
                     ("baseline", "time", "weight", "time_weight", "best_perm")]
    else:
        raise ValueError(f"unknown mode {mode!r}; use disable_one or preset_sweep")

    n = g.live_count
    rows = []
    for ordering in orderings:
        work = g.copy()
        start = time.perf_counter()
        kernel = exact_reduce(work, ordering, allow_zero_cwis=allow_zero_cwis)
        elapsed = time.perf_counter() - start
        rows.append(OrderingTrial(
            label=ordering.name,
            rules=tuple(r.value for r in ordering.sequence),
            kernel_vertices=work.live_count,
            kernel_edges=work.live_edges,
            offset=kernel.offset,
            elapsed_seconds=elapsed,
            kernel_ratio=(work.live_count / n) if n else 0.0,
        ))
    return rows
