"""Weighted local search over independent sets.

Two neighborhoods, explored by variable neighborhood descent: swaps that
insert one vertex and evict its (lighter) solution neighbors, and swaps
that trade one solution vertex for two non-adjacent neighbors of it.
Both accept strictly improving moves only, so the solution weight is
monotone along every trajectory.
"""

from __future__ import annotations

import random
from collections import deque

from .graph import WeightedGraph


class SearchState:
    """An independent set plus per-vertex solution-neighbor counts.

    A vertex is *free* when it is outside the solution and none of its
    neighbors are inside; free vertices can be added without repair.
    """

    __slots__ = ("g", "in_sol", "tight", "weight", "free")

    def __init__(self, g: WeightedGraph, members=()):
        self.g = g
        cap = g.capacity
        self.in_sol = [False] * cap
        self.tight = [0] * cap
        self.weight = 0
        self.free = {v for v in range(cap) if g.alive[v]}
        for v in sorted(set(members)):
            if not g.is_alive(v):
                raise ValueError(f"vertex {v} is not alive")
            if self.tight[v]:
                raise ValueError(f"members are not independent near {v}")
            self.add(v)

    def members(self) -> set[int]:
        return {v for v in range(len(self.in_sol)) if self.in_sol[v]}

    def is_free(self, v: int) -> bool:
        return not self.in_sol[v] and self.tight[v] == 0 and self.g.alive[v]

    def add(self, v: int) -> None:
        if self.in_sol[v] or self.tight[v]:
            raise ValueError(f"vertex {v} is not free")
        self.in_sol[v] = True
        self.weight += self.g.weight[v]
        self.free.discard(v)
        for u in self.g.adj[v]:
            self.tight[u] += 1
            self.free.discard(u)

    def drop(self, v: int) -> None:
        if not self.in_sol[v]:
            raise ValueError(f"vertex {v} is not in the solution")
        self.in_sol[v] = False
        self.weight -= self.g.weight[v]
        if self.tight[v] == 0:
            self.free.add(v)
        for u in self.g.adj[v]:
            self.tight[u] -= 1
            if self.tight[u] == 0 and not self.in_sol[u]:
                self.free.add(u)

    def force_insert(self, v: int) -> None:
        """Put v into the solution, evicting its solution neighbors."""
        if self.in_sol[v]:
            return
        for u in sorted(self.g.adj[v]):
            if self.in_sol[u]:
                self.drop(u)
        self.add(v)

    def audit(self) -> None:
        """Raise when tightness, freeness or the weight cache drifted."""
        g = self.g
        total = 0
        for v in range(g.capacity):
            if self.in_sol[v]:
                if not g.alive[v]:
                    raise AssertionError(f"dead solution vertex {v}")
                total += g.weight[v]
            if not g.alive[v]:
                continue
            t = sum(1 for u in g.adj[v] if self.in_sol[u])
            if t != self.tight[v]:
                raise AssertionError(f"tightness drift at {v}: {self.tight[v]} != {t}")
            if self.in_sol[v] and t:
                raise AssertionError(f"solution vertex {v} has solution neighbors")
            if (v in self.free) != (not self.in_sol[v] and t == 0):
                raise AssertionError(f"free-set drift at {v}")
        if total != self.weight:
            raise AssertionError(f"weight drift: {self.weight} != {total}")


def maximize_greedy(state: SearchState, order: str = "by_weight",
                    rng: random.Random | None = None) -> None:
    """Add free vertices until the solution is maximal.

    ``by_weight`` takes the heaviest free vertex first (ties: lower id);
    ``uniform_random`` draws uniformly and needs ``rng``.
    """
    if order == "by_weight":
        while state.free:
            v = max(state.free, key=lambda u: (state.g.weight[u], -u))
            state.add(v)
    elif order == "uniform_random":
        if rng is None:
            raise ValueError("uniform_random order needs an rng")
        while state.free:
            state.add(rng.choice(sorted(state.free)))
    else:
        raise ValueError(f"unknown order {order!r}")


def omega_one_swap(state: SearchState, v: int) -> bool:
    """Insert v and evict its solution neighbors when strictly improving."""
    g = state.g
    if state.in_sol[v] or not g.alive[v]:
        return False
    evicted = [u for u in g.adj[v] if state.in_sol[u]]
    if g.weight[v] <= sum(g.weight[u] for u in evicted):
        return False
    for u in sorted(evicted):
        state.drop(u)
    state.add(v)
    return True


def _find_one_two_pair(state: SearchState, v: int) -> tuple[int, int] | None:
    """Two non-adjacent neighbors of v, each tight only through v, that
    together outweigh it."""
    g = state.g
    cands = sorted((u for u in g.adj[v] if not state.in_sol[u] and state.tight[u] == 1),
                   key=lambda u: (-g.weight[u], u))
    need = g.weight[v]
    for i, x in enumerate(cands):
        wx = g.weight[x]
        for y in cands[i + 1:]:
            if wx + g.weight[y] <= need:
                break  # candidates are weight-sorted; later y are no heavier
            if y not in g.adj[x]:
                return x, y
    return None


def one_two_swap(state: SearchState, v: int) -> bool:
    """Trade v for two of its 1-tight neighbors when strictly improving."""
    if not state.in_sol[v]:
        return False
    pair = _find_one_two_pair(state, v)
    if pair is None:
        return False
    x, y = pair
    state.drop(v)
    state.add(x)
    state.add(y)
    return True


def vnd(state: SearchState, max_iterations: int = 15_000,
        rng: random.Random | None = None) -> int:
    """Descend through both neighborhoods until locally optimal or capped.

    Insertion swaps are exhausted first; any two-for-one success returns
    to them.  Every attempted move counts against ``max_iterations``.
    Returns the number of attempts spent.
    """
    g = state.g
    order = [v for v in range(g.capacity) if g.alive[v]]
    if rng is not None:
        rng.shuffle(order)
    queue = deque(order)
    inq = set(order)
    attempts = 0

    def requeue_around(flipped) -> None:
        affected = set(flipped)
        for f in flipped:
            affected.update(g.adj[f])
        for u in sorted(affected):
            if g.alive[u] and u not in inq:
                inq.add(u)
                queue.append(u)

    while attempts < max_iterations:
        # First neighborhood: single-vertex insertion swaps off the queue.
        while queue and attempts < max_iterations:
            v = queue.popleft()
            inq.discard(v)
            if not g.alive[v] or state.in_sol[v]:
                continue
            attempts += 1
            evicted = [u for u in g.adj[v] if state.in_sol[u]]
            if omega_one_swap(state, v):
                requeue_around([v] + evicted)
        if attempts >= max_iterations:
            break
        # Second neighborhood: first improving two-for-one trade.
        traded = False
        for v in sorted(state.members()):
            if attempts >= max_iterations:
                break
            attempts += 1
            pair = _find_one_two_pair(state, v)
            if pair is not None:
                x, y = pair
                state.drop(v)
                state.add(x)
                state.add(y)
                requeue_around([v, x, y])
                traded = True
                break
        if not traded and not queue:
            break
    return attempts


def perturb(state: SearchState, strength: int, rng: random.Random) -> None:
    """Force random outside vertices into the solution, then re-maximalize."""
    if strength < 1:
        raise ValueError("perturbation strength must be at least 1")
    g = state.g
    outside = [v for v in range(g.capacity) if g.alive[v] and not state.in_sol[v]]
    if not outside:
        maximize_greedy(state)
        return
    for v in rng.sample(outside, min(strength, len(outside))):
        state.force_insert(v)
    maximize_greedy(state)
