"""Balanced k-way partitions and vertex separators of the current kernel.

Blocks are grown by multi-source BFS from random seeds under a hard size
cap, then polished by a bounded boundary-refinement sweep.  A vertex
separator is extracted from an edge partition by covering every cut edge;
separator vertices are exempt from the balance bound.  A small pool keeps
partitions of assorted block counts ready for the combine operators and
invalidates itself whenever the graph mutates.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field

from .graph import WeightedGraph

SEPARATOR = -1

POOL_BLOCK_CHOICES = (2, 4, 8, 16, 32, 64)


class StalePartitionError(RuntimeError):
    """Partition used against a graph that mutated since it was built."""


@dataclass(frozen=True)
class Partition:
    """Immutable block assignment over the alive vertices of one graph state.

    ``block_of`` maps every alive vertex to a block in ``0..k-1`` or to
    ``SEPARATOR``.  ``max_block_size`` is the balance bound the blocks were
    built under.
    """

    k: int
    epsilon: float
    block_of: dict[int, int]
    generation: int
    max_block_size: int
    has_separator: bool

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v in sorted(self.block_of):
            b = self.block_of[v]
            if b != SEPARATOR:
                out[b].append(v)
        return out

    def separator(self) -> list[int]:
        return sorted(v for v, b in self.block_of.items() if b == SEPARATOR)

    def dump(self) -> str:
        """Debug dump: one block id per alive vertex in id order (-1 =
        separator)."""
        return "".join(f"{self.block_of[v]}\n" for v in sorted(self.block_of))

    def cut_edges(self, g: WeightedGraph) -> list[tuple[int, int]]:
        """Alive edges joining two distinct non-separator blocks."""
        self.check_fresh(g)
        out = []
        for u, v in g.edges():
            bu, bv = self.block_of[u], self.block_of[v]
            if bu != bv and bu != SEPARATOR and bv != SEPARATOR:
                out.append((u, v))
        return out

    def check_fresh(self, g: WeightedGraph) -> None:
        if g.generation != self.generation:
            raise StalePartitionError(
                f"partition built at generation {self.generation}, graph is at {g.generation}")


def max_block_size(n: int, k: int, epsilon: float) -> int:
    """Balance bound: (1 + epsilon) * ceil(n / k), floored to an int."""
    return int((1.0 + epsilon) * math.ceil(n / k) + 1e-9)


def validate_partition(g: WeightedGraph, part: Partition) -> list[str]:
    """All balance/coverage/separator violations, empty when valid."""
    problems = []
    alive = set(g.vertices())
    labeled = set(part.block_of)
    for v in sorted(alive - labeled):
        problems.append(f"alive vertex {v} has no block")
    for v in sorted(labeled - alive):
        problems.append(f"label on non-alive vertex {v}")
    sizes = [0] * part.k
    for v, b in part.block_of.items():
        if b == SEPARATOR:
            if not part.has_separator:
                problems.append(f"separator label on {v} in an edge partition")
        elif 0 <= b < part.k:
            sizes[b] += 1
        else:
            problems.append(f"vertex {v} labeled with unknown block {b}")
    bound = part.max_block_size
    for b, size in enumerate(sizes):
        if size > bound:
            problems.append(f"block {b} has {size} vertices, bound {bound}")
    if part.has_separator:
        for u, v in g.edges():
            bu = part.block_of.get(u, SEPARATOR)
            bv = part.block_of.get(v, SEPARATOR)
            if bu != bv and bu != SEPARATOR and bv != SEPARATOR:
                problems.append(f"cross-block edge ({u}, {v}) survives the separator")
    return problems


def edge_partition(g: WeightedGraph, k: int, epsilon: float,
                   rng: random.Random) -> Partition:
    """Balanced k-way partition targeting a small edge cut."""
    alive = g.vertices()
    n = len(alive)
    if k < 2:
        raise ValueError(f"need at least 2 blocks, got {k}")
    if k > n:
        raise ValueError(f"{k} blocks exceed {n} alive vertices")
    cap = max_block_size(n, k, epsilon)

    block_of: dict[int, int] = {}
    sizes = [0] * k
    frontiers: list[deque[int]] = [deque() for _ in range(k)]
    for b, seed in enumerate(rng.sample(alive, k)):
        block_of[seed] = b
        sizes[b] += 1
        frontiers[b].append(seed)

    # Round-robin region growing: each block claims the unassigned
    # neighbors of one frontier vertex per turn, up to its cap.
    active = True
    while active:
        active = False
        for b in range(k):
            while frontiers[b]:
                v = frontiers[b].popleft()
                claimed = False
                for u in sorted(g.adj[v]):
                    if u not in block_of and sizes[b] < cap:
                        block_of[u] = b
                        sizes[b] += 1
                        frontiers[b].append(u)
                        claimed = True
                if claimed:
                    active = True
                    break

    # Strand leftovers (blocked frontiers, other components) by adjacency,
    # falling back to the emptiest block.
    for v in alive:
        if v in block_of:
            continue
        counts = [0] * k
        for u in g.adj[v]:
            b = block_of.get(u)
            if b is not None:
                counts[b] += 1
        choices = [b for b in range(k) if sizes[b] < cap]
        b = max(choices, key=lambda b: (counts[b], -sizes[b], -b))
        block_of[v] = b
        sizes[b] += 1

    _refine(g, block_of, sizes, cap, k, passes=2)
    return Partition(k=k, epsilon=epsilon, block_of=block_of,
                     generation=g.generation, max_block_size=cap,
                     has_separator=False)


def _cross_degree(g: WeightedGraph, block_of: dict[int, int], v: int,
                  as_block: int, swapped: tuple[int, int] | None = None) -> int:
    """Cut edges at v if it sat in ``as_block``; ``swapped`` simulates one
    other vertex having traded blocks with v."""
    count = 0
    for z in g.adj[v]:
        bz = block_of[z]
        if swapped is not None and z == swapped[0]:
            bz = swapped[1]
        if bz != as_block:
            count += 1
    return count


def _refine(g: WeightedGraph, block_of: dict[int, int], sizes: list[int],
            cap: int, k: int, passes: int) -> None:
    """Bounded local refinement: single moves, then cross-block swaps.

    Moves respect the size cap; swaps keep sizes unchanged, which matters
    at epsilon=0 where every block is full.
    """
    for _ in range(passes):
        moved = False
        for v in sorted(block_of):
            b = block_of[v]
            counts: dict[int, int] = {}
            for u in g.adj[v]:
                bu = block_of[u]
                counts[bu] = counts.get(bu, 0) + 1
            here = counts.get(b, 0)
            best_gain, target = 0, None
            for t in range(k):
                if t == b or sizes[t] >= cap:
                    continue
                gain = counts.get(t, 0) - here
                if gain > best_gain:
                    best_gain, target = gain, t
            if target is not None and sizes[b] > 1:
                block_of[v] = target
                sizes[b] -= 1
                sizes[target] += 1
                moved = True

        boundary = sorted(v for v in block_of
                          if any(block_of[u] != block_of[v] for u in g.adj[v]))
        for i, u in enumerate(boundary):
            bu = block_of[u]
            for v in boundary[i + 1:]:
                bv = block_of[v]
                if bu == bv:
                    continue
                old = (_cross_degree(g, block_of, u, bu)
                       + _cross_degree(g, block_of, v, bv))
                new = (_cross_degree(g, block_of, u, bv, swapped=(v, bu))
                       + _cross_degree(g, block_of, v, bu, swapped=(u, bv)))
                if new < old:
                    block_of[u], block_of[v] = bv, bu
                    bu = bv
                    moved = True
        if not moved:
            break


def separator_from(g: WeightedGraph, part: Partition) -> Partition:
    """Turn an edge partition into a vertex separator.

    Every cut edge gets covered by moving one endpoint into the separator;
    the endpoint with the higher remaining cut degree wins, with graph
    degree and then lower id breaking ties (hubs make better separators).
    """
    part.check_fresh(g)
    block_of = dict(part.block_of)
    cut = part.cut_edges(g)
    incident: dict[int, set[tuple[int, int]]] = {}
    for e in cut:
        for v in e:
            incident.setdefault(v, set()).add(e)
    remaining = set(cut)
    while remaining:
        u, v = min(remaining)
        ku = (len(incident[u] & remaining), g.degree(u), -u)
        kv = (len(incident[v] & remaining), g.degree(v), -v)
        pick = u if ku >= kv else v
        block_of[pick] = SEPARATOR
        remaining -= incident[pick]
    return Partition(k=part.k, epsilon=part.epsilon, block_of=block_of,
                     generation=part.generation,
                     max_block_size=part.max_block_size, has_separator=True)


def vertex_separator(g: WeightedGraph, k: int, epsilon: float,
                     rng: random.Random) -> Partition:
    """Balanced k blocks plus a separator with no edges between blocks."""
    return separator_from(g, edge_partition(g, k, epsilon, rng))


@dataclass
class _PoolEntry:
    k: int
    edge: Partition
    sep: Partition | None = None


@dataclass
class PartitionPool:
    """Capacity-bounded cache of partitions over the current graph state."""

    g: WeightedGraph
    capacity: int = 10
    epsilon: float = 0.03
    max_blocks: int = 64
    _entries: list[_PoolEntry] = field(default_factory=list)
    _generation: int = -1

    def _block_choices(self) -> list[int]:
        live = self.g.live_count
        ks = [k for k in POOL_BLOCK_CHOICES if k <= min(live, self.max_blocks)]
        return ks or ([2] if live >= 2 else [])

    def _fill(self, rng: random.Random) -> None:
        choices = self._block_choices()
        if not choices:
            raise ValueError("graph too small to partition")
        self._entries = [
            _PoolEntry(k=k, edge=edge_partition(self.g, k, self.epsilon, rng))
            for k in (rng.choice(choices) for _ in range(self.capacity))
        ]
        self._generation = self.g.generation

    def fetch(self, want_separator: bool, rng: random.Random,
              k: int | None = None) -> Partition:
        """Uniformly random pool entry matching the request.

        A stale or empty pool refills first; a missing block count is built
        on demand and replaces a random entry.
        """
        if self._generation != self.g.generation or not self._entries:
            self._fill(rng)
        matching = [e for e in self._entries if k is None or e.k == k]
        if not matching:
            entry = _PoolEntry(k=k, edge=edge_partition(self.g, k, self.epsilon, rng))
            self._entries[rng.randrange(len(self._entries))] = entry
        else:
            entry = matching[rng.randrange(len(matching))]
        if not want_separator:
            return entry.edge
        if entry.sep is None:
            entry.sep = separator_from(self.g, entry.edge)
        return entry.sep
