"""Graph representation, distances and the square operation.

Adjacency is stored as one integer bitmask per vertex: bit ``u`` of
``masks[v]`` is set iff ``uv`` is an edge. Python integers are unbounded, so
the same representation serves small graphs (fast set intersection for the
exhaustive sweeps) and larger ones.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from typing import Final

import numpy as np

from ke_square.errors import GraphConstructionError

INFINITE: Final = int(np.iinfo(np.int64).max)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Instances are immutable and compare by vertex count and edge set.
    """

    n: int
    masks: tuple[int, ...]

    @cached_property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(iter_bits(m)) for m in self.masks)

    @cached_property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted (u, v) pairs with u < v."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.masks[u] >> (u + 1) << (u + 1))]


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; unreachable pairs hold INFINITE."""

    n: int
    dist: np.ndarray

    def __getitem__(self, pair: tuple[int, int]) -> int:
        u, v = pair
        return int(self.dist[u, v])

    def all_at_least(self, vertices: Iterable[int], k: int) -> bool:
        """True if every pair of distinct vertices in `vertices` is at distance >= k."""
        idx = sorted(vertices)
        if len(idx) < 2:
            return True
        block = self.dist[np.ix_(idx, idx)]
        off_diagonal = ~np.eye(len(idx), dtype=bool)
        return bool(np.all(block[off_diagonal] >= k))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices; duplicate edges collapse."""
    if n < 0:
        raise GraphConstructionError(f"vertex count must be non-negative, got {n}")
    masks = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphConstructionError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphConstructionError(f"loop at vertex {u}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks))


def _reach(g: Graph, source: int) -> int:
    seen = frontier = 1 << source
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.masks[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def distances(g: Graph) -> DistanceMatrix:
    """Hop distances by one breadth-first traversal per vertex."""
    dist = np.full((g.n, g.n), INFINITE, dtype=np.int64)
    for s in range(g.n):
        dist[s, s] = 0
        seen = frontier = 1 << s
        level = 0
        while frontier:
            level += 1
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.masks[v]
            frontier = nxt & ~seen
            seen |= frontier
            for v in iter_bits(frontier):
                dist[s, v] = level
    return DistanceMatrix(g.n, dist)


def square(g: Graph) -> Graph:
    """G^2: join distinct vertices at distance at most 2."""
    masks = []
    for v in range(g.n):
        ball = g.masks[v]
        for u in iter_bits(g.masks[v]):
            ball |= g.masks[u]
        masks.append(ball & ~(1 << v))
    return Graph(g.n, tuple(masks))


def complement(g: Graph) -> Graph:
    full = g.all_mask
    return Graph(g.n, tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.masks)))


def leaves(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def is_connected(g: Graph) -> bool:
    """True for n <= 1, or when the graph is a single component."""
    return len(components(g)) <= 1


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their smallest vertex."""
    remaining = g.all_mask
    parts = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        reached = _reach(g, start)
        parts.append(frozenset(iter_bits(reached)))
        remaining &= ~reached
    return parts


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g)
