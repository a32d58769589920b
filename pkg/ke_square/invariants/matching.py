"""Maximum cardinality matching in general graphs (Edmonds' blossom algorithm)."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, computed_field, model_validator

from ke_square.core.graph import Graph


class Matching(BaseModel):
    """A set of pairwise non-incident edges.

    `edges` are sorted (u, v) pairs with u < v; `pendant[k]` tells whether
    edge k has a leaf endpoint in the host graph.
    """

    model_config = ConfigDict(frozen=True)

    edges: tuple[tuple[int, int], ...]
    pendant: tuple[bool, ...]

    @model_validator(mode="after")
    def _non_incident(self) -> Matching:
        seen: set[int] = set()
        for u, v in self.edges:
            if u in seen or v in seen or u == v:
                raise ValueError(f"edges {self.edges} are not pairwise non-incident")
            seen.update((u, v))
        return self

    @classmethod
    def from_edges(cls, g: Graph, edges: Iterable[tuple[int, int]]) -> Matching:
        ordered = tuple(sorted({(min(u, v), max(u, v)) for u, v in edges}))
        pendant = tuple(g.degree(u) == 1 or g.degree(v) == 1 for u, v in ordered)
        return cls(edges=ordered, pendant=pendant)

    @computed_field
    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for edge in self.edges for v in edge)

    @property
    def all_pendant(self) -> bool:
        return all(self.pendant)

    def is_valid_for(self, g: Graph) -> bool:
        return all(0 <= u < g.n and 0 <= v < g.n and g.has_edge(u, v) for u, v in self.edges)


class _Blossom:
    """Augmenting-path search with blossom contraction via base labels.

    Each search grows an alternating tree from one exposed root; an odd cycle
    closing between two even vertices is shrunk by relabelling every vertex
    in it with the cycle's base.
    """

    def __init__(self, g: Graph) -> None:
        self.n = g.n
        self.adj = [sorted(g.neighbors(v)) for v in range(g.n)]
        self.mate = [-1] * g.n
        self.parent = [-1] * g.n
        self.base = list(range(g.n))
        self.used = [False] * g.n
        self.in_blossom = [False] * g.n

    def solve(self) -> list[int]:
        for v in range(self.n):
            if self.mate[v] != -1:
                continue
            end = self._find_augmenting_path(v)
            while end != -1:
                prev = self.parent[end]
                nxt = self.mate[prev]
                self.mate[end] = prev
                self.mate[prev] = end
                end = nxt
        return self.mate

    def _lowest_common_base(self, a: int, b: int) -> int:
        on_path = [False] * self.n
        while True:
            a = self.base[a]
            on_path[a] = True
            if self.mate[a] == -1:
                break
            a = self.parent[self.mate[a]]
        while True:
            b = self.base[b]
            if on_path[b]:
                return b
            b = self.parent[self.mate[b]]

    def _mark_path(self, v: int, stop: int, child: int) -> None:
        while self.base[v] != stop:
            self.in_blossom[self.base[v]] = True
            self.in_blossom[self.base[self.mate[v]]] = True
            self.parent[v] = child
            child = self.mate[v]
            v = self.parent[self.mate[v]]

    def _find_augmenting_path(self, root: int) -> int:
        n = self.n
        self.used = [False] * n
        self.parent = [-1] * n
        self.base = list(range(n))
        self.used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in self.adj[v]:
                if self.base[v] == self.base[to] or self.mate[v] == to:
                    continue
                if to == root or (self.mate[to] != -1 and self.parent[self.mate[to]] != -1):
                    # `to` is even: contract the odd cycle through v and to
                    current = self._lowest_common_base(v, to)
                    self.in_blossom = [False] * n
                    self._mark_path(v, current, to)
                    self._mark_path(to, current, v)
                    for i in range(n):
                        if self.in_blossom[self.base[i]]:
                            self.base[i] = current
                            if not self.used[i]:
                                self.used[i] = True
                                queue.append(i)
                elif self.parent[to] == -1:
                    self.parent[to] = v
                    if self.mate[to] == -1:
                        return to
                    self.used[self.mate[to]] = True
                    queue.append(self.mate[to])
        return -1


def maximum_matching(g: Graph) -> Matching:
    mate = _Blossom(g).solve()
    return Matching.from_edges(g, ((v, w) for v, w in enumerate(mate) if v < w))


def mu(g: Graph) -> int:
    return maximum_matching(g).size


def has_perfect_matching(g: Graph) -> bool:
    return 2 * mu(g) == g.n
