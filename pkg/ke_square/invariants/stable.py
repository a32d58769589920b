"""Stable (independent) sets: exact alpha, witnesses and maximal-set enumeration."""

from __future__ import annotations

from collections.abc import Iterator, Sequence

from pydantic import BaseModel, ConfigDict, computed_field

from ke_square.core.graph import Graph, is_tree, iter_bits, mask_of
from ke_square.errors import NotATreeError


class StableSet(BaseModel):
    """An independent vertex set, optionally known to be maximal or maximum."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...]
    maximal: bool = False
    maximum: bool = False

    @computed_field
    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def is_stable_in(self, g: Graph) -> bool:
        mask = self.mask
        return all(not g.masks[v] & mask for v in self.vertices)

    def is_maximal_in(self, g: Graph) -> bool:
        mask = self.mask
        return self.is_stable_in(g) and all(
            g.masks[v] & mask for v in range(g.n) if not mask >> v & 1
        )


def _clique_cover_bound(masks: Sequence[int], cand: int) -> int:
    """Number of cliques in a greedy clique cover of cand; bounds alpha from above."""
    count = 0
    while cand:
        v = (cand & -cand).bit_length() - 1
        cand &= ~(1 << v)
        extend = cand & masks[v]
        while extend:
            u = (extend & -extend).bit_length() - 1
            cand &= ~(1 << u)
            extend &= masks[u]
        count += 1
    return count


def stability_number(masks: Sequence[int], cand: int) -> int:
    """alpha of the subgraph induced by the vertex mask `cand`.

    Vertices of degree <= 1 are taken greedily (some maximum stable set
    contains them); otherwise the search branches on a maximum-degree vertex,
    pruned by the greedy clique-cover bound.
    """
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        while True:
            if not cand:
                best = max(best, size)
                return
            forced = -1
            hub, hub_degree = -1, -1
            for v in iter_bits(cand):
                degree = (masks[v] & cand).bit_count()
                if degree <= 1:
                    forced = v
                    break
                if degree > hub_degree:
                    hub, hub_degree = v, degree
            if forced == -1:
                break
            cand &= ~(masks[forced] | 1 << forced)
            size += 1
        if size + _clique_cover_bound(masks, cand) <= best:
            return
        expand(cand & ~(masks[hub] | 1 << hub), size + 1)
        expand(cand & ~(1 << hub), size)

    expand(cand, 0)
    return best


def alpha(g: Graph) -> int:
    return stability_number(g.masks, g.all_mask)


def maximum_stable_set(g: Graph) -> StableSet:
    """The lexicographically smallest maximum stable set."""
    need = alpha(g)
    cand = g.all_mask
    chosen = []
    for v in range(g.n):
        if need == 0:
            break
        if not cand >> v & 1:
            continue
        cand &= ~(1 << v)
        rest = cand & ~g.masks[v]
        if 1 + stability_number(g.masks, rest) == need:
            chosen.append(v)
            need -= 1
            cand = rest
    return StableSet(vertices=tuple(chosen), maximal=True, maximum=True)


def alpha_tree(g: Graph) -> int:
    """alpha of a tree by rooted dynamic programming."""
    if not is_tree(g):
        raise NotATreeError(f"graph with n={g.n}, m={g.edge_count} is not a tree")
    parent = [-1] * g.n
    order = [0]
    seen = 1
    for v in order:
        for u in iter_bits(g.masks[v] & ~seen):
            parent[u] = v
            seen |= 1 << u
            order.append(u)

    take = [1] * g.n
    skip = [0] * g.n
    for v in reversed(order):
        p = parent[v]
        if p != -1:
            take[p] += skip[v]
            skip[p] += max(take[v], skip[v])
    return max(take[0], skip[0])


def maximal_stable_masks(g: Graph) -> Iterator[int]:
    """Bron-Kerbosch with pivoting on the complement: maximal stable sets as masks."""
    full = g.all_mask
    non_neighbors = [full & ~m & ~(1 << v) for v, m in enumerate(g.masks)]

    def expand(chosen: int, cand: int, excluded: int) -> Iterator[int]:
        if not cand and not excluded:
            yield chosen
            return
        pivot = max(iter_bits(cand | excluded), key=lambda u: (cand & non_neighbors[u]).bit_count())
        for v in iter_bits(cand & ~non_neighbors[pivot]):
            yield from expand(chosen | 1 << v, cand & non_neighbors[v], excluded & non_neighbors[v])
            cand &= ~(1 << v)
            excluded |= 1 << v

    yield from expand(0, full, 0)


def maximal_stable_sets(g: Graph) -> Iterator[StableSet]:
    """Every maximal stable set exactly once, flagged maximum when its size is alpha."""
    target = alpha(g)
    for mask in maximal_stable_masks(g):
        vertices = tuple(iter_bits(mask))
        yield StableSet(vertices=vertices, maximal=True, maximum=len(vertices) == target)


def independent_domination_number(g: Graph) -> int:
    """i(G): the smallest maximal stable set."""
    return min(mask.bit_count() for mask in maximal_stable_masks(g))
