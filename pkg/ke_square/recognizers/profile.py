"""Per-graph memo of the invariants the recognizers share."""

from __future__ import annotations

from functools import cached_property, lru_cache

from ke_square.core.graph import DistanceMatrix, Graph, distances, is_connected, leaves, square
from ke_square.invariants.matching import Matching, maximum_matching
from ke_square.invariants.stable import StableSet, alpha, maximal_stable_masks, maximum_stable_set


class GraphProfile:
    """Lazily computed invariants of one graph, each computed at most once.

    Every recognizer goes through `profile_of`, so classify and the harness
    checks never recompute alpha or mu for a graph they have already seen.
    """

    def __init__(self, graph: Graph) -> None:
        self.graph = graph

    @cached_property
    def square(self) -> GraphProfile:
        return profile_of(square(self.graph))

    @cached_property
    def alpha(self) -> int:
        return alpha(self.graph)

    @cached_property
    def matching(self) -> Matching:
        return maximum_matching(self.graph)

    @property
    def mu(self) -> int:
        return self.matching.size

    @cached_property
    def stability_system(self) -> StableSet:
        return maximum_stable_set(self.graph)

    @cached_property
    def distances(self) -> DistanceMatrix:
        return distances(self.graph)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.graph)

    @cached_property
    def leaves(self) -> frozenset[int]:
        return leaves(self.graph)

    @cached_property
    def maximal_set_masks(self) -> tuple[int, ...]:
        return tuple(maximal_stable_masks(self.graph))

    @cached_property
    def maximal_set_sizes(self) -> frozenset[int]:
        return frozenset(mask.bit_count() for mask in self.maximal_set_masks)


@lru_cache(maxsize=2048)
def profile_of(graph: Graph) -> GraphProfile:
    return GraphProfile(graph)
