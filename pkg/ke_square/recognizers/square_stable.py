"""Square-stable graphs: alpha(G) = alpha(G^2), and the distance-3 stability system."""

from __future__ import annotations

from collections.abc import Iterable

from ke_square.core.graph import Graph, iter_bits
from ke_square.invariants.stable import StableSet
from ke_square.recognizers.profile import profile_of


def is_square_stable(g: Graph) -> bool:
    profile = profile_of(g)
    return profile.alpha == profile.square.alpha


def is_distance3_stability_system(g: Graph, vertices: Iterable[int]) -> bool:
    """True if `vertices` is a maximum stable set with pairwise distances >= 3."""
    profile = profile_of(g)
    candidate = StableSet(vertices=tuple(sorted(vertices)))
    return (
        candidate.size == profile.alpha
        and candidate.is_stable_in(g)
        and profile.distances.all_at_least(candidate.vertices, 3)
    )


def distance3_stability_system(g: Graph) -> StableSet | None:
    """Lexicographically smallest maximum stable set whose members are pairwise at distance >= 3.

    Searched among the maximum stable sets of g using hop distances only, so
    its presence can be checked against is_square_stable independently.
    """
    profile = profile_of(g)
    found = [
        vertices
        for vertices in (
            tuple(iter_bits(mask))
            for mask in profile.maximal_set_masks
            if mask.bit_count() == profile.alpha
        )
        if profile.distances.all_at_least(vertices, 3)
    ]
    if not found:
        return None
    return StableSet(vertices=min(found), maximal=True, maximum=True)
