"""König-Egerváry recognition and the G = S*H decomposition witness."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from ke_square.core.graph import Graph, iter_bits, mask_of
from ke_square.invariants.matching import Matching
from ke_square.invariants.stable import StableSet
from ke_square.recognizers.profile import profile_of


class KEDecomposition(BaseModel):
    """G = S*H: S a maximum stable set, H the rest, and a matching of V(H) into S."""

    model_config = ConfigDict(frozen=True)

    s: StableSet
    h_vertices: tuple[int, ...]
    matching: Matching

    def is_valid_for(self, g: Graph) -> bool:
        s_mask = self.s.mask
        h_mask = mask_of(self.h_vertices)
        return (
            self.s.is_stable_in(g)
            and s_mask | h_mask == g.all_mask
            and not s_mask & h_mask
            and self.s.size >= len(self.h_vertices)
            and self.matching.size == len(self.h_vertices)
            and self.matching.is_valid_for(g)
            and all((s_mask >> u & 1) != (s_mask >> v & 1) for u, v in self.matching.edges)
        )


def is_koenig_egervary(g: Graph) -> bool:
    profile = profile_of(g)
    return profile.alpha + profile.mu == g.n


def _saturate(g: Graph, s_mask: int, h_vertices: tuple[int, ...]) -> dict[int, int] | None:
    """Match every vertex of H to a distinct neighbour in S, or None if impossible.

    Greedy pass over S in increasing order, then augmenting paths for the rest.
    """
    h_mask = mask_of(h_vertices)
    owner: dict[int, int] = {}  # s -> h
    partner: dict[int, int] = {}  # h -> s
    for s in iter_bits(s_mask):
        for h in iter_bits(g.masks[s] & h_mask):
            if h not in partner:
                owner[s] = h
                partner[h] = s
                break

    def augment(h: int, visited: set[int]) -> bool:
        for s in iter_bits(g.masks[h] & s_mask):
            if s in visited:
                continue
            visited.add(s)
            if s not in owner or augment(owner[s], visited):
                owner[s] = h
                partner[h] = s
                return True
        return False

    for h in h_vertices:
        if h not in partner and not augment(h, set()):
            return None
    return partner


def ke_decomposition(g: Graph) -> KEDecomposition | None:
    """The decomposition witness, present exactly when g is König-Egerváry.

    The lexicographically smallest maximum stable set is tried first; other
    maximum stable sets are tried in lexicographic order if it fails.
    """
    if not is_koenig_egervary(g):
        return None
    profile = profile_of(g)
    first = profile.stability_system
    others = sorted(
        tuple(iter_bits(mask))
        for mask in profile.maximal_set_masks
        if mask.bit_count() == profile.alpha and mask != first.mask
    )
    for vertices in (first.vertices, *others):
        s_mask = mask_of(vertices)
        h_vertices = tuple(v for v in range(g.n) if not s_mask >> v & 1)
        partner = _saturate(g, s_mask, h_vertices)
        if partner is not None:
            return KEDecomposition(
                s=StableSet(vertices=vertices, maximal=True, maximum=True),
                h_vertices=h_vertices,
                matching=Matching.from_edges(g, partner.items()),
            )
    return None
