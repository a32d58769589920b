"""Well-covered structure and perfect matchings made of pendant edges."""

from __future__ import annotations

from ke_square.core.graph import Graph
from ke_square.invariants.matching import Matching
from ke_square.recognizers.profile import profile_of


def pendant_perfect_matching(g: Graph) -> Matching | None:
    """A perfect matching of pendant edges, if one exists.

    A leaf can only be matched along its pendant edge, so such a matching
    exists iff the forced leaf edges are pairwise disjoint and cover V.
    Independent of the blossom solver.
    """
    forced = {(min(v, u), max(v, u)) for v in profile_of(g).leaves for u in g.neighbors(v)}
    covered = {v for edge in forced for v in edge}
    if len(covered) != 2 * len(forced) or len(covered) != g.n:
        return None
    return Matching.from_edges(g, forced)


def is_well_covered(g: Graph) -> bool:
    """No isolated vertices and every maximal stable set is maximum.

    The empty graph and K1 are not well-covered.
    """
    if g.n == 0 or any(g.degree(v) == 0 for v in range(g.n)):
        return False
    profile = profile_of(g)
    return profile.maximal_set_sizes == {profile.alpha}


def is_very_well_covered(g: Graph) -> bool:
    return is_well_covered(g) and g.n == 2 * profile_of(g).alpha
