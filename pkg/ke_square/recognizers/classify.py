"""Full per-graph classification against the four equivalent conditions for G^2 to be König-Egerváry.

    (i)   G^2 is König-Egerváry
    (ii)  G is square-stable and König-Egerváry
    (iii) G has a perfect matching consisting of pendant edges
    (iv)  G is very well-covered with exactly alpha(G) pendant edges
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, computed_field

from ke_square.core.graph import Graph
from ke_square.core.graph6 import MAX_ORDER, to_graph6
from ke_square.invariants.matching import Matching
from ke_square.invariants.stable import StableSet
from ke_square.recognizers.koenig import KEDecomposition, is_koenig_egervary, ke_decomposition
from ke_square.recognizers.profile import profile_of
from ke_square.recognizers.square_stable import distance3_stability_system, is_square_stable
from ke_square.recognizers.well_covered import (
    is_very_well_covered,
    is_well_covered,
    pendant_perfect_matching,
)

Theorem4Status = Literal["consistent", "inconsistent", "not-applicable"]


class Witnesses(BaseModel):
    model_config = ConfigDict(frozen=True)

    stability_system: StableSet
    distance3_system: StableSet | None = None
    ke_decomposition: KEDecomposition | None = None


class ClassificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    graph6: str
    n: int
    m: int
    connected: bool
    alpha: int
    mu: int
    alpha_sq: int
    mu_sq: int
    ke: bool
    ke_square: bool
    square_stable: bool
    perfect_matching: bool
    pendant_pm: Matching | None
    well_covered: bool
    very_well_covered: bool
    leaf_count: int
    pendant_edge_count: int
    theorem4: Theorem4Status
    witnesses: Witnesses

    @property
    def predicates(self) -> tuple[bool, bool, bool, bool]:
        """Truth values of conditions (i)-(iv), in order."""
        return (
            self.ke_square,
            self.square_stable and self.ke,
            self.pendant_pm is not None,
            self.very_well_covered and self.pendant_edge_count == self.alpha,
        )

    @computed_field
    @property
    def theorem4_consistent(self) -> bool | None:
        """None when the equivalence does not apply (disconnected or n < 2)."""
        if self.theorem4 == "not-applicable":
            return None
        return self.theorem4 == "consistent"


def classify(g: Graph) -> ClassificationReport:
    profile = profile_of(g)
    g2 = profile.square
    pendant_edges = sum(1 for u, v in g.edges() if g.degree(u) == 1 or g.degree(v) == 1)
    report = ClassificationReport(
        graph6=to_graph6(g).decode() if g.n <= MAX_ORDER else "",
        n=g.n,
        m=g.edge_count,
        connected=profile.connected,
        alpha=profile.alpha,
        mu=profile.mu,
        alpha_sq=g2.alpha,
        mu_sq=g2.mu,
        ke=is_koenig_egervary(g),
        ke_square=is_koenig_egervary(g2.graph),
        square_stable=is_square_stable(g),
        perfect_matching=2 * profile.mu == g.n,
        pendant_pm=pendant_perfect_matching(g),
        well_covered=is_well_covered(g),
        very_well_covered=is_very_well_covered(g),
        leaf_count=len(profile.leaves),
        pendant_edge_count=pendant_edges,
        theorem4="not-applicable",
        witnesses=Witnesses(
            stability_system=profile.stability_system,
            distance3_system=distance3_stability_system(g),
            ke_decomposition=ke_decomposition(g),
        ),
    )
    if not profile.connected or g.n < 2:
        return report
    status: Theorem4Status = "consistent" if len(set(report.predicates)) == 1 else "inconsistent"
    return report.model_copy(update={"theorem4": status})
