"""Domination, colouring and clique covers, and the invariant chain over G and G^2."""

from __future__ import annotations

from collections.abc import Sequence
from itertools import pairwise

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from ke_square.core.graph import Graph, complement, iter_bits, square
from ke_square.core.graph6 import MAX_ORDER, to_graph6
from ke_square.errors import ChainViolationError
from ke_square.invariants.stable import alpha, independent_domination_number


def domination_number(g: Graph) -> int:
    """gamma(G): size of a minimum dominating set, by iterative deepening.

    Some member of N[u] must be chosen for the lowest undominated vertex u,
    so each level branches over that closed neighbourhood only.
    """
    if g.n == 0:
        return 0
    full = g.all_mask
    closed = [m | 1 << v for v, m in enumerate(g.masks)]

    def dominated_with(covered: int, budget: int) -> bool:
        if covered == full:
            return True
        if budget == 0:
            return False
        missing = full & ~covered
        u = (missing & -missing).bit_length() - 1
        return any(dominated_with(covered | closed[w], budget - 1) for w in iter_bits(closed[u]))

    k = 1
    while not dominated_with(0, k):
        k += 1
    return k


def _colorable(masks: Sequence[int], order: Sequence[int], k: int) -> bool:
    classes: list[int] = []

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c, members in enumerate(classes):
            if not members & masks[v]:
                classes[c] = members | 1 << v
                if place(i + 1):
                    return True
                classes[c] = members
        # at most one new class per vertex
        if len(classes) < k:
            classes.append(1 << v)
            if place(i + 1):
                return True
            classes.pop()
        return False

    return place(0)


def chromatic_number(g: Graph, lower_bound: int = 1) -> int:
    """Exact chromatic number by iterative deepening on the colour count."""
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    k = max(1, lower_bound)
    while not _colorable(g.masks, order, k):
        k += 1
    return k


def clique_cover_number(g: Graph) -> int:
    """theta(G) = chi(complement of G); alpha(G) is a lower bound."""
    return chromatic_number(complement(g), lower_bound=alpha(g))


class InvariantBundle(BaseModel):
    """The six invariants of alpha(G^2) <= theta(G^2) <= gamma <= i <= alpha <= theta.

    Construction fails with ChainViolationError if the chain does not hold.
    """

    model_config = ConfigDict(frozen=True)

    graph6: str = ""
    alpha_g2: int
    theta_g2: int
    gamma: int
    i_dom: int = Field(serialization_alias="i")
    alpha: int
    theta: int

    @model_validator(mode="after")
    def _chain_holds(self) -> InvariantBundle:
        values = self.values
        if any(a > b for a, b in pairwise(values)):
            raise ChainViolationError(self.graph6, values)
        return self

    @property
    def values(self) -> tuple[int, int, int, int, int, int]:
        return (self.alpha_g2, self.theta_g2, self.gamma, self.i_dom, self.alpha, self.theta)

    @computed_field
    @property
    def equality_premise(self) -> bool:
        """alpha(G^2) = alpha(G) or theta(G^2) = theta(G)."""
        return self.alpha_g2 == self.alpha or self.theta_g2 == self.theta

    @computed_field
    @property
    def all_equal(self) -> bool:
        return len(set(self.values)) <= 1


def invariant_chain(g: Graph) -> InvariantBundle:
    g2 = square(g)
    return InvariantBundle(
        alpha_g2=alpha(g2),
        theta_g2=clique_cover_number(g2),
        gamma=domination_number(g),
        i_dom=independent_domination_number(g),
        alpha=alpha(g),
        theta=clique_cover_number(g),
        graph6=to_graph6(g).decode() if g.n <= MAX_ORDER else "",
    )
