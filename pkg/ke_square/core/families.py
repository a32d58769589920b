"""Named graph families: P_n, C_n, K_n, K_{1,n} and the edgeless graph."""

from __future__ import annotations

from ke_square.core.graph import Graph, from_edge_list, is_connected


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return from_edge_list(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def is_cycle(g: Graph) -> bool:
    """True if g is a chordless cycle C_n (connected and 2-regular)."""
    return g.n >= 3 and all(g.degree(v) == 2 for v in range(g.n)) and is_connected(g)
