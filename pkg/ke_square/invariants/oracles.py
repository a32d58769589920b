"""Exhaustive reference solvers used to falsify the fast ones. Exponential; small graphs only."""

from __future__ import annotations

from ke_square.core.graph import Graph


def brute_force_mu(g: Graph) -> int:
    """Largest matching by include/exclude search over every edge."""
    edges = g.edges()

    def best_from(k: int, used: int) -> int:
        if k == len(edges):
            return 0
        u, v = edges[k]
        skip = best_from(k + 1, used)
        if used >> u & 1 or used >> v & 1:
            return skip
        return max(skip, 1 + best_from(k + 1, used | 1 << u | 1 << v))

    return best_from(0, 0)


def brute_force_alpha(g: Graph) -> int:
    """Largest independent vertex subset over all 2^n subsets."""
    best = 0
    for subset in range(1 << g.n):
        size = subset.bit_count()
        if size <= best:
            continue
        if all(not (subset >> v & 1 and g.masks[v] & subset) for v in range(g.n)):
            best = size
    return best
