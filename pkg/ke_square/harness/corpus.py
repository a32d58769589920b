"""Graph corpora for the verification harness.

Everything here is a generator: corpora are streamed, never materialized.
Random corpora draw from numpy's PCG64 generator seeded with the corpus seed
(reduced modulo 2**64), so a (kind, n range, count, seed) tuple always names
the same stream.
"""

from __future__ import annotations

import heapq
import itertools
import logging
import sys
from collections.abc import Iterator, Sequence
from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from ke_square.core.graph import Graph, from_edge_list, is_connected
from ke_square.core.graph6 import iter_graph6_lines
from ke_square.errors import CorpusRangeError

logger = logging.getLogger(__name__)

CONNECTED_MAX_ORDER = 7
TREES_MAX_ORDER = 9

CorpusKind = Literal[
    "exhaustive-connected",
    "exhaustive-trees",
    "random-trees",
    "random-graphs",
    "graph6-file",
    "fixtures",
]

RANDOM_KINDS = ("random-trees", "random-graphs")


class CorpusSpec(BaseModel):
    """Which graphs a verification run streams through its checks."""

    model_config = ConfigDict(frozen=True)

    kind: CorpusKind = "exhaustive-connected"
    n_min: int = 2
    n_max: int = 6
    sample_count: int = 1  # Random kinds only
    seed: int = 0  # 64-bit
    path: str | None = None  # graph6-file only; "-" reads stdin

    @model_validator(mode="after")
    def _check_ranges(self) -> CorpusSpec:
        if not 2 <= self.n_min <= self.n_max:
            raise ValueError(f"need 2 <= n_min <= n_max, got n_min={self.n_min}, n_max={self.n_max}")
        if self.kind in RANDOM_KINDS and self.sample_count < 1:
            raise ValueError("sample_count must be at least 1 for random corpora")
        if not -(2**63) <= self.seed < 2**64:
            raise ValueError(f"seed {self.seed} does not fit in 64 bits")
        if self.kind == "graph6-file" and not self.path:
            raise ValueError("graph6-file corpus needs a path")
        return self


def _generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed % 2**64))


def prufer_decode(sequence: Sequence[int], n: int) -> Graph:
    """The labeled tree on n >= 2 vertices encoded by a Prüfer sequence of length n - 2."""
    if n < 2 or len(sequence) != n - 2:
        raise ValueError(f"a Prüfer sequence for n={n} has length {n - 2}, got {len(sequence)}")
    degree = [1] * n
    for x in sequence:
        if not 0 <= x < n:
            raise ValueError(f"Prüfer entry {x} outside 0..{n - 1}")
        degree[x] += 1
    free = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(free)
    edges = []
    for x in sequence:
        leaf = heapq.heappop(free)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(free, x)
    edges.append((heapq.heappop(free), heapq.heappop(free)))
    return from_edge_list(n, edges)


def _check_connected_order(n: int) -> None:
    if not 2 <= n <= CONNECTED_MAX_ORDER:
        raise CorpusRangeError(
            f"exhaustive enumeration supports 2 <= n <= {CONNECTED_MAX_ORDER}, got {n}; "
            "generate larger corpora externally and use --corpus graph6-file"
        )


def _check_tree_order(n: int) -> None:
    if not 2 <= n <= TREES_MAX_ORDER:
        raise CorpusRangeError(
            f"exhaustive tree enumeration supports 2 <= n <= {TREES_MAX_ORDER}, got {n}; "
            "use --corpus random-trees or graph6-file"
        )


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Every labeled connected graph on n vertices, in order of its graph6 bit pattern."""
    _check_connected_order(n)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for code in range(1 << len(pairs)):
        masks = [0] * n
        bits = code
        while bits:
            low = bits & -bits
            i, j = pairs[low.bit_length() - 1]
            masks[i] |= 1 << j
            masks[j] |= 1 << i
            bits ^= low
        g = Graph(n, tuple(masks))
        if is_connected(g):
            yield g


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on n vertices (n^(n-2) of them), via Prüfer sequences."""
    _check_tree_order(n)
    for sequence in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(sequence, n)


def random_trees(n_max: int, count: int, seed: int, *, n_min: int = 2) -> Iterator[Graph]:
    """`count` trees with order uniform in [n_min, n_max] and a uniform Prüfer sequence."""
    rng = _generator(seed)
    for _ in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        sequence = rng.integers(0, n, size=n - 2).tolist()
        yield prufer_decode(sequence, n)


def random_graphs(n_min: int, n_max: int, count: int, seed: int) -> Iterator[Graph]:
    """`count` graphs G(n, 1/2) with n uniform in [n_min, n_max]; not necessarily connected."""
    rng = _generator(seed)
    for _ in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        pairs = [(i, j) for j in range(1, n) for i in range(j)]
        keep = rng.integers(0, 2, size=len(pairs))
        yield from_edge_list(n, [pair for pair, bit in zip(pairs, keep, strict=True) if bit])


# Figure fixtures. Vertex labelings:
#   fig1: a=0, b=1, c=2, d=3, e=4; triangle b-d-e, pendant path c-a-b.
#   fig3: bottom path 0-1-2-3-4 (w1=1, w2=3, u=4); v1=5 on 0,1; v2=6 on 2,3;
#         7 above u; v3=8 on 7 and u.
#   fig4: bottom row 0,1,2 (v=0, u=2); top row t1..t5 = 3..7.
FIXTURE_EDGES: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "fig1": (5, [(0, 1), (0, 2), (1, 3), (1, 4), (3, 4)]),
    "fig3": (
        9,
        [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (1, 5), (2, 6), (3, 6), (4, 7), (4, 8), (7, 8)],
    ),
    "fig4": (8, [(0, 1), (1, 2), (0, 3), (0, 4), (3, 4), (1, 5), (2, 6), (2, 7), (6, 7)]),
}


def fixtures() -> dict[str, Graph]:
    return {name: from_edge_list(n, edges) for name, (n, edges) in FIXTURE_EDGES.items()}


def _read_graph6_file(path: str) -> Iterator[Graph]:
    if path == "-":
        yield from iter_graph6_lines(sys.stdin.buffer)
        return
    with Path(path).open("rb") as f:
        yield from iter_graph6_lines(f)


def iter_corpus(spec: CorpusSpec) -> Iterator[Graph]:
    """Stream the graphs a corpus spec names."""
    logger.info("Streaming %s corpus (n=%d..%d)", spec.kind, spec.n_min, spec.n_max)
    if spec.kind == "exhaustive-connected":
        _check_connected_order(spec.n_max)
        for n in range(spec.n_min, spec.n_max + 1):
            yield from enumerate_connected(n)
    elif spec.kind == "exhaustive-trees":
        _check_tree_order(spec.n_max)
        for n in range(spec.n_min, spec.n_max + 1):
            yield from enumerate_trees(n)
    elif spec.kind == "random-trees":
        yield from random_trees(spec.n_max, spec.sample_count, spec.seed, n_min=spec.n_min)
    elif spec.kind == "random-graphs":
        yield from random_graphs(spec.n_min, spec.n_max, spec.sample_count, spec.seed)
    elif spec.kind == "graph6-file":
        assert spec.path is not None
        yield from _read_graph6_file(spec.path)
    else:
        yield from fixtures().values()
