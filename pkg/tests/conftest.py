from __future__ import annotations

from collections.abc import Callable

import pytest

from ke_square.core.graph import Graph, from_edge_list
from ke_square.recognizers.profile import profile_of


@pytest.fixture(autouse=True)
def _fresh_profiles():
    profile_of.cache_clear()
    yield


@pytest.fixture
def graph() -> Callable[..., Graph]:
    """Build a graph from `n` and (u, v) pairs."""

    def build(n: int, *edges: tuple[int, int]) -> Graph:
        return from_edge_list(n, edges)

    return build
