from __future__ import annotations

import networkx as nx
import pytest

from ke_square.core.families import complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from ke_square.core.graph import from_edge_list, square
from ke_square.invariants.matching import Matching, has_perfect_matching, maximum_matching, mu
from ke_square.invariants.oracles import brute_force_mu
from ke_square.invariants.stable import alpha
from tests.oracle import all_graphs, nx_mu


@pytest.mark.parametrize(
    ("g", "expected"),
    [
        (empty_graph(0), 0),
        (empty_graph(3), 0),
        (from_edge_list(2, [(0, 1)]), 1),
        (path_graph(4), 2),
        (cycle_graph(5), 2),
        (cycle_graph(6), 3),
        (star_graph(3), 1),
        (complete_graph(4), 2),
        (complete_graph(7), 3),
    ],
)
def test_known_values(g, expected):
    assert mu(g) == expected
    assert brute_force_mu(g) == expected


def test_odd_cycles_at_both_ends():
    g = from_edge_list(
        8, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)]
    )
    assert mu(g) == 4
    assert has_perfect_matching(g)


def test_witness_is_a_matching_of_the_graph():
    g = cycle_graph(7)
    m = maximum_matching(g)
    assert m.size == 3
    assert m.is_valid_for(g)
    assert len(m.covered) == 6


def test_pendant_flags():
    m = maximum_matching(path_graph(4))
    assert m.edges == ((0, 1), (2, 3))
    assert m.all_pendant
    assert m.model_dump(mode="json") == {
        "size": 2,
        "edges": [[0, 1], [2, 3]],
        "pendant": [True, True],
    }


def test_rejects_incident_edges():
    with pytest.raises(ValueError):
        Matching(edges=((0, 1), (1, 2)), pendant=(False, False))


@pytest.mark.parametrize("g", all_graphs(5)[::3] + all_graphs(4))
def test_agrees_with_oracles(g):
    assert mu(g) == nx_mu(g) == brute_force_mu(g)


@pytest.mark.parametrize("seed", range(30))
def test_random_graphs_agree_with_networkx(seed):
    h = nx.gnp_random_graph(14, 0.25, seed=seed)
    g = from_edge_list(14, h.edges())
    m = maximum_matching(g)
    assert m.is_valid_for(g)
    assert m.size == nx_mu(g)


@pytest.mark.parametrize("g", all_graphs(5)[::3])
def test_squaring_bounds(g):
    g2 = square(g)
    assert mu(g) <= mu(g2)
    assert alpha(g2) <= alpha(g)
    assert alpha(g) + mu(g) <= g.n
