from __future__ import annotations

import json

import pytest

from ke_square.core.families import complete_graph, cycle_graph, path_graph, star_graph
from ke_square.core.graph import from_edge_list
from ke_square.harness.corpus import enumerate_connected, fixtures
from ke_square.recognizers.classify import classify

K2 = from_edge_list(2, [(0, 1)])


def test_p4():
    report = classify(path_graph(4))
    assert report.graph6 == "Ch"
    assert (report.alpha, report.mu, report.alpha_sq, report.mu_sq) == (2, 2, 2, 2)
    assert report.ke and report.ke_square and report.square_stable
    assert report.pendant_pm is not None
    assert report.pendant_pm.edges == ((0, 1), (2, 3))
    assert report.very_well_covered
    assert report.leaf_count == 2
    assert report.predicates == (True, True, True, True)
    assert report.theorem4 == "consistent"
    assert report.theorem4_consistent is True


@pytest.mark.parametrize("g", [cycle_graph(6), cycle_graph(5), star_graph(3), complete_graph(3)])
def test_all_conditions_false(g):
    report = classify(g)
    assert report.predicates == (False, False, False, False)
    assert report.theorem4 == "consistent"


def test_c6_values():
    report = classify(cycle_graph(6))
    assert (report.alpha, report.mu, report.alpha_sq, report.mu_sq) == (3, 3, 2, 3)
    assert report.ke
    assert not report.ke_square


def test_k2_counts_pendant_edges():
    report = classify(K2)
    assert report.leaf_count == 2
    assert report.pendant_edge_count == 1
    assert report.predicates == (True, True, True, True)
    assert report.theorem4 == "consistent"


def test_not_applicable_when_disconnected():
    report = classify(from_edge_list(4, [(0, 1), (2, 3)]))
    assert not report.connected
    assert report.theorem4 == "not-applicable"
    assert report.theorem4_consistent is None


class TestFixtureGoldens:
    def test_fig1(self):
        report = classify(fixtures()["fig1"])
        assert (report.alpha, report.mu, report.mu_sq) == (2, 2, 2)
        assert not report.ke
        assert not report.ke_square
        assert report.square_stable

    def test_fig3(self):
        report = classify(fixtures()["fig3"])
        assert report.alpha == report.alpha_sq == 3
        assert report.mu == 4
        assert report.square_stable
        assert not report.ke

    def test_fig4(self):
        report = classify(fixtures()["fig4"])
        assert report.square_stable
        assert report.alpha == report.alpha_sq == 3
        assert report.mu == 3
        assert report.mu_sq == 4
        system = report.witnesses.distance3_system
        assert system is not None
        assert system.vertices == (3, 5, 6)

    @pytest.mark.parametrize("name", ["fig1", "fig3", "fig4"])
    def test_consistent(self, name):
        assert classify(fixtures()[name]).theorem4 == "consistent"


def test_structured_record_round_trips_through_json():
    decoded = json.loads(classify(path_graph(4)).model_dump_json())
    assert decoded["pendant_pm"]["edges"] == [[0, 1], [2, 3]]
    assert decoded["witnesses"]["stability_system"]["vertices"] == [0, 2]
    assert decoded["witnesses"]["distance3_system"]["vertices"] == [0, 3]
    assert decoded["witnesses"]["ke_decomposition"]["s"]["vertices"] == [0, 2]
    assert decoded["witnesses"]["ke_decomposition"]["h_vertices"] == [1, 3]
    assert decoded["theorem4_consistent"] is True


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_equivalence_on_every_small_connected_graph(n):
    for g in enumerate_connected(n):
        assert classify(g).theorem4 == "consistent", g.edges()
