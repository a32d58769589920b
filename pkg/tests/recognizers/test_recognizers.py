from __future__ import annotations

import pytest

from ke_square.core.families import complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from ke_square.core.graph import from_edge_list, square
from ke_square.harness.corpus import fixtures
from ke_square.recognizers.koenig import is_koenig_egervary, ke_decomposition
from ke_square.recognizers.profile import profile_of
from ke_square.recognizers.square_stable import (
    distance3_stability_system,
    is_distance3_stability_system,
    is_square_stable,
)
from ke_square.recognizers.well_covered import (
    is_very_well_covered,
    is_well_covered,
    pendant_perfect_matching,
)
from tests.oracle import all_graphs

K2 = from_edge_list(2, [(0, 1)])


class TestKoenigEgervary:
    @pytest.mark.parametrize(
        ("g", "expected"),
        [
            (K2, True),
            (path_graph(4), True),
            (star_graph(3), True),
            (cycle_graph(6), True),
            (cycle_graph(4), True),
            (cycle_graph(5), False),
            (complete_graph(3), False),
            (complete_graph(4), False),
            (empty_graph(3), True),
        ],
    )
    def test_known_graphs(self, g, expected):
        assert is_koenig_egervary(g) is expected

    def test_decomposition_of_p4(self):
        d = ke_decomposition(path_graph(4))
        assert d is not None
        assert d.s.vertices == (0, 2)
        assert d.h_vertices == (1, 3)
        assert d.matching.edges == ((0, 1), (2, 3))
        dumped = d.model_dump(mode="json")
        assert dumped["s"]["vertices"] == [0, 2]
        assert dumped["h_vertices"] == [1, 3]
        assert dumped["matching"]["edges"] == [[0, 1], [2, 3]]

    def test_no_decomposition_for_odd_cycle(self):
        assert ke_decomposition(cycle_graph(5)) is None

    @pytest.mark.parametrize("g", all_graphs(5)[::3])
    def test_decomposition_present_iff_ke(self, g):
        d = ke_decomposition(g)
        assert (d is not None) == is_koenig_egervary(g)
        if d is not None:
            assert d.is_valid_for(g)


class TestSquareStable:
    @pytest.mark.parametrize(
        ("g", "expected"),
        [
            (K2, True),
            (path_graph(4), True),
            (cycle_graph(5), False),
            (cycle_graph(6), False),
            (star_graph(3), False),
            (complete_graph(4), True),
        ],
    )
    def test_known_graphs(self, g, expected):
        assert is_square_stable(g) is expected

    def test_p4_system(self):
        system = distance3_stability_system(path_graph(4))
        assert system is not None
        assert system.vertices == (0, 3)

    def test_fig4_system(self):
        g = fixtures()["fig4"]
        system = distance3_stability_system(g)
        assert system is not None
        assert system.vertices == (3, 5, 6)
        assert is_distance3_stability_system(g, [3, 5, 7])
        assert not is_distance3_stability_system(g, [0, 5, 6])

    def test_none_when_not_square_stable(self):
        assert distance3_stability_system(cycle_graph(6)) is None

    @pytest.mark.parametrize("g", all_graphs(5)[::3])
    def test_system_present_iff_square_stable(self, g):
        assert (distance3_stability_system(g) is not None) == is_square_stable(g)


class TestWellCovered:
    def test_p4(self):
        g = path_graph(4)
        assert is_well_covered(g)
        assert is_very_well_covered(g)
        pm = pendant_perfect_matching(g)
        assert pm is not None
        assert pm.edges == ((0, 1), (2, 3))
        assert pm.all_pendant

    def test_star(self):
        g = star_graph(3)
        assert not is_well_covered(g)
        assert pendant_perfect_matching(g) is None

    def test_k2(self):
        assert is_very_well_covered(K2)
        assert pendant_perfect_matching(K2) is not None

    def test_complete_graph_is_well_covered_not_very(self):
        assert is_well_covered(complete_graph(3))
        assert not is_very_well_covered(complete_graph(3))

    def test_c6_not_well_covered(self):
        assert not is_well_covered(cycle_graph(6))

    @pytest.mark.parametrize("g", [empty_graph(0), empty_graph(1), empty_graph(3)])
    def test_isolated_vertices_exclude(self, g):
        assert not is_well_covered(g)
        assert not is_very_well_covered(g)

    def test_corona_of_triangle(self):
        # Each triangle vertex gets a pendant leaf.
        g = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
        assert is_very_well_covered(g)
        assert pendant_perfect_matching(g) is not None
        assert is_koenig_egervary(square(g))


class TestProfile:
    def test_profile_is_shared(self):
        g = path_graph(5)
        assert profile_of(g) is profile_of(path_graph(5))

    def test_square_profile(self):
        profile = profile_of(path_graph(4))
        assert profile.square.graph == square(path_graph(4))
        assert profile.square.alpha == 2
        assert profile.mu == 2
        assert profile.maximal_set_sizes == frozenset({2})
