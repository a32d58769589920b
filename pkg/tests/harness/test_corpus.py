from __future__ import annotations

import itertools

import pytest
from pydantic import ValidationError

from ke_square.core.families import star_graph
from ke_square.core.graph import from_edge_list, is_connected, is_tree
from ke_square.core.graph6 import parse_graph6, to_graph6
from ke_square.errors import CorpusRangeError, Graph6Error
from ke_square.harness.corpus import (
    CorpusSpec,
    enumerate_connected,
    enumerate_trees,
    fixtures,
    iter_corpus,
    prufer_decode,
    random_graphs,
    random_trees,
)
from tests.oracle import all_graphs


class TestEnumerateConnected:
    @pytest.mark.parametrize(("n", "count"), [(2, 1), (3, 4), (4, 38), (5, 728), (6, 26704)])
    def test_labeled_counts(self, n, count):
        assert sum(1 for _ in enumerate_connected(n)) == count

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_matches_brute_force_filter(self, n):
        expected = {g for g in all_graphs(n) if is_connected(g)}
        found = list(enumerate_connected(n))
        assert len(found) == len(set(found))
        assert set(found) == expected

    def test_k2(self):
        assert list(enumerate_connected(2)) == [from_edge_list(2, [(0, 1)])]

    @pytest.mark.parametrize("n", [1, 8])
    def test_out_of_range(self, n):
        with pytest.raises(CorpusRangeError, match="graph6-file"):
            next(enumerate_connected(n))


class TestTrees:
    @pytest.mark.parametrize("n", range(2, 8))
    def test_cayley_counts(self, n):
        trees = list(enumerate_trees(n))
        assert len(trees) == n ** (n - 2)
        assert len(set(trees)) == len(trees)
        assert all(is_tree(t) for t in trees)

    def test_decode_star(self):
        assert prufer_decode([0, 0], 4) == star_graph(3)

    def test_decode_path(self):
        assert prufer_decode([1, 2], 4) == from_edge_list(4, [(0, 1), (1, 2), (2, 3)])

    def test_decode_rejects_bad_sequences(self):
        with pytest.raises(ValueError):
            prufer_decode([0], 4)
        with pytest.raises(ValueError):
            prufer_decode([0, 4], 4)

    @pytest.mark.parametrize("n", [1, 10])
    def test_out_of_range(self, n):
        with pytest.raises(CorpusRangeError):
            next(enumerate_trees(n))


class TestRandom:
    def test_two_vertex_trees(self):
        assert list(random_trees(2, 5, seed=123)) == [from_edge_list(2, [(0, 1)])] * 5

    def test_trees_are_trees(self):
        trees = list(random_trees(16, 1000, seed=42))
        assert len(trees) == 1000
        assert all(is_connected(t) and t.edge_count == t.n - 1 for t in trees)
        assert all(2 <= t.n <= 16 for t in trees)

    def test_same_seed_same_stream(self):
        assert list(random_trees(12, 50, seed=7)) == list(random_trees(12, 50, seed=7))
        assert list(random_graphs(3, 9, 50, seed=7)) == list(random_graphs(3, 9, 50, seed=7))

    def test_different_seed_different_stream(self):
        assert list(random_trees(12, 50, seed=7)) != list(random_trees(12, 50, seed=8))

    def test_negative_seed_is_accepted(self):
        assert len(list(random_trees(6, 3, seed=-1))) == 3

    def test_random_graph_sizes(self):
        graphs = list(random_graphs(4, 10, 200, seed=1))
        assert all(4 <= g.n <= 10 for g in graphs)


class TestCorpusSpec:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"n_min": 1},
            {"n_min": 5, "n_max": 4},
            {"kind": "random-trees", "sample_count": 0},
            {"kind": "graph6-file"},
            {"seed": 2**64},
        ],
    )
    def test_rejects(self, kwargs):
        with pytest.raises(ValidationError):
            CorpusSpec(**kwargs)

    def test_exhaustive_range(self):
        spec = CorpusSpec(kind="exhaustive-connected", n_min=2, n_max=4)
        assert sum(1 for _ in iter_corpus(spec)) == 1 + 4 + 38

    def test_trees_range(self):
        spec = CorpusSpec(kind="exhaustive-trees", n_min=3, n_max=5)
        assert sum(1 for _ in iter_corpus(spec)) == 3 + 16 + 125

    def test_random_trees_honour_n_min(self):
        spec = CorpusSpec(kind="random-trees", n_min=5, n_max=7, sample_count=40, seed=3)
        assert all(5 <= t.n <= 7 for t in iter_corpus(spec))

    def test_fixtures(self):
        assert list(iter_corpus(CorpusSpec(kind="fixtures"))) == list(fixtures().values())

    def test_graph6_file(self, tmp_path):
        path = tmp_path / "graphs.g6"
        path.write_text(">>graph6<<Ch\n# comment\n\nA_\n")
        graphs = list(iter_corpus(CorpusSpec(kind="graph6-file", path=str(path))))
        assert [to_graph6(g) for g in graphs] == [b"Ch", b"A_"]

    def test_graph6_file_errors_name_the_line(self, tmp_path):
        path = tmp_path / "graphs.g6"
        path.write_text("Ch\nC!\n")
        with pytest.raises(Graph6Error) as exc_info:
            list(iter_corpus(CorpusSpec(kind="graph6-file", path=str(path))))
        assert exc_info.value.line == 2


class TestFixtures:
    def test_shapes(self):
        graphs = fixtures()
        assert list(graphs) == ["fig1", "fig3", "fig4"]
        assert (graphs["fig1"].n, graphs["fig1"].edge_count) == (5, 5)
        assert (graphs["fig3"].n, graphs["fig3"].edge_count) == (9, 11)
        assert (graphs["fig4"].n, graphs["fig4"].edge_count) == (8, 9)
        assert all(is_connected(g) for g in graphs.values())

    def test_fig3_caption_matching(self):
        g = fixtures()["fig3"]
        assert all(g.has_edge(u, v) for u, v in [(1, 5), (3, 6), (4, 8)])


def test_every_generator_round_trips_graph6():
    streams = [
        enumerate_connected(4),
        enumerate_trees(5),
        random_trees(16, 100, seed=9),
        random_graphs(2, 12, 100, seed=9),
        iter(fixtures().values()),
    ]
    for g in itertools.chain.from_iterable(streams):
        assert parse_graph6(to_graph6(g)) == g
