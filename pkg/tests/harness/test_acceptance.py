"""Long exhaustive sweeps. Deselected by default; run with `pytest -m slow`."""

from __future__ import annotations

import pytest

from ke_square.harness.corpus import CorpusSpec
from ke_square.harness.verify import run_checks

pytestmark = pytest.mark.slow

CONNECTED_2_TO_6 = 1 + 4 + 38 + 728 + 26704
TREES_2_TO_9 = 1 + 3 + 16 + 125 + 1296 + 16807 + 262144 + 4782969


def test_connected_graphs_up_to_six():
    spec = CorpusSpec(kind="exhaustive-connected", n_min=2, n_max=6)
    reports = run_checks(
        ["theorem_main", "lemma", "proposition", "necessity", "chain", "round_trip"], spec, jobs=4
    )
    for report in reports:
        assert report.passed, report.violations
        assert report.graphs_tested == CONNECTED_2_TO_6
    necessity = next(r for r in reports if r.check_name == "necessity")
    assert necessity.counters["non_converse"] > 0


def test_every_tree_up_to_nine():
    spec = CorpusSpec(kind="exhaustive-trees", n_min=2, n_max=9)
    (report,) = run_checks(["tree_corollary"], spec, jobs=4)
    assert report.passed
    assert report.graphs_tested == TREES_2_TO_9


def test_random_trees():
    spec = CorpusSpec(kind="random-trees", n_max=16, sample_count=100_000, seed=42)
    (report,) = run_checks(["tree_corollary"], spec, jobs=4)
    assert report.passed
    assert report.graphs_tested == 100_000


@pytest.mark.parametrize(("n_max", "count"), [(10, 10_000), (12, 10_000)])
def test_oracles_on_random_graphs(n_max, count):
    spec = CorpusSpec(kind="random-graphs", n_min=2, n_max=n_max, sample_count=count, seed=1)
    (report,) = run_checks(["oracles"], spec, jobs=4)
    assert report.passed
    assert report.counters["brute_forced"] == count


def test_alpha_tree_on_every_tree_up_to_nine():
    spec = CorpusSpec(kind="exhaustive-trees", n_min=2, n_max=9)
    (report,) = run_checks(["oracles"], spec, jobs=4)
    assert report.passed
    assert report.counters["trees"] == TREES_2_TO_9
