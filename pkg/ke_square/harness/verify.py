"""Run harness checks over a corpus stream and collect VerificationReports.

The corpus is cut into batches of `settings.batch_size` graphs. With more than
one job the batches go to a process pool, at most two per worker in flight, and
partial reports are merged back in submission order so certificates stay in
corpus order regardless of parallelism.
"""

from __future__ import annotations

import itertools
import logging
import time
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import Future, ProcessPoolExecutor

from ke_square.config import settings
from ke_square.core.graph import Graph
from ke_square.core.graph6 import parse_graph6, to_graph6
from ke_square.errors import UnknownCheckError
from ke_square.harness.checks import CHECKS
from ke_square.harness.corpus import CorpusSpec, iter_corpus
from ke_square.harness.report import VerificationReport, Violation

logger = logging.getLogger(__name__)

PartialReports = dict[str, VerificationReport]


def resolve_checks(names: Iterable[str] | None) -> tuple[str, ...]:
    """Validate check names; None, empty or "all" selects every registered check."""
    requested = [name.strip() for name in names or () if name.strip()]
    if not requested or requested == ["all"]:
        return tuple(CHECKS)
    unknown = [name for name in requested if name not in CHECKS]
    if unknown:
        raise UnknownCheckError(
            f"unknown check(s) {', '.join(unknown)}; choose from {', '.join(CHECKS)}"
        )
    return tuple(dict.fromkeys(requested))


def _empty_report(name: str, corpus: CorpusSpec | None = None) -> VerificationReport:
    return VerificationReport(
        check_name=name,
        seed=corpus.seed if corpus else 0,
        counters=dict.fromkeys(CHECKS[name].counters, 0),
        corpus=corpus,
    )


def _evaluate_batch(names: tuple[str, ...], graphs: Sequence[Graph], cap: int) -> PartialReports:
    reports = {name: _empty_report(name) for name in names}
    for g in graphs:
        for name in names:
            check = CHECKS[name]
            if not check.accepts(g):
                continue
            start = time.perf_counter()
            outcome = check.evaluate(g)
            report = reports[name]
            report.elapsed_ms += (time.perf_counter() - start) * 1000
            report.graphs_tested += 1
            for key, value in outcome.counters.items():
                report.counters[key] = report.counters.get(key, 0) + value
            for expected, observed in outcome.findings:
                report.record(
                    Violation(graph6=to_graph6(g).decode(), expected=expected, observed=observed),
                    cap,
                )
    return reports


def _iter_partials(
    names: tuple[str, ...], graphs: Iterable[Graph], jobs: int, cap: int
) -> Iterator[PartialReports]:
    batches = itertools.batched(graphs, settings.batch_size)
    if jobs <= 1:
        for batch in batches:
            yield _evaluate_batch(names, batch, cap)
        return

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending: deque[Future[PartialReports]] = deque()
        for batch in batches:
            pending.append(pool.submit(_evaluate_batch, names, batch, cap))
            if len(pending) >= 2 * jobs:
                yield pending.popleft().result()
        while pending:
            yield pending.popleft().result()


def run_checks(
    names: Iterable[str] | None, corpus: CorpusSpec, *, jobs: int | None = None
) -> list[VerificationReport]:
    """Stream the corpus once, evaluating every selected check on each graph."""
    selected = resolve_checks(names)
    workers = settings.jobs if jobs is None else max(1, jobs)
    cap = settings.certificate_cap
    logger.info("Running %s over %s corpus with %d job(s)", ", ".join(selected), corpus.kind, workers)

    totals = {name: _empty_report(name, corpus) for name in selected}
    for partial in _iter_partials(selected, iter_corpus(corpus), workers, cap):
        for name in selected:
            totals[name] = totals[name].merge(partial[name], cap)

    for name in selected:
        report = totals[name]
        if finalize := CHECKS[name].finalize:
            finalize(report)
        logger.info(
            "%s: %d graphs tested, %d violation(s) in %.1f ms",
            name,
            report.graphs_tested,
            report.violation_count,
            report.elapsed_ms,
        )
    return [totals[name] for name in selected]


def replay(name: str, graph6: str) -> list[Violation]:
    """Re-run one check on a certificate; non-empty iff the discrepancy reproduces."""
    (check_name,) = resolve_checks([name])
    check = CHECKS[check_name]
    g = parse_graph6(graph6)
    if not check.accepts(g):
        return []
    return [
        Violation(graph6=graph6, expected=expected, observed=observed)
        for expected, observed in check.evaluate(g).findings
    ]


def verify_theorem_main(corpus: CorpusSpec, *, jobs: int | None = None) -> VerificationReport:
    return run_checks(["theorem_main"], corpus, jobs=jobs)[0]


def verify_lemma_square_stable(
    corpus: CorpusSpec, *, jobs: int | None = None
) -> VerificationReport:
    return run_checks(["lemma"], corpus, jobs=jobs)[0]


def verify_proposition_square_ke(
    corpus: CorpusSpec, *, jobs: int | None = None
) -> VerificationReport:
    return run_checks(["proposition"], corpus, jobs=jobs)[0]


def verify_necessity(corpus: CorpusSpec, *, jobs: int | None = None) -> VerificationReport:
    return run_checks(["necessity"], corpus, jobs=jobs)[0]


def verify_chain(corpus: CorpusSpec, *, jobs: int | None = None) -> VerificationReport:
    return run_checks(["chain"], corpus, jobs=jobs)[0]


def verify_tree_corollary(corpus: CorpusSpec, *, jobs: int | None = None) -> VerificationReport:
    """Only trees with n >= 2 are tested; other corpus graphs are skipped."""
    return run_checks(["tree_corollary"], corpus, jobs=jobs)[0]


def verify_distance3(corpus: CorpusSpec, *, jobs: int | None = None) -> VerificationReport:
    return run_checks(["distance3"], corpus, jobs=jobs)[0]


def verify_ke_decomposition(corpus: CorpusSpec, *, jobs: int | None = None) -> VerificationReport:
    return run_checks(["ke_decomposition"], corpus, jobs=jobs)[0]


def verify_oracles(corpus: CorpusSpec, *, jobs: int | None = None) -> VerificationReport:
    return run_checks(["oracles"], corpus, jobs=jobs)[0]


def verify_round_trip(corpus: CorpusSpec, *, jobs: int | None = None) -> VerificationReport:
    return run_checks(["round_trip"], corpus, jobs=jobs)[0]
