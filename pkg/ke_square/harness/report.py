"""Verification reports and the violation certificates they carry."""

from __future__ import annotations

from collections import Counter

from pydantic import BaseModel, Field, computed_field

from ke_square.config import settings
from ke_square.harness.corpus import CorpusSpec


class Violation(BaseModel):
    """A graph on which a check failed. `graph6` re-parses to the failing graph."""

    graph6: str
    expected: str
    observed: str


class VerificationReport(BaseModel):
    """Outcome of one check over one corpus.

    `violations` holds at most `settings.certificate_cap` certificates, in corpus
    order; `violation_count` keeps counting past the cap. `corpus_failures` holds
    conditions on the corpus as a whole, which no single graph can reproduce.
    """

    check_name: str
    graphs_tested: int = 0
    violation_count: int = 0
    violations: list[Violation] = Field(default_factory=list)
    elapsed_ms: float = 0.0
    seed: int = 0
    counters: dict[str, int] = Field(default_factory=dict)  # e.g. premise_held, non_converse
    corpus_failures: list[str] = Field(default_factory=list)  # Not tied to any single graph
    corpus: CorpusSpec | None = None

    @computed_field
    @property
    def passed(self) -> bool:
        return self.violation_count == 0 and not self.corpus_failures

    def record(self, violation: Violation, cap: int | None = None) -> None:
        limit = settings.certificate_cap if cap is None else cap
        self.violation_count += 1
        if len(self.violations) < limit:
            self.violations.append(violation)

    def merge(self, other: VerificationReport, cap: int | None = None) -> VerificationReport:
        """Combine two partial reports of the same check, `self` first.

        Associative: certificates keep corpus order and the cap keeps a prefix.
        """
        if other.check_name != self.check_name:
            raise ValueError(f"cannot merge {other.check_name!r} into {self.check_name!r}")
        limit = settings.certificate_cap if cap is None else cap
        counters = Counter(self.counters)
        counters.update(other.counters)
        return VerificationReport(
            check_name=self.check_name,
            graphs_tested=self.graphs_tested + other.graphs_tested,
            violation_count=self.violation_count + other.violation_count,
            violations=[*self.violations, *other.violations][:limit],
            elapsed_ms=self.elapsed_ms + other.elapsed_ms,
            seed=self.seed,
            counters=dict(sorted(counters.items())),
            corpus_failures=[*self.corpus_failures, *other.corpus_failures],
            corpus=self.corpus or other.corpus,
        )
