"""Command-line front end: classify, square, invariants, verify, fixtures.

Graphs are read one per line as graph6 (default) or as concatenated edge-list
records. `--output structured` writes JSON Lines, one pydantic record per input
graph (or per check for `verify`), in input order with keys in field order.

Exit codes: 0 success, 1 violations or a failed invariant chain, 2 bad input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Iterable, Iterator, Sequence
from pathlib import Path
from typing import Literal, TextIO

from pydantic import BaseModel, Field, ValidationError

from ke_square import __version__
from ke_square.config import settings
from ke_square.core.edgelist import format_edge_list, iter_edge_lists
from ke_square.core.graph import Graph, square
from ke_square.core.graph6 import iter_graph6_lines, to_graph6
from ke_square.errors import ChainViolationError, KESquareError
from ke_square.harness.corpus import CorpusKind, CorpusSpec, fixtures
from ke_square.harness.report import VerificationReport
from ke_square.harness.verify import run_checks
from ke_square.invariants.covering import invariant_chain
from ke_square.recognizers.classify import ClassificationReport, classify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_BAD_INPUT = 2

Subcommand = Literal["classify", "square", "invariants", "verify", "fixtures"]

CHAIN_FIELDS = {"alpha_g2", "theta_g2", "gamma", "i_dom", "alpha", "theta"}


class CliConfig(BaseModel):
    """Parsed command line. Built from argv by `parse_config`."""

    subcommand: Subcommand
    input: str = "-"  # Path or "-" for stdin; the graph6 file for --corpus graph6-file
    format: Literal["graph6", "edgelist"] = "graph6"
    output_format: Literal["human", "structured"] = "human"

    # verify
    corpus: CorpusKind = "exhaustive-connected"
    n_min: int = 2
    n_max: int = 6
    samples: int = 1000
    seed: int = Field(default_factory=lambda: settings.seed)
    jobs: int = Field(default_factory=lambda: settings.jobs, ge=1)
    checks: list[str] = Field(default_factory=list)  # Empty means all

    def corpus_spec(self) -> CorpusSpec:
        return CorpusSpec(
            kind=self.corpus,
            n_min=self.n_min,
            n_max=self.n_max,
            sample_count=self.samples,
            seed=self.seed,
            path=self.input if self.corpus == "graph6-file" else None,
        )


class SquareRecord(BaseModel):
    graph6: str
    square: str
    edges: list[tuple[int, int]]


class FixtureRecord(BaseModel):
    name: str
    graph6: str
    n: int
    edges: list[tuple[int, int]]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "input", nargs="?", default="-", help="input file, or - for stdin (default)"
    )
    common.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    common.add_argument(
        "--output",
        dest="output_format",
        choices=["human", "structured"],
        default="human",
        help="structured writes JSON Lines with stable keys",
    )

    corpus = argparse.ArgumentParser(add_help=False)
    corpus.add_argument(
        "--corpus",
        choices=[
            "exhaustive-connected",
            "exhaustive-trees",
            "random-trees",
            "random-graphs",
            "graph6-file",
            "fixtures",
        ],
        default="exhaustive-connected",
    )
    corpus.add_argument("--n-min", type=int, default=2)
    corpus.add_argument("--n-max", type=int, default=6)
    corpus.add_argument("--samples", type=int, default=1000, help="graphs in a random corpus")
    corpus.add_argument("--seed", type=int, default=None, help="default: KE_SQUARE_SEED")
    corpus.add_argument("--jobs", type=int, default=None, help="default: KE_SQUARE_JOBS")
    corpus.add_argument(
        "--checks", default="all", help="comma-separated check names (default: all)"
    )

    parser = argparse.ArgumentParser(
        prog="ke-square",
        description="Exact graph invariants and König-Egerváry squares.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("classify", parents=[common], help="classify each input graph")
    sub.add_parser("square", parents=[common], help="print the square of each input graph")
    sub.add_parser("invariants", parents=[common], help="print the invariant chain")
    sub.add_parser("verify", parents=[common, corpus], help="run harness checks over a corpus")
    sub.add_parser("fixtures", parents=[common], help="print the figure fixtures")
    return parser


def parse_config(argv: Sequence[str] | None = None) -> CliConfig:
    args = vars(build_parser().parse_args(argv))
    checks = args.pop("checks", "all")
    args["checks"] = [name for name in checks.split(",") if name.strip()]
    return CliConfig(**{key: value for key, value in args.items() if value is not None})


def _parse(lines: Iterable[bytes], fmt: str) -> Iterator[Graph]:
    if fmt == "edgelist":
        return iter_edge_lists(lines)
    return iter_graph6_lines(lines)


def read_graphs(config: CliConfig) -> Iterator[Graph]:
    """Stream the input graphs in the configured format, read as bytes."""
    if config.input == "-":
        yield from _parse(sys.stdin.buffer, config.format)
        return
    with Path(config.input).open("rb") as f:
        yield from _parse(f, config.format)


def _emit(record: BaseModel, out: TextIO) -> None:
    print(record.model_dump_json(by_alias=True), file=out)


def _yes(value: bool) -> str:
    return "yes" if value else "no"


def _format_graph(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return format_edge_list(g).rstrip("\n")
    return to_graph6(g).decode()


def _describe(report: ClassificationReport) -> str:
    pm = report.pendant_pm
    lines = [
        f"{report.graph6 or '(n > 62)'}  n={report.n} m={report.m}"
        f"{'' if report.connected else '  (disconnected)'}",
        f"  alpha={report.alpha} mu={report.mu} alpha(G^2)={report.alpha_sq} mu(G^2)={report.mu_sq}",
        f"  KE {_yes(report.ke)}  G^2 KE {_yes(report.ke_square)}"
        f"  square-stable {_yes(report.square_stable)}",
        "  pendant perfect matching: "
        + (" ".join(f"{u}-{v}" for u, v in pm.edges) if pm else "none"),
        f"  well-covered {_yes(report.well_covered)}"
        f"  very well-covered {_yes(report.very_well_covered)}  leaves {report.leaf_count}",
        "  conditions (i)-(iv): "
        + " ".join("T" if value else "F" for value in report.predicates)
        + f"  -> {report.theorem4}",
    ]
    return "\n".join(lines)


def _run_classify(config: CliConfig, out: TextIO) -> int:
    for g in read_graphs(config):
        report = classify(g)
        if config.output_format == "structured":
            _emit(report, out)
        else:
            print(_describe(report), file=out)
    return EXIT_OK


def _run_square(config: CliConfig, out: TextIO) -> int:
    for g in read_graphs(config):
        g2 = square(g)
        if config.output_format == "structured":
            record = SquareRecord(
                graph6=to_graph6(g).decode(), square=to_graph6(g2).decode(), edges=g2.edges()
            )
            _emit(record, out)
        else:
            print(_format_graph(g2, config.format), file=out)
    return EXIT_OK


def _run_invariants(config: CliConfig, out: TextIO) -> int:
    for g in read_graphs(config):
        bundle = invariant_chain(g)
        if config.output_format == "structured":
            _emit(bundle, out)
        else:
            chain = bundle.model_dump(by_alias=True, include=CHAIN_FIELDS)
            values = " ".join(f"{key}={value}" for key, value in chain.items())
            print(f"{bundle.graph6}  {values}", file=out)
    return EXIT_OK


def _summarize(report: VerificationReport) -> str:
    status = "PASS" if report.passed else f"FAIL ({report.violation_count} violations)"
    tallies = " ".join(f"{key}={value}" for key, value in report.counters.items())
    lines = [
        f"{report.check_name}: {status}  {report.graphs_tested} graphs"
        f"  {report.elapsed_ms:.0f} ms  {tallies}".rstrip()
    ]
    lines += [
        f"  {v.graph6}  expected {v.expected}; observed {v.observed}" for v in report.violations
    ]
    lines += [f"  corpus: {failure}" for failure in report.corpus_failures]
    return "\n".join(lines)


def _run_verify(config: CliConfig, out: TextIO) -> int:
    reports = run_checks(config.checks, config.corpus_spec(), jobs=config.jobs)
    for report in reports:
        if config.output_format == "structured":
            _emit(report, out)
        else:
            print(_summarize(report), file=out)
    return EXIT_OK if all(report.passed for report in reports) else EXIT_VIOLATIONS


def _run_fixtures(config: CliConfig, out: TextIO) -> int:
    for name, g in fixtures().items():
        if config.output_format == "structured":
            record = FixtureRecord(name=name, graph6=to_graph6(g).decode(), n=g.n, edges=g.edges())
            _emit(record, out)
        else:
            print(f"{name} {to_graph6(g).decode()}", file=out)
            print(format_edge_list(g), end="", file=out)
    return EXIT_OK


_HANDLERS = {
    "classify": _run_classify,
    "square": _run_square,
    "invariants": _run_invariants,
    "verify": _run_verify,
    "fixtures": _run_fixtures,
}


def run(config: CliConfig, out: TextIO | None = None) -> int:
    """Execute one subcommand and return its exit code."""
    out = out or sys.stdout
    try:
        return _HANDLERS[config.subcommand](config, out)
    except ChainViolationError as exc:
        print(f"ke-square: {exc}", file=sys.stderr)
        return EXIT_VIOLATIONS
    except (KESquareError, ValidationError, OSError) as exc:
        print(f"ke-square: error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(
        level=settings.log_level_value,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config = parse_config(argv)
    except ValidationError as exc:
        print(f"ke-square: error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    logger.debug("Running %s", config.subcommand)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
