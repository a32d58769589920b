"""Per-graph checks run by the verification harness.

Each check looks at a single graph and returns an Outcome: the discrepancies
it found (as expected/observed pairs) plus named tallies. Checks are pure and
deterministic, so a corpus can be split across workers and the partial
reports merged in any grouping.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field

from ke_square.core.families import is_cycle
from ke_square.core.graph import Graph, is_connected, is_tree
from ke_square.core.graph6 import MAX_ORDER, parse_graph6, to_graph6
from ke_square.errors import ChainViolationError
from ke_square.harness.report import VerificationReport
from ke_square.invariants.covering import invariant_chain
from ke_square.invariants.oracles import brute_force_alpha, brute_force_mu
from ke_square.invariants.stable import alpha_tree
from ke_square.recognizers.classify import classify
from ke_square.recognizers.koenig import is_koenig_egervary, ke_decomposition
from ke_square.recognizers.profile import profile_of
from ke_square.recognizers.square_stable import (
    distance3_stability_system,
    is_distance3_stability_system,
    is_square_stable,
)
from ke_square.recognizers.well_covered import is_well_covered, pendant_perfect_matching

ORACLE_MAX_ORDER = 12  # Brute-force oracles are exponential


@dataclass
class Outcome:
    findings: list[tuple[str, str]] = field(default_factory=list)  # (expected, observed)
    counters: dict[str, int] = field(default_factory=dict)

    def fail(self, expected: str, observed: str) -> None:
        self.findings.append((expected, observed))

    def count(self, name: str) -> None:
        self.counters[name] = self.counters.get(name, 0) + 1


@dataclass(frozen=True)
class Check:
    name: str
    description: str
    evaluate: Callable[[Graph], Outcome]
    accepts: Callable[[Graph], bool]
    counters: tuple[str, ...] = ()
    finalize: Callable[[VerificationReport], None] | None = None


def _flags(**values: object) -> str:
    return ", ".join(f"{name}={value}" for name, value in values.items())


def connected_with_edge(g: Graph) -> bool:
    return g.n >= 2 and is_connected(g)


def is_tree_with_edge(g: Graph) -> bool:
    return g.n >= 2 and is_tree(g)


def fits_graph6(g: Graph) -> bool:
    return g.n <= MAX_ORDER


def any_graph(g: Graph) -> bool:
    return True


def check_theorem_main(g: Graph) -> Outcome:
    outcome = Outcome()
    report = classify(g)
    if report.theorem4 == "inconsistent":
        i, ii, iii, iv = report.predicates
        outcome.fail("(i)-(iv) all equal", _flags(i=i, ii=ii, iii=iii, iv=iv))
    elif report.ke_square:
        outcome.count("ke_square")
    return outcome


def check_lemma(g: Graph) -> Outcome:
    outcome = Outcome()
    if not is_square_stable(g):
        return outcome
    outcome.count("premise_held")
    profile = profile_of(g)
    if profile.alpha > profile.mu:
        outcome.fail("alpha <= mu", _flags(alpha=profile.alpha, mu=profile.mu))
    return outcome


def check_proposition(g: Graph) -> Outcome:
    outcome = Outcome()
    profile = profile_of(g)
    sq = profile.square
    if not is_koenig_egervary(sq.graph):
        return outcome
    outcome.count("premise_held")
    alpha_equal = profile.alpha == sq.alpha
    mu_equal = profile.mu == sq.mu
    ke_with_pm = is_koenig_egervary(g) and 2 * profile.mu == g.n
    if not (alpha_equal and mu_equal and ke_with_pm):
        outcome.fail(
            "alpha = alpha_sq, mu = mu_sq and KE with perfect matching",
            _flags(alpha_equal=alpha_equal, mu_equal=mu_equal, ke_with_pm=ke_with_pm),
        )
    return outcome


def check_necessity(g: Graph) -> Outcome:
    outcome = Outcome()
    profile = profile_of(g)
    sq = profile.square
    ke_square = is_koenig_egervary(sq.graph)
    ke = is_koenig_egervary(g)
    perfect = 2 * profile.mu == g.n
    if ke_square:
        outcome.count("premise_held")
        stable = is_square_stable(g)
        chain = profile.alpha == sq.alpha == profile.mu == sq.mu
        if not (stable and ke and perfect and chain):
            outcome.fail(
                "square-stable, KE, perfect matching, alpha = alpha_sq = mu = mu_sq",
                _flags(
                    square_stable=stable,
                    ke=ke,
                    perfect_matching=perfect,
                    values=(profile.alpha, sq.alpha, profile.mu, sq.mu),
                ),
            )
    elif ke and perfect:
        outcome.count("non_converse")
    if is_cycle(g) and g.n % 2 == 0:
        outcome.count("even_cycles")
        if ke_square or not (ke and perfect):
            outcome.fail(
                "even cycle: KE with perfect matching, square not KE",
                _flags(ke=ke, perfect_matching=perfect, ke_square=ke_square),
            )
    return outcome


def _require_non_converse(report: VerificationReport) -> None:
    even_cycles = report.counters.get("even_cycles", 0)
    if even_cycles and not report.counters.get("non_converse", 0):
        report.corpus_failures.append(
            f"corpus holds {even_cycles} even cycle(s) but no KE graph with a perfect matching"
            " whose square is not KE"
        )


def check_chain(g: Graph) -> Outcome:
    outcome = Outcome()
    try:
        bundle = invariant_chain(g)
    except ChainViolationError as exc:
        outcome.fail("alpha_g2 <= theta_g2 <= gamma <= i <= alpha <= theta", str(exc.values))
        return outcome
    if bundle.equality_premise:
        outcome.count("premise_held")
        if not bundle.all_equal:
            outcome.fail("all six values equal", str(bundle.values))
    return outcome


def check_tree_corollary(g: Graph) -> Outcome:
    outcome = Outcome()
    ke_square = is_koenig_egervary(profile_of(g).square.graph)
    well_covered = is_well_covered(g)
    pendant_pm = pendant_perfect_matching(g) is not None
    if not (ke_square == well_covered == pendant_pm):
        outcome.fail(
            "square KE <=> well-covered <=> pendant perfect matching",
            _flags(ke_square=ke_square, well_covered=well_covered, pendant_pm=pendant_pm),
        )
    elif ke_square:
        outcome.count("well_covered")
    return outcome


def check_distance3(g: Graph) -> Outcome:
    outcome = Outcome()
    system = distance3_stability_system(g)
    stable = is_square_stable(g)
    if (system is not None) != stable:
        outcome.fail(
            "distance-3 stability system present <=> square-stable",
            _flags(system=system.vertices if system else None, square_stable=stable),
        )
    elif system is not None and not is_distance3_stability_system(g, system.vertices):
        outcome.fail("valid distance-3 stability system", str(system.vertices))
    return outcome


def check_ke_decomposition(g: Graph) -> Outcome:
    outcome = Outcome()
    decomposition = ke_decomposition(g)
    ke = is_koenig_egervary(g)
    if (decomposition is not None) != ke:
        outcome.fail(
            "decomposition present <=> KE",
            _flags(decomposition=decomposition is not None, ke=ke),
        )
    elif decomposition is not None and not decomposition.is_valid_for(g):
        outcome.fail("valid S*H decomposition", decomposition.model_dump_json())
    return outcome


def check_oracles(g: Graph) -> Outcome:
    outcome = Outcome()
    profile = profile_of(g)
    if not profile.matching.is_valid_for(g):
        outcome.fail("matching of g", str(profile.matching.edges))
    if g.n <= ORACLE_MAX_ORDER:
        outcome.count("brute_forced")
        if (brute := brute_force_mu(g)) != profile.mu:
            outcome.fail(f"mu={brute}", f"mu={profile.mu}")
        if (brute := brute_force_alpha(g)) != profile.alpha:
            outcome.fail(f"alpha={brute}", f"alpha={profile.alpha}")
    if g.n and is_tree(g):
        outcome.count("trees")
        if (tree_value := alpha_tree(g)) != profile.alpha:
            outcome.fail(f"alpha={profile.alpha}", f"alpha_tree={tree_value}")
    return outcome


def check_round_trip(g: Graph) -> Outcome:
    outcome = Outcome()
    encoded = to_graph6(g)
    if parse_graph6(encoded) != g:
        outcome.fail("parse_graph6(to_graph6(g)) == g", f"{encoded.decode()} decodes differently")
    return outcome


CHECKS: dict[str, Check] = {
    check.name: check
    for check in (
        Check(
            "theorem_main",
            "G^2 KE <=> square-stable KE <=> pendant perfect matching <=> very well-covered",
            check_theorem_main,
            connected_with_edge,
            counters=("ke_square",),
        ),
        Check(
            "lemma",
            "square-stable graphs satisfy alpha <= mu",
            check_lemma,
            connected_with_edge,
            counters=("premise_held",),
        ),
        Check(
            "proposition",
            "G^2 KE gives alpha = alpha(G^2), mu = mu(G^2) and G KE with a perfect matching",
            check_proposition,
            connected_with_edge,
            counters=("premise_held",),
        ),
        Check(
            "necessity",
            "G^2 KE implies square-stable KE with a perfect matching; the converse fails",
            check_necessity,
            connected_with_edge,
            counters=("even_cycles", "non_converse", "premise_held"),
            finalize=_require_non_converse,
        ),
        Check(
            "chain",
            "alpha(G^2) <= theta(G^2) <= gamma <= i <= alpha <= theta, equal under the premise",
            check_chain,
            any_graph,
            counters=("premise_held",),
        ),
        Check(
            "tree_corollary",
            "T^2 KE <=> T well-covered <=> pendant perfect matching",
            check_tree_corollary,
            is_tree_with_edge,
            counters=("well_covered",),
        ),
        Check(
            "distance3",
            "distance-3 stability system exists <=> square-stable",
            check_distance3,
            any_graph,
        ),
        Check(
            "ke_decomposition",
            "S*H decomposition exists <=> KE",
            check_ke_decomposition,
            any_graph,
        ),
        Check(
            "oracles",
            "fast solvers agree with brute force",
            check_oracles,
            any_graph,
            counters=("brute_forced", "trees"),
        ),
        Check(
            "round_trip",
            "graph6 encoding round-trips",
            check_round_trip,
            fits_graph6,
        ),
    )
}
