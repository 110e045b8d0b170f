"""One-shot verification sweep over every documented guarantee.

Each check is a named function returning ``(ok, detail)``; :func:`run_checks`
collects them in a fixed order so the sweep is deterministic and idempotent.
The expected values are frozen here on purpose: the sweep exists to catch
regressions against independently computed numbers, not to recompute them.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import families, gallery
from .automata import Dfa, complexity_report, minimize, to_dfa, transition_semigroup
from .langops import concat, equivalent, intersection, union
from .monotonic import check_order, classify, find_monotonic_order
from .search import conflict_graph, max_aperiodic, max_conflict_free
from .semigroup import generate, is_aperiodic_semigroup, is_locally_maximal_aperiodic
from .transform import Transformation, compose, enumerate_aperiodic, enumerate_forests

EXPECTED_MONOTONIC_COUNTS = {1: 1, 2: 3, 3: 10, 4: 35, 5: 126, 6: 462}
EXPECTED_PARTIAL_COUNTS = {1: 2, 2: 8, 3: 38, 4: 192, 5: 1002}
EXPECTED_NEARLY_COUNTS = {2: 3, 3: 10, 4: 41, 5: 196, 6: 1007}
EXPECTED_APERIODIC_COUNTS = {1: 1, 2: 3, 3: 16, 4: 125, 5: 1296, 6: 16807}

#: The ten order-preserving maps of a three-element set.
MONOTONIC_THREE = {
    (1, 1, 1),
    (1, 1, 2),
    (1, 1, 3),
    (1, 2, 2),
    (1, 2, 3),
    (1, 3, 3),
    (2, 2, 2),
    (2, 2, 3),
    (2, 3, 3),
    (3, 3, 3),
}

#: Verified search cells within the default pytest/CLI time budget.
SEARCH_CELLS = {
    (1, 1): 1,
    (2, 1): 1,
    (2, 2): 2,
    (2, 3): 3,
    (3, 1): 2,
    (3, 2): 7,
    (3, 3): 9,
    (3, 4): 10,
    (4, 1): 3,
    (4, 2): 19,
}
SLOW_SEARCH_CELLS = {(4, 1), (4, 2)}

#: Conflicting pairs among the twelve three-state nodes.
CONFLICT_EDGES_THREE = {
    frozenset({(1, 1, 2), (3, 1, 3)}),
    frozenset({(1, 1, 2), (3, 2, 2)}),
    frozenset({(1, 1, 2), (3, 2, 3)}),
    frozenset({(1, 1, 3), (3, 2, 2)}),
    frozenset({(1, 2, 1), (2, 3, 3)}),
    frozenset({(1, 2, 2), (3, 1, 3)}),
    frozenset({(1, 3, 1), (2, 2, 1)}),
    frozenset({(1, 3, 1), (2, 2, 3)}),
    frozenset({(1, 3, 1), (2, 3, 3)}),
    frozenset({(1, 3, 3), (2, 2, 1)}),
    frozenset({(2, 2, 1), (2, 3, 3)}),
    frozenset({(3, 1, 3), (3, 2, 2)}),
}

SINGLE_CONFLICT_NODES = {
    (1, 1, 3),
    (1, 2, 1),
    (1, 2, 2),
    (1, 3, 3),
    (2, 2, 3),
    (3, 2, 3),
}

#: Triples that are pairwise conflict-free yet jointly generate a cycle.
CONFLICT_TRIPLES_THREE = (
    ((1, 1, 3), (1, 2, 2), (3, 2, 3)),
    ((1, 2, 1), (1, 3, 3), (2, 2, 3)),
)

#: (builder, expected flags (monotonic, partially, nearly, star-free))
CLASSIFICATION_FIXTURES = (
    (gallery.completed_two_state, (False, True, True, True)),
    (gallery.completed_two_state_with_reset, (False, False, True, True)),
    (gallery.monotonic_with_dead_state, (True, True, True, True)),
    (gallery.star_free_not_nearly_monotonic, (False, False, False, True)),
    (gallery.concat_counterexample, (False, False, False, True)),
    (gallery.union_operand_one, (True, True, True, True)),
    (gallery.union_operand_two, (True, True, True, True)),
    (gallery.concat_operand_one, (True, True, True, True)),
    (gallery.concat_operand_two, (True, True, True, True)),
    (gallery.words_ending_in_a, (True, True, True, True)),
    (gallery.double_a, (True, True, True, True)),
)

SIGMA_FIXTURES = (
    (gallery.words_containing_a, 2, 2),
    (gallery.words_ending_in_a, 2, 2),
    (gallery.a_after_last_b, 2, 3),
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _images(ts: Iterable[Transformation]) -> set[tuple[int, ...]]:
    return {t.images for t in ts}


def check_counting_formulas() -> tuple[bool, str]:
    problems = []
    for n, want in EXPECTED_MONOTONIC_COUNTS.items():
        if families.monotonic_count(n) != want:
            problems.append(f"monotonic({n}) != {want}")
    for n, want in EXPECTED_PARTIAL_COUNTS.items():
        if families.partial_monotonic_count(n) != want:
            problems.append(f"partial({n}) != {want}")
    for n, want in EXPECTED_NEARLY_COUNTS.items():
        if families.nearly_monotonic_count(n) != want:
            problems.append(f"nearly({n}) != {want}")
    for n, want in EXPECTED_APERIODIC_COUNTS.items():
        if families.aperiodic_count(n) != want:
            problems.append(f"aperiodic({n}) != {want}")
    for n in range(1, 13):
        families.monotonic_count(n)  # sum form vs closed form asserted inside
    return (not problems, "; ".join(problems) or "all counting rows match")


def check_family_closures() -> tuple[bool, str]:
    problems = []
    cases = (
        [("A", n) for n in range(1, 7)]
        + [("B", n) for n in range(1, 6)]
        + [("Bprime", n) for n in range(2, 7)]
        + [("C", n) for n in range(2, 7)]
    )
    for tag, n in cases:
        report = families.verify_family(tag, n)
        if not report.ok:
            problems.append(report.summary())
    return (not problems, "; ".join(problems) or f"{len(cases)} family instances verified")


def check_monotonic_closure_table() -> tuple[bool, str]:
    closure = generate(list(families.monotonic_generators(3).values()))
    got = _images(closure)
    ok = got == MONOTONIC_THREE
    return (ok, "closure is exactly the ten order-preserving maps" if ok
            else f"unexpected closure {sorted(got)}")


def check_aperiodic_enumeration() -> tuple[bool, str]:
    problems = []
    for n in range(1, 6):
        count = len(enumerate_aperiodic(n))
        forests = len(enumerate_forests(n))
        expected = families.aperiodic_count(n)
        if not count == forests == expected:
            problems.append(f"n={n}: maps={count}, forests={forests}, want={expected}")
    return (not problems, "; ".join(problems) or "maps and forests agree for n = 1..5")


def _check_search_cells(cells: dict[tuple[int, int], int]) -> tuple[bool, str]:
    problems = []
    for (n, k), want in sorted(cells.items()):
        result = max_aperiodic(n, k)
        if result.best_size != want:
            problems.append(f"({n},{k}) -> {result.best_size}, want {want}")
            continue
        closure = generate(list(result.best_generators))
        if len(closure) != want or not is_aperiodic_semigroup(closure):
            problems.append(f"({n},{k}) witness does not close to {want} aperiodic elements")
    return (not problems, "; ".join(problems) or f"{len(cells)} cells match")


def check_search_cells() -> tuple[bool, str]:
    return _check_search_cells(SEARCH_CELLS)


def check_search_cells_quick() -> tuple[bool, str]:
    quick = {cell: v for cell, v in SEARCH_CELLS.items() if cell not in SLOW_SEARCH_CELLS}
    return _check_search_cells(quick)


def check_conflict_analysis() -> tuple[bool, str]:
    graph = conflict_graph(3)
    problems = []
    if len(graph.nodes) != 12:
        problems.append(f"{len(graph.nodes)} nodes, want 12")
    edges = {frozenset({graph.nodes[a].images, graph.nodes[b].images}) for a, b in graph.edges}
    if edges != CONFLICT_EDGES_THREE:
        problems.append("edge set differs from the recorded conflicting pairs")
    singles = {
        graph.nodes[i].images for i in range(len(graph.nodes)) if graph.degree(i) == 1
    }
    if singles != SINGLE_CONFLICT_NODES:
        problems.append(f"degree-one nodes {sorted(singles)}")
    size, witness = max_conflict_free(graph)
    if size != 6:
        problems.append(f"max conflict-free set has {size} members, want 6")
    witness_idx = [graph.nodes.index(t) for t in witness]
    for a, b in itertools.combinations(witness_idx, 2):
        if tuple(sorted((a, b))) in graph.edges:
            problems.append("witness set is not independent")
            break
    for triple in CONFLICT_TRIPLES_THREE:
        ts = [Transformation(images) for images in triple]
        if any(
            frozenset({x.images, y.images}) in CONFLICT_EDGES_THREE
            for x, y in itertools.combinations(ts, 2)
        ):
            problems.append(f"triple {triple} is not pairwise conflict-free")
        if is_aperiodic_semigroup(generate(ts)):
            problems.append(f"triple {triple} closes aperiodically")
    bound = size + 1 + 3  # identity plus the three constants
    best = max_aperiodic(3, 4).best_size
    if bound != 10 or best != 10:
        problems.append(f"derived bound {bound} vs search maximum {best}, want 10")
    return (not problems, "; ".join(problems) or "12 nodes, recorded edges, bound 10 met")


def check_classification_fixtures() -> tuple[bool, str]:
    problems = []
    for builder, expected in CLASSIFICATION_FIXTURES:
        got = classify(builder()).flags()
        if got != expected:
            problems.append(f"{builder.__name__}: {got}, want {expected}")
    idfa = gallery.two_state_monotonic_idfa()
    witness = find_monotonic_order(idfa.letter_transforms)
    if witness is None or not check_order(idfa.letter_transforms, witness):
        problems.append("incomplete two-state automaton should admit an order")
    produced = minimize(concat(gallery.concat_operand_one(), gallery.concat_operand_two()))
    recorded = minimize(gallery.concat_counterexample())
    if produced != recorded:
        problems.append("concatenation does not reproduce the recorded six-state quotient")
    if produced.n != 6:
        problems.append(f"concatenation quotient has {produced.n} states, want 6")
    both = union(gallery.union_operand_one(), gallery.union_operand_two())
    if not equivalent(both, gallery.star_free_not_nearly_monotonic()):
        problems.append("union of the two monotonic operands differs from the recorded automaton")
    meet = intersection(gallery.union_operand_one(), gallery.union_operand_two())
    if meet.finals:
        problems.append("the two union operands are not disjoint")
    return (not problems, "; ".join(problems) or "all fixtures classified as recorded")


def _local_maximality(n: int) -> tuple[bool, str]:
    closure = generate(list(families.nearly_monotonic_generators(n).values()))
    ok, counterexample = is_locally_maximal_aperiodic(closure)
    if not ok:
        return False, f"n={n}: adding {counterexample} keeps the closure aperiodic"
    return True, f"n={n}: locally maximal"


def check_local_maximality_small() -> tuple[bool, str]:
    return _local_maximality(3)


def check_local_maximality() -> tuple[bool, str]:
    ok3, detail3 = _local_maximality(3)
    ok4, detail4 = _local_maximality(4)
    return (ok3 and ok4, f"{detail3}; {detail4}")


def check_two_state_sigma() -> tuple[bool, str]:
    problems = []
    for builder, kappa, sigma in SIGMA_FIXTURES:
        report = complexity_report(builder())
        if (report.kappa, report.sigma) != (kappa, sigma):
            problems.append(
                f"{builder.__name__}: kappa={report.kappa} sigma={report.sigma}, "
                f"want {kappa}/{sigma}"
            )
    return (not problems, "; ".join(problems) or "small syntactic complexities match")


def check_associativity() -> tuple[bool, str]:
    maps = [Transformation(images) for images in itertools.product((1, 2, 3), repeat=3)]
    for a, b, c in itertools.product(maps, repeat=3):
        if compose(compose(a, b), c) != compose(a, compose(b, c)):
            return False, f"associativity fails on {a}, {b}, {c}"
    partial = [
        Transformation(images) for images in itertools.product((None, 1, 2), repeat=2)
    ]
    for a, b, c in itertools.product(partial, repeat=3):
        if compose(compose(a, b), c) != compose(a, compose(b, c)):
            return False, f"associativity fails on {a}, {b}, {c}"
    return True, "exhaustive over size 3 (total) and size 2 (partial)"


def check_closure_idempotence() -> tuple[bool, str]:
    for tag, n in (("A", 3), ("B", 2), ("C", 3)):
        first = generate(list(families.family_letters(tag, n).values()))
        second = generate(list(first.elements))
        if first.element_set != second.element_set:
            return False, f"closure of {tag}_{n} is not idempotent"
    return True, "regenerating from closures changes nothing"


def _brute_force_order(ts: Sequence[Transformation]) -> bool:
    n = ts[0].n
    return any(
        check_order(ts, perm) for perm in itertools.permutations(range(1, n + 1))
    )


def check_order_search_against_brute_force() -> tuple[bool, str]:
    rng = random.Random(987610)
    checked = 0
    for n in (2, 3, 4):
        pool = [
            Transformation(images)
            for images in itertools.product([None] + list(range(1, n + 1)), repeat=n)
        ]
        for _ in range(30):
            ts = rng.sample(pool, rng.randint(1, 3))
            fast = find_monotonic_order(ts)
            slow = _brute_force_order(ts)
            if (fast is not None) != slow:
                return False, f"disagreement on {[str(t) for t in ts]}"
            if fast is not None and not check_order(ts, fast):
                return False, f"unsound witness for {[str(t) for t in ts]}"
            checked += 1
    fixtures = (
        list(families.monotonic_generators(3).values()),
        list(families.partial_monotonic_generators(3).values()),
        list(gallery.completed_two_state().letter_transforms),
        list(gallery.star_free_not_nearly_monotonic().letter_transforms),
    )
    for ts in fixtures:
        if (find_monotonic_order(ts) is not None) != _brute_force_order(ts):
            return False, f"disagreement on fixture {[str(t) for t in ts]}"
        checked += 1
    return True, f"{checked} transformation sets agree with the n! brute force"


def check_classification_chain() -> tuple[bool, str]:
    automata: list[Dfa] = [builder() for builder, _ in CLASSIFICATION_FIXTURES]
    automata += [families.build("A", n) for n in range(1, 5)]
    automata += [families.build("Bprime", n) for n in range(2, 5)]
    automata += [families.build("C", n) for n in range(2, 5)]
    automata += [to_dfa(families.build("B", n)) for n in range(1, 5)]
    for dfa in automata:
        m, pm, nm, sf = classify(dfa).flags()
        if (m and not pm) or (pm and not nm) or (nm and not sf):
            return False, f"chain broken: {(m, pm, nm, sf)}"
    return True, f"chain holds on {len(automata)} automata"


def check_monoid_vs_semigroup() -> tuple[bool, str]:
    automata = [builder() for builder, _ in CLASSIFICATION_FIXTURES]
    automata += [families.build("C", n) for n in range(2, 5)]
    for dfa in automata:
        report = complexity_report(dfa)
        if not report.mu - 1 <= report.sigma <= report.mu:
            return False, f"sigma/mu inconsistent: {report}"
        reduced = minimize(dfa)
        semigroup = transition_semigroup(reduced)
        realized = Transformation.identity(reduced.n) in semigroup
        if (report.mu == report.sigma) != realized:
            return False, f"identity realization mismatch on {report}"
    return True, f"mu - 1 <= sigma <= mu on {len(automata)} automata"


def check_completion_isomorphism() -> tuple[bool, str]:
    for n in range(2, 6):
        partial = generate(list(families.partial_monotonic_generators(n - 1).values()))
        completed = generate(list(families.completed_generators(n).values()))
        lifted = {families.complete_partial(t).images for t in partial}
        if lifted != _images(completed):
            return False, f"n={n}: completed closure differs from the lifted partial one"
        nearly = generate(list(families.nearly_monotonic_generators(n).values()))
        constants = {Transformation.constant(n, j).images for j in range(1, n)}
        if _images(nearly) != _images(completed) | constants:
            return False, f"n={n}: nearly monotonic closure is not completed + constants"
        if Transformation.constant(n, n) not in completed:
            return False, f"n={n}: constant-to-sink map missing from the completed closure"
    return True, "completed closures match lifted partial ones for n = 2..5"


#: name -> (function, slow)
CHECKS: tuple[tuple[str, Callable[[], tuple[bool, str]], bool], ...] = (
    ("counting-formulas", check_counting_formulas, False),
    ("family-closures", check_family_closures, False),
    ("monotonic-closure-table", check_monotonic_closure_table, False),
    ("aperiodic-enumeration", check_aperiodic_enumeration, False),
    ("search-cells", check_search_cells, True),
    ("conflict-analysis", check_conflict_analysis, False),
    ("classification-fixtures", check_classification_fixtures, False),
    ("local-maximality", check_local_maximality, True),
    ("two-state-sigma", check_two_state_sigma, False),
    ("associativity", check_associativity, False),
    ("closure-idempotence", check_closure_idempotence, False),
    ("order-search-brute-force", check_order_search_against_brute_force, False),
    ("classification-chain", check_classification_chain, False),
    ("monoid-vs-semigroup", check_monoid_vs_semigroup, False),
    ("completion-isomorphism", check_completion_isomorphism, False),
)

_QUICK_SUBSTITUTES = {
    "search-cells": check_search_cells_quick,
    "local-maximality": check_local_maximality_small,
}


def run_checks(quick: bool = False) -> list[CheckResult]:
    results = []
    for name, func, slow in CHECKS:
        if quick and slow:
            func = _QUICK_SUBSTITUTES[name]
        ok, detail = func()
        results.append(CheckResult(name=name, ok=ok, detail=detail))
    return results
