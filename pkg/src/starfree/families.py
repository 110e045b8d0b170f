"""Extremal generator families for the monotonic hierarchy, with counts.

Four families of automata over {1, ..., n}, each with initial and single
final state 1, realize the largest transition semigroups of their classes:

* ``A`` (monotonic): letters ``a`` (shift down, fixing 1), ``b1..b(n-1)``
  (bump i to i+1), and the identity ``c``.  The closure is every
  order-preserving total map, counted by f(n) = C(2n-1, n).
* ``B`` (partially monotonic, incomplete): letters ``a`` (shift down,
  undefined at 1), ``b1..b(n-1)`` (bump i to i+1 and undefine i+1),
  ``c1..c(n-1)`` (bump i to i+1), and the identity ``d``.  The closure is
  every order-preserving partial map, counted by
  g(n) = sum_k C(n,k) C(n+k-1,k).
* ``Bprime`` (partially monotonic, completed): the maps of ``B`` on
  {1, ..., n-1} made total by routing undefined values to the new sink n.
  Closure size g(n-1).
* ``C`` (nearly monotonic): ``Bprime`` plus the constant letter ``e``;
  closure size h(n) = g(n-1) + n - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .automata import Dfa, Idfa, minimize, to_dfa
from .semigroup import generate, is_aperiodic_semigroup, is_minimal_generating_set
from .transform import Transformation

FAMILY_TAGS = ("A", "B", "Bprime", "C")

#: Exact-arithmetic guarantee range for the counting formulas.
MAX_COUNT_N = 12

#: verify_family closes the whole semigroup; h(6) = 1007 elements is the
#: largest case covered by the desk-scale guarantees.
MAX_VERIFY_N = 6


# ----------------------------------------------------------------------
# counting formulas


def _check_count_range(n: int, low: int) -> None:
    if not low <= n <= MAX_COUNT_N:
        raise ValueError(f"n must be in {low}..{MAX_COUNT_N}, got {n}")


def monotonic_count(n: int) -> int:
    """Number of order-preserving total maps of an n-set: C(2n-1, n)."""
    _check_count_range(n, 1)
    by_sum = sum(comb(n - 1, k - 1) * comb(n, k) for k in range(1, n + 1))
    closed = comb(2 * n - 1, n)
    assert by_sum == closed
    return closed


def partial_monotonic_count(n: int) -> int:
    """Number of order-preserving partial maps of an n-set."""
    _check_count_range(n, 1)
    return sum(comb(n, k) * comb(n + k - 1, k) for k in range(n + 1))


def nearly_monotonic_count(n: int) -> int:
    """Completed order-preserving maps plus the n - 1 missing constants."""
    _check_count_range(n, 2)
    by_sum = sum(comb(n - 1, k) * comb(n + k - 2, k) for k in range(n)) + n - 1
    assert by_sum == partial_monotonic_count(n - 1) + n - 1
    return by_sum


def aperiodic_count(n: int) -> int:
    """Number of aperiodic total maps of an n-set: (n+1)^(n-1)."""
    _check_count_range(n, 1)
    return (n + 1) ** (n - 1)


# Conventional short names for the four counting functions.
f = monotonic_count
g = partial_monotonic_count
h = nearly_monotonic_count


# ----------------------------------------------------------------------
# generator sets


def monotonic_generators(n: int) -> dict[str, Transformation]:
    _check_count_range(n, 1)
    letters: dict[str, Transformation] = {}
    letters["a"] = Transformation(tuple(max(i - 1, 1) for i in range(1, n + 1)))
    for i in range(1, n):
        letters[f"b{i}"] = Transformation.singular(n, i, i + 1)
    letters["c"] = Transformation.identity(n)
    return letters


def partial_monotonic_generators(n: int) -> dict[str, Transformation]:
    _check_count_range(n, 1)
    letters: dict[str, Transformation] = {}
    letters["a"] = Transformation(tuple(None if i == 1 else i - 1 for i in range(1, n + 1)))
    for i in range(1, n):
        letters[f"b{i}"] = Transformation(
            tuple(
                i + 1 if j == i else None if j == i + 1 else j for j in range(1, n + 1)
            )
        )
    for i in range(1, n):
        letters[f"c{i}"] = Transformation.singular(n, i, i + 1)
    letters["d"] = Transformation.identity(n)
    return letters


def completed_generators(n: int) -> dict[str, Transformation]:
    _check_count_range(n, 2)
    letters: dict[str, Transformation] = {}
    letters["a"] = Transformation(
        tuple(n if i in (1, n) else i - 1 for i in range(1, n + 1))
    )
    for i in range(1, n - 1):
        letters[f"b{i}"] = Transformation(
            tuple(i + 1 if j == i else n if j == i + 1 else j for j in range(1, n + 1))
        )
    for i in range(1, n - 1):
        letters[f"c{i}"] = Transformation.singular(n, i, i + 1)
    letters["d"] = Transformation.identity(n)
    return letters


def nearly_monotonic_generators(n: int) -> dict[str, Transformation]:
    letters = completed_generators(n)
    letters["e"] = Transformation.constant(n, 1)
    return letters


_GENERATORS = {
    "A": monotonic_generators,
    "B": partial_monotonic_generators,
    "Bprime": completed_generators,
    "C": nearly_monotonic_generators,
}


def family_letters(tag: str, n: int) -> dict[str, Transformation]:
    """Generator transformations of family ``tag`` (CLI codes A/B/Bprime/C)."""
    if tag not in _GENERATORS:
        raise ValueError(f"unknown family {tag!r}; expected one of {FAMILY_TAGS}")
    return _GENERATORS[tag](n)


def build(tag: str, n: int):
    """The family automaton: initial state 1, final set {1}."""
    letters = family_letters(tag, n)
    cls = Idfa if tag == "B" else Dfa
    return cls(n, tuple(letters), letters, 1, frozenset({1}))


def expected_closure_size(tag: str, n: int) -> int:
    if tag == "A":
        return monotonic_count(n)
    if tag == "B":
        return partial_monotonic_count(n)
    if tag == "Bprime":
        return partial_monotonic_count(n - 1)
    if tag == "C":
        return nearly_monotonic_count(n)
    raise ValueError(f"unknown family {tag!r}")


def expected_alphabet_size(tag: str, n: int) -> int:
    return {"A": n + 1, "B": 2 * n, "Bprime": 2 * n - 2, "C": 2 * n - 1}[tag]


def complete_partial(t: Transformation) -> Transformation:
    """Make a partial map on {1..n} total on {1..n+1}: undefined values and
    the new point n+1 both go to n+1."""
    sink = t.n + 1
    return Transformation(
        tuple(sink if img is None else img for img in t.images) + (sink,)
    )


# ----------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class FamilyReport:
    tag: str
    n: int
    alphabet_size: int
    expected_alphabet: int
    closure_size: int
    expected_closure: int
    aperiodic: bool
    generators_minimal: bool
    automaton_minimal: bool

    @property
    def ok(self) -> bool:
        return (
            self.alphabet_size == self.expected_alphabet
            and self.closure_size == self.expected_closure
            and self.aperiodic
            and self.generators_minimal
            and self.automaton_minimal
        )

    def summary(self) -> str:
        status = "ok" if self.ok else "MISMATCH"
        return (
            f"{self.tag}_{self.n}: |alphabet|={self.alphabet_size} "
            f"(want {self.expected_alphabet}), closure={self.closure_size} "
            f"(want {self.expected_closure}), aperiodic={self.aperiodic}, "
            f"minimal generators={self.generators_minimal}, "
            f"minimal automaton={self.automaton_minimal} -> {status}"
        )


def verify_family(tag: str, n: int) -> FamilyReport:
    """Check the documented guarantees of one family instance."""
    if n > MAX_VERIFY_N:
        raise ValueError(f"verify_family supported up to n = {MAX_VERIFY_N}")
    auto = build(tag, n)
    letters = list(auto.letter_transforms)
    closure = generate(letters)
    if isinstance(auto, Idfa):
        completed = to_dfa(auto)
        automaton_minimal = minimize(completed).n == completed.n
    else:
        automaton_minimal = minimize(auto).n == auto.n
    return FamilyReport(
        tag=tag,
        n=n,
        alphabet_size=len(auto.alphabet),
        expected_alphabet=expected_alphabet_size(tag, n),
        closure_size=len(closure),
        expected_closure=expected_closure_size(tag, n),
        aperiodic=is_aperiodic_semigroup(closure),
        generators_minimal=is_minimal_generating_set(letters),
        automaton_minimal=automaton_minimal,
    )
