"""Deterministic automata over explicit state transformations.

A :class:`Dfa` stores one total transformation per letter; an :class:`Idfa`
allows partial transformations (an undefined transition rejects).  States
are 1-based.  Minimization prunes unreachable states, refines by
distinguishability, and renumbers canonically by breadth-first discovery
order over the declared letter order with the initial state first.

The module also computes the three complexity measures of the language of
an automaton: quotient complexity (minimal state count), syntactic
complexity (size of the transition semigroup of the minimal DFA), and
monoid complexity (the same plus one when no non-empty word acts as the
identity).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    AutomatonFormatError,
    NotMinimalError,
    UnknownLetterError,
)
from .semigroup import Semigroup, generate
from .transform import Transformation


def _validate_automaton(auto, *, require_total: bool) -> None:
    if auto.n < 1:
        raise ValueError("an automaton needs at least one state")
    if len(set(auto.alphabet)) != len(auto.alphabet):
        raise ValueError("duplicate letters in alphabet")
    for letter in auto.alphabet:
        if not isinstance(letter, str) or not letter:
            raise ValueError(f"bad letter {letter!r}")
    if set(auto.delta) != set(auto.alphabet):
        raise ValueError("delta letters do not match the alphabet")
    for letter, t in auto.delta.items():
        if t.n != auto.n:
            raise ValueError(f"letter {letter!r} acts on {t.n} states, expected {auto.n}")
        if require_total and not t.is_total:
            raise ValueError(f"letter {letter!r} is partial; use Idfa")
    if not 1 <= auto.initial <= auto.n:
        raise ValueError(f"initial state {auto.initial} outside 1..{auto.n}")
    for q in auto.finals:
        if not 1 <= q <= auto.n:
            raise ValueError(f"final state {q} outside 1..{auto.n}")


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton."""

    n: int
    alphabet: tuple[str, ...]
    delta: Mapping[str, Transformation]
    initial: int
    finals: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", dict(self.delta))
        object.__setattr__(self, "finals", frozenset(self.finals))
        _validate_automaton(self, require_total=True)

    @classmethod
    def from_images(
        cls,
        images: Mapping[str, Sequence[int]],
        initial: int,
        finals: Iterable[int],
    ) -> "Dfa":
        delta = {x: Transformation(tuple(seq)) for x, seq in images.items()}
        n = next(iter(delta.values())).n if delta else 1
        return cls(n, tuple(images), delta, initial, frozenset(finals))

    def transform(self, letter: str) -> Transformation:
        return self.delta[letter]

    @property
    def letter_transforms(self) -> tuple[Transformation, ...]:
        return tuple(self.delta[x] for x in self.alphabet)


@dataclass(frozen=True)
class Idfa:
    """Incomplete deterministic automaton; transitions may be undefined."""

    n: int
    alphabet: tuple[str, ...]
    delta: Mapping[str, Transformation]
    initial: int
    finals: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", dict(self.delta))
        object.__setattr__(self, "finals", frozenset(self.finals))
        _validate_automaton(self, require_total=False)

    @classmethod
    def from_images(
        cls,
        images: Mapping[str, Sequence[int | None]],
        initial: int,
        finals: Iterable[int],
    ) -> "Idfa":
        delta = {x: Transformation(tuple(seq)) for x, seq in images.items()}
        n = next(iter(delta.values())).n if delta else 1
        return cls(n, tuple(images), delta, initial, frozenset(finals))

    def transform(self, letter: str) -> Transformation:
        return self.delta[letter]

    @property
    def letter_transforms(self) -> tuple[Transformation, ...]:
        return tuple(self.delta[x] for x in self.alphabet)


Automaton = Union[Dfa, Idfa]


def accepts(auto: Automaton, word: Iterable[str]) -> bool:
    """Run ``word`` (an iterable of letter names) from the initial state."""
    state = auto.initial
    for letter in word:
        if letter not in auto.delta:
            raise UnknownLetterError(f"letter {letter!r} not in alphabet")
        nxt = auto.delta[letter].apply(state)
        if nxt is None:
            return False
        state = nxt
    return state in auto.finals


def reachable_states(auto: Automaton) -> list[int]:
    """States reachable from the initial one, in BFS letter order."""
    seen = [auto.initial]
    member = {auto.initial}
    at = 0
    while at < len(seen):
        state = seen[at]
        at += 1
        for letter in auto.alphabet:
            nxt = auto.delta[letter].apply(state)
            if nxt is not None and nxt not in member:
                member.add(nxt)
                seen.append(nxt)
    return seen


def minimize(dfa: Dfa) -> Dfa:
    """Quotient DFA: reachable, pairwise-distinguishable, canonically numbered."""
    reach = reachable_states(dfa)

    # Moore refinement over the reachable part.
    block = {q: (1 if q in dfa.finals else 0) for q in reach}
    while True:
        signature = {
            q: (block[q],) + tuple(block[dfa.delta[x].apply(q)] for x in dfa.alphabet)
            for q in reach
        }
        ids: dict[tuple, int] = {}
        fresh = {}
        for q in reach:
            sig = signature[q]
            if sig not in ids:
                ids[sig] = len(ids)
            fresh[q] = ids[sig]
        if len(set(fresh.values())) == len(set(block.values())):
            block = fresh
            break
        block = fresh

    # Canonical renumbering: BFS over blocks from the initial block.
    representative = {}
    for q in reach:
        representative.setdefault(block[q], q)
    number = {block[dfa.initial]: 1}
    order = [block[dfa.initial]]
    at = 0
    while at < len(order):
        b = order[at]
        at += 1
        q = representative[b]
        for letter in dfa.alphabet:
            nb = block[dfa.delta[letter].apply(q)]
            if nb not in number:
                number[nb] = len(number) + 1
                order.append(nb)
    m = len(number)

    delta = {}
    for letter in dfa.alphabet:
        images = [0] * m
        for b in order:
            q = representative[b]
            images[number[b] - 1] = number[block[dfa.delta[letter].apply(q)]]
        delta[letter] = Transformation(tuple(images))
    finals = frozenset(
        number[b] for b in order if representative[b] in dfa.finals
    )
    return Dfa(m, dfa.alphabet, delta, 1, finals)


def is_minimal(dfa: Dfa) -> bool:
    return minimize(dfa).n == dfa.n


def empty_state(dfa: Dfa) -> int | None:
    """The unique state accepting nothing, or ``None``; input must be minimal."""
    if not is_minimal(dfa):
        raise NotMinimalError("empty_state is defined on minimal DFAs")
    # Backward reachability from the final states.
    predecessors: dict[int, set[int]] = {q: set() for q in range(1, dfa.n + 1)}
    for letter in dfa.alphabet:
        t = dfa.delta[letter]
        for q in range(1, dfa.n + 1):
            img = t.apply(q)
            if img is not None:
                predecessors[img].add(q)
    alive = set(dfa.finals)
    stack = list(dfa.finals)
    while stack:
        q = stack.pop()
        for p in predecessors[q]:
            if p not in alive:
                alive.add(p)
                stack.append(p)
    dead = [q for q in range(1, dfa.n + 1) if q not in alive]
    if not dead:
        return None
    assert len(dead) == 1, "a minimal DFA has at most one empty state"
    return dead[0]


def to_idfa(dfa: Dfa) -> Idfa:
    """Remove the empty state, if any, turning its transitions undefined.

    A single-state automaton is returned unchanged even when empty, since
    removing the initial state would leave no automaton at all.
    """
    dead = empty_state(dfa)  # also enforces minimality
    if dead is None or dfa.n == 1:
        return Idfa(dfa.n, dfa.alphabet, dict(dfa.delta), dfa.initial, dfa.finals)

    renum = {q: (q if q < dead else q - 1) for q in range(1, dfa.n + 1) if q != dead}
    delta = {}
    for letter in dfa.alphabet:
        t = dfa.delta[letter]
        images = []
        for q in range(1, dfa.n + 1):
            if q == dead:
                continue
            img = t.apply(q)
            images.append(None if img == dead else renum[img])
        delta[letter] = Transformation(tuple(images))
    finals = frozenset(renum[q] for q in dfa.finals)
    return Idfa(dfa.n - 1, dfa.alphabet, delta, renum[dfa.initial], finals)


def to_dfa(idfa: Idfa) -> Dfa:
    """Complete an IDFA by routing undefined transitions to a fresh sink."""
    if all(t.is_total for t in idfa.delta.values()):
        return Dfa(idfa.n, idfa.alphabet, dict(idfa.delta), idfa.initial, idfa.finals)
    sink = idfa.n + 1
    delta = {}
    for letter in idfa.alphabet:
        t = idfa.delta[letter]
        images = tuple(sink if img is None else img for img in t.images) + (sink,)
        delta[letter] = Transformation(images)
    return Dfa(sink, idfa.alphabet, delta, idfa.initial, idfa.finals)


def transition_semigroup(auto: Automaton) -> Semigroup:
    """The semigroup of the letter transformations, with letter witnesses.

    A reducible DFA is minimized first so the result is the syntactic
    semigroup of its language; an already-minimal DFA keeps its own state
    numbering.
    """
    if isinstance(auto, Dfa):
        reduced = minimize(auto)
        source: Automaton = auto if reduced.n == auto.n else reduced
    else:
        source = auto
    if not source.alphabet:
        raise ValueError("transition semigroup needs at least one letter")
    return generate([source.delta[x] for x in source.alphabet])


@dataclass(frozen=True)
class ComplexityReport:
    """Quotient (kappa), syntactic (sigma) and monoid (mu) complexity."""

    kappa: int
    sigma: int
    mu: int

    def __post_init__(self) -> None:
        if self.kappa < 1:
            raise ValueError("kappa must be at least 1")
        if not self.mu - 1 <= self.sigma <= self.mu:
            raise ValueError("sigma must be mu or mu - 1")


def complexity_report(dfa: Dfa) -> ComplexityReport:
    reduced = minimize(dfa)
    if not reduced.alphabet:
        return ComplexityReport(kappa=reduced.n, sigma=0, mu=1)
    sg = generate(reduced.letter_transforms)
    sigma = len(sg)
    identity = Transformation.identity(reduced.n)
    mu = sigma if identity in sg else sigma + 1
    return ComplexityReport(kappa=reduced.n, sigma=sigma, mu=mu)


def is_star_free(dfa: Dfa) -> bool:
    """True iff every word acts aperiodically on the minimal DFA."""
    reduced = minimize(dfa)
    if not reduced.alphabet:
        return True
    return all(t.is_aperiodic() for t in generate(reduced.letter_transforms))


def restrict_letters(auto: Automaton, letters: Sequence[str]) -> Automaton:
    """The same automaton with the alphabet restricted to ``letters``."""
    for x in letters:
        if x not in auto.delta:
            raise UnknownLetterError(f"letter {x!r} not in alphabet")
    delta = {x: auto.delta[x] for x in letters}
    cls = Dfa if isinstance(auto, Dfa) else Idfa
    return cls(auto.n, tuple(letters), delta, auto.initial, auto.finals)


# ----------------------------------------------------------------------
# document encoding

_DOC_KEYS = {"states", "alphabet", "delta", "initial", "finals"}


def automaton_to_doc(auto: Automaton) -> dict:
    """Plain-data document for the JSON file format (``_`` = undefined)."""
    return {
        "states": auto.n,
        "alphabet": list(auto.alphabet),
        "delta": {
            x: ["_" if img is None else img for img in auto.delta[x].images]
            for x in auto.alphabet
        },
        "initial": auto.initial,
        "finals": sorted(auto.finals),
    }


def _doc_int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise AutomatonFormatError(f"{what} must be an integer, got {value!r}")
    return value


def automaton_from_doc(doc) -> Automaton:
    """Parse a document; returns an :class:`Idfa` iff any entry is ``_``."""
    if not isinstance(doc, dict):
        raise AutomatonFormatError("automaton document must be an object")
    missing = _DOC_KEYS - set(doc)
    if missing:
        raise AutomatonFormatError(f"missing fields: {sorted(missing)}")
    extra = set(doc) - _DOC_KEYS
    if extra:
        raise AutomatonFormatError(f"unexpected fields: {sorted(extra)}")
    n = _doc_int(doc["states"], "states")
    alphabet = doc["alphabet"]
    if not isinstance(alphabet, list) or not all(
        isinstance(x, str) and x for x in alphabet
    ):
        raise AutomatonFormatError("alphabet must be a list of non-empty strings")
    if len(set(alphabet)) != len(alphabet):
        raise AutomatonFormatError("alphabet has duplicate letters")
    if not isinstance(doc["delta"], dict):
        raise AutomatonFormatError("delta must be an object")
    delta = {}
    partial = False
    for letter in alphabet:
        if letter not in doc["delta"]:
            raise AutomatonFormatError(f"delta missing letter {letter!r}")
        row = doc["delta"][letter]
        if not isinstance(row, list) or len(row) != n:
            raise AutomatonFormatError(f"delta[{letter!r}] must list {n} images")
        images: list[int | None] = []
        for value in row:
            if value == "_":
                images.append(None)
                partial = True
            else:
                images.append(_doc_int(value, f"delta[{letter!r}] image"))
        delta[letter] = images
    if set(doc["delta"]) != set(alphabet):
        raise AutomatonFormatError("delta letters do not match the alphabet")
    initial = _doc_int(doc["initial"], "initial")
    if not isinstance(doc["finals"], list):
        raise AutomatonFormatError("finals must be a list")
    finals = [_doc_int(q, "final state") for q in doc["finals"]]
    cls = Idfa if partial else Dfa
    try:
        return cls.from_images(delta, initial, finals) if delta else cls(
            n, (), {}, initial, frozenset(finals)
        )
    except ValueError as exc:
        raise AutomatonFormatError(str(exc)) from None
