"""Language operations on automata: boolean combinations, concatenation,
star, left quotients, and equivalence.

Binary boolean operations use the pairwise product construction;
concatenation and star go through an NFA and the subset construction.
Every operation returns a minimized DFA, since classification and the
complexity measures are defined on quotient DFAs.  Equivalence is decided
by reachability over the product, independent of minimization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .automata import Dfa, minimize
from .errors import AlphabetMismatchError, UnknownLetterError
from .transform import Transformation


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton used by the concatenation/star plumbing."""

    n: int
    alphabet: tuple[str, ...]
    delta: Mapping[str, tuple[frozenset[int], ...]]
    initials: frozenset[int]
    finals: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", dict(self.delta))
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.n < 1:
            raise ValueError("an NFA needs at least one state")
        if set(self.delta) != set(self.alphabet):
            raise ValueError("delta letters do not match the alphabet")
        for letter, rows in self.delta.items():
            if len(rows) != self.n:
                raise ValueError(f"delta[{letter!r}] must list {self.n} target sets")
            for targets in rows:
                for q in targets:
                    if not 1 <= q <= self.n:
                        raise ValueError(f"state {q} outside 1..{self.n}")
        for q in self.initials | self.finals:
            if not 1 <= q <= self.n:
                raise ValueError(f"state {q} outside 1..{self.n}")


def determinize(nfa: Nfa) -> Dfa:
    """Subset construction; the empty subset acts as the sink."""
    start = nfa.initials
    numbering: dict[frozenset[int], int] = {start: 1}
    order: list[frozenset[int]] = [start]
    at = 0
    while at < len(order):
        subset = order[at]
        at += 1
        for letter in nfa.alphabet:
            rows = nfa.delta[letter]
            target = frozenset().union(*(rows[q - 1] for q in subset)) if subset else frozenset()
            if target not in numbering:
                numbering[target] = len(numbering) + 1
                order.append(target)
    delta = {}
    for letter in nfa.alphabet:
        rows = nfa.delta[letter]
        images = []
        for subset in order:
            target = frozenset().union(*(rows[q - 1] for q in subset)) if subset else frozenset()
            images.append(numbering[target])
        delta[letter] = Transformation(tuple(images))
    finals = frozenset(
        numbering[subset] for subset in order if subset & nfa.finals
    )
    return Dfa(len(order), nfa.alphabet, delta, 1, finals)


def _common_alphabet(a: Dfa, b: Dfa) -> tuple[str, ...]:
    if set(a.alphabet) != set(b.alphabet):
        raise AlphabetMismatchError(
            f"alphabets differ: {sorted(a.alphabet)} vs {sorted(b.alphabet)}"
        )
    return a.alphabet


_BOOLEAN_OPS = {
    "union": lambda fa, fb: fa or fb,
    "intersection": lambda fa, fb: fa and fb,
    "difference": lambda fa, fb: fa and not fb,
    "symmetric_difference": lambda fa, fb: fa != fb,
}


def boolean_op(a: Dfa, b: Dfa, op: str) -> Dfa:
    """Product construction for ``op`` in union/intersection/difference/
    symmetric_difference, minimized."""
    if op not in _BOOLEAN_OPS:
        raise ValueError(f"unknown boolean operation {op!r}")
    keep = _BOOLEAN_OPS[op]
    alphabet = _common_alphabet(a, b)

    numbering: dict[tuple[int, int], int] = {(a.initial, b.initial): 1}
    order = [(a.initial, b.initial)]
    at = 0
    while at < len(order):
        p, q = order[at]
        at += 1
        for letter in alphabet:
            pair = (a.delta[letter].apply(p), b.delta[letter].apply(q))
            if pair not in numbering:
                numbering[pair] = len(numbering) + 1
                order.append(pair)
    delta = {}
    for letter in alphabet:
        images = []
        for p, q in order:
            images.append(numbering[(a.delta[letter].apply(p), b.delta[letter].apply(q))])
        delta[letter] = Transformation(tuple(images))
    finals = frozenset(
        numbering[(p, q)] for p, q in order if keep(p in a.finals, q in b.finals)
    )
    return minimize(Dfa(len(order), alphabet, delta, 1, finals))


def union(a: Dfa, b: Dfa) -> Dfa:
    return boolean_op(a, b, "union")


def intersection(a: Dfa, b: Dfa) -> Dfa:
    return boolean_op(a, b, "intersection")


def difference(a: Dfa, b: Dfa) -> Dfa:
    return boolean_op(a, b, "difference")


def symmetric_difference(a: Dfa, b: Dfa) -> Dfa:
    return boolean_op(a, b, "symmetric_difference")


def complement(a: Dfa) -> Dfa:
    flipped = frozenset(range(1, a.n + 1)) - a.finals
    return minimize(Dfa(a.n, a.alphabet, dict(a.delta), a.initial, flipped))


def concat(a: Dfa, b: Dfa) -> Dfa:
    """Language concatenation via an NFA that may enter ``b`` whenever a
    final state of ``a`` has been reached."""
    alphabet = _common_alphabet(a, b)
    n = a.n + b.n
    shift = a.n  # b's state q becomes q + shift

    delta: dict[str, tuple[frozenset[int], ...]] = {}
    for letter in alphabet:
        rows: list[frozenset[int]] = []
        for p in range(1, a.n + 1):
            target = a.delta[letter].apply(p)
            row = {target}
            if target in a.finals:
                row.add(b.initial + shift)
            rows.append(frozenset(row))
        for q in range(1, b.n + 1):
            rows.append(frozenset({b.delta[letter].apply(q) + shift}))
        delta[letter] = tuple(rows)

    initials = {a.initial}
    if a.initial in a.finals:
        initials.add(b.initial + shift)
    finals = {q + shift for q in b.finals}
    if b.initial in b.finals:
        finals |= set(range(1, a.n + 1)) & a.finals
    nfa = Nfa(n, alphabet, delta, frozenset(initials), frozenset(finals))
    return minimize(determinize(nfa))


def star(a: Dfa) -> Dfa:
    """Kleene star via a fresh accepting start state and loop-back edges."""
    fresh = a.n + 1
    delta: dict[str, tuple[frozenset[int], ...]] = {}
    for letter in a.alphabet:
        rows: list[frozenset[int]] = []
        for p in range(1, a.n + 1):
            target = a.delta[letter].apply(p)
            row = {target}
            if target in a.finals:
                row.add(a.initial)
            rows.append(frozenset(row))
        start_target = a.delta[letter].apply(a.initial)
        start_row = {start_target}
        if start_target in a.finals:
            start_row.add(a.initial)
        rows.append(frozenset(start_row))
        delta[letter] = tuple(rows)
    nfa = Nfa(
        fresh,
        a.alphabet,
        delta,
        frozenset({fresh}),
        a.finals | frozenset({fresh}),
    )
    return minimize(determinize(nfa))


def left_quotient(a: Dfa, word: Iterable[str]) -> Dfa:
    """The language of suffixes completing ``word``, minimized."""
    state = a.initial
    for letter in word:
        if letter not in a.delta:
            raise UnknownLetterError(f"letter {letter!r} not in alphabet")
        state = a.delta[letter].apply(state)
    return minimize(Dfa(a.n, a.alphabet, dict(a.delta), state, a.finals))


def equivalent(a: Dfa, b: Dfa) -> bool:
    """Language equality, decided by product reachability."""
    alphabet = _common_alphabet(a, b)
    seen = {(a.initial, b.initial)}
    queue = [(a.initial, b.initial)]
    at = 0
    while at < len(queue):
        p, q = queue[at]
        at += 1
        if (p in a.finals) != (q in b.finals):
            return False
        for letter in alphabet:
            pair = (a.delta[letter].apply(p), b.delta[letter].apply(q))
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True
