"""A small gallery of automata exercising the classification hierarchy.

Each builder returns a fresh automaton; docstrings state the language or
the property the automaton exhibits.  They double as the fixtures for the
verification sweep.
"""

from __future__ import annotations

from .automata import Dfa, Idfa


def two_state_monotonic_idfa() -> Idfa:
    """Incomplete two-state automaton whose partial letters are monotonic."""
    return Idfa.from_images(
        {"a": (None, 1), "b": (2, None), "c": (2, 2)}, initial=1, finals=[1]
    )


def completed_two_state() -> Dfa:
    """Completion of :func:`two_state_monotonic_idfa` with sink state 3;
    partially monotonic but not monotonic."""
    return Dfa.from_images(
        {"a": (3, 1, 3), "b": (2, 3, 3), "c": (2, 2, 3)}, initial=1, finals=[1]
    )


def completed_two_state_with_reset() -> Dfa:
    """:func:`completed_two_state` plus a constant letter; nearly monotonic
    but not partially monotonic."""
    return Dfa.from_images(
        {"a": (3, 1, 3), "b": (2, 3, 3), "c": (2, 2, 3), "d": (1, 1, 1)},
        initial=1,
        finals=[1],
    )


def monotonic_with_dead_state() -> Dfa:
    """Monotonic four-state automaton whose state 1 accepts nothing."""
    return Dfa.from_images(
        {"a": (1, 3, 3, 3), "b": (1, 1, 4, 4)}, initial=2, finals=[3]
    )


def star_free_not_nearly_monotonic() -> Dfa:
    """Aperiodic three-state automaton admitting no monotonic order; it has
    neither constant letters nor a dead state, so it sits outside the whole
    monotonic hierarchy.  Accepts a(e + X*b) + bX*b over X = {a, b}."""
    return Dfa.from_images({"a": (3, 2, 2), "b": (2, 3, 3)}, initial=1, finals=[3])


def union_operand_one() -> Dfa:
    """Accepts a(e + X*b); monotonic.  Its union with
    :func:`union_operand_two` is star-free but not nearly monotonic."""
    return Dfa.from_images(
        {"a": (2, 3, 3, 4), "b": (4, 2, 2, 4)}, initial=1, finals=[2]
    )


def union_operand_two() -> Dfa:
    """Accepts bX*b; monotonic, and disjoint from :func:`union_operand_one`."""
    return Dfa.from_images(
        {"a": (4, 2, 2, 4), "b": (2, 3, 3, 4)}, initial=1, finals=[3]
    )


def concat_operand_one() -> Dfa:
    """Monotonic three-state automaton with a constant letter."""
    return Dfa.from_images({"a": (1, 1, 1), "b": (2, 3, 3)}, initial=1, finals=[2])


def concat_operand_two() -> Dfa:
    """Monotonic three-state automaton with a dead state."""
    return Dfa.from_images({"a": (1, 1, 3), "b": (2, 3, 3)}, initial=1, finals=[2])


def concat_counterexample() -> Dfa:
    """Quotient automaton of concat_operand_one . concat_operand_two;
    star-free but not nearly monotonic."""
    return Dfa.from_images(
        {"a": (1, 5, 5, 1, 5, 5), "b": (2, 3, 4, 4, 6, 3)},
        initial=1,
        finals=[3, 6],
    )


def words_ending_in_a() -> Dfa:
    """X*a over X = {a, b}; syntactic complexity 2."""
    return Dfa.from_images({"a": (2, 2), "b": (1, 1)}, initial=1, finals=[2])


def words_containing_a() -> Dfa:
    """X*aX* over X = {a, b}; syntactic complexity 2."""
    return Dfa.from_images({"a": (2, 2), "b": (1, 2)}, initial=1, finals=[2])


def a_after_last_b() -> Dfa:
    """X*a(a + c)* over X = {a, b, c}; syntactic complexity 3."""
    return Dfa.from_images(
        {"a": (2, 2), "b": (1, 1), "c": (1, 2)}, initial=1, finals=[2]
    )


def double_a() -> Dfa:
    """The single word aa over {a}; its star is not star-free."""
    return Dfa.from_images({"a": (2, 3, 4, 4)}, initial=1, finals=[3])
