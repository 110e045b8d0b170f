"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from starfree.automata import Dfa
from starfree.transform import Transformation


def total_transformations(n: int):
    return st.tuples(*[st.integers(1, n)] * n).map(Transformation)


def partial_transformations(n: int):
    entry = st.one_of(st.none(), st.integers(1, n))
    return st.tuples(*[entry] * n).map(Transformation)


def any_transformations(n: int):
    return st.one_of(total_transformations(n), partial_transformations(n))


@st.composite
def small_dfas(draw, max_n: int = 4, letters: tuple[str, ...] = ("a", "b")):
    n = draw(st.integers(1, max_n))
    delta = {x: draw(total_transformations(n)) for x in letters}
    initial = draw(st.integers(1, n))
    finals = draw(st.sets(st.integers(1, n)))
    return Dfa(n, letters, delta, initial, frozenset(finals))
