"""Transformation semigroups: closure generation, membership, witnesses.

Closure is computed breadth first over word length (frontier times
generators), so every element carries a shortest witness word; ties between
equal-length words are broken lexicographically on generator indices.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import ClosureLimitError, SizeMismatchError
from .transform import Transformation, compose, enumerate_aperiodic

#: Closure abort threshold; generous for every documented use (the largest
#: family closure has 1007 elements) while catching runaway inputs.
DEFAULT_ELEMENT_CEILING = 200_000


class Semigroup:
    """A finite, composition-closed set of transformations.

    ``elements`` is ordered by first discovery (shortest witness word, ties
    by generator index), which keeps reports reproducible.  Instances are
    immutable; build them with :func:`generate`.
    """

    __slots__ = ("n", "generators", "elements", "_witness", "_members")

    def __init__(
        self,
        n: int,
        generators: tuple[Transformation, ...],
        elements: tuple[Transformation, ...],
        witness: dict[Transformation, tuple[int, ...]],
    ):
        self.n = n
        self.generators = generators
        self.elements = elements
        self._witness = witness
        self._members = frozenset(elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Transformation]:
        return iter(self.elements)

    def __contains__(self, t: object) -> bool:
        return t in self._members

    @property
    def element_set(self) -> frozenset[Transformation]:
        return self._members

    def witness(self, t: Transformation) -> tuple[int, ...]:
        """Generator indices of a shortest word producing ``t``."""
        return self._witness[t]

    def witness_word(self, t: Transformation, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"g{i}" for i in range(len(self.generators))]
        return " ".join(names[i] for i in self.witness(t))


def generate(
    generators: Iterable[Transformation],
    *,
    max_elements: int = DEFAULT_ELEMENT_CEILING,
) -> Semigroup:
    """Close ``generators`` under composition.

    Raises :class:`ClosureLimitError` past ``max_elements`` and
    :class:`SizeMismatchError` on mixed ground-set sizes.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("at least one generator is required")
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise SizeMismatchError(f"generators mix sizes {n} and {g.n}")

    witness: dict[Transformation, tuple[int, ...]] = {}
    order: list[Transformation] = []
    for idx, g in enumerate(gens):
        if g not in witness:
            witness[g] = (idx,)
            order.append(g)

    frontier = list(order)
    while frontier:
        fresh: list[Transformation] = []
        for t in frontier:
            base = witness[t]
            for j, g in enumerate(gens):
                product = compose(t, g)
                if product in witness:
                    continue
                witness[product] = base + (j,)
                fresh.append(product)
                if len(witness) > max_elements:
                    raise ClosureLimitError(
                        f"closure exceeded {max_elements} elements"
                    )
        order.extend(fresh)
        frontier = fresh

    return Semigroup(n, tuple(gens), tuple(order), witness)


def is_aperiodic_semigroup(s: Semigroup) -> bool:
    return all(t.is_aperiodic() for t in s)


def is_minimal_generating_set(generators: Iterable[Transformation]) -> bool:
    """True iff dropping any distinct generator strictly shrinks the closure."""
    distinct: list[Transformation] = []
    for g in generators:
        if g not in distinct:
            distinct.append(g)
    if not distinct:
        raise ValueError("at least one generator is required")
    full_size = len(generate(distinct))
    for g in distinct:
        rest = [x for x in distinct if x != g]
        if not rest:
            continue  # removing the only generator empties the semigroup
        if len(generate(rest)) >= full_size:
            return False
    return True


def _closure_stays_aperiodic(
    seed: Sequence[Transformation], gens: Sequence[Transformation]
) -> bool:
    """Right-multiplication closure of ``seed`` by ``gens``, aborting on the
    first non-aperiodic element.  ``seed`` must contain every generator."""
    elements = set(seed)
    queue = list(seed)
    at = 0
    while at < len(queue):
        t = queue[at]
        at += 1
        for g in gens:
            product = compose(t, g)
            if product in elements:
                continue
            if not product.is_aperiodic():
                return False
            elements.add(product)
            queue.append(product)
    return True


def is_locally_maximal_aperiodic(s: Semigroup) -> tuple[bool, Transformation | None]:
    """Whether no aperiodic total transformation can be added to ``s`` without
    the closure acquiring a cycle.

    Returns ``(True, None)`` or ``(False, t)`` with a transformation whose
    addition keeps the closure aperiodic.  Requires ``s`` to be aperiodic and
    made of total transformations.
    """
    for t in s:
        if not t.is_total:
            raise ValueError("local maximality is defined over total transformations")
        if not t.is_aperiodic():
            raise ValueError("local maximality requires an aperiodic semigroup")
    gens = list(s.generators) if s.generators else list(s.elements)
    for candidate in enumerate_aperiodic(s.n):
        if candidate in s:
            continue
        seed = list(s.elements) + [candidate]
        if _closure_stays_aperiodic(seed, gens + [candidate]):
            return False, candidate
    return True, None
