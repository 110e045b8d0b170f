"""Order-compatibility of transformation sets and the language hierarchy.

A set of (partial) transformations is monotonic when one total order on the
states makes every member order-preserving on its domain.  The search for
such an order is exact: states are placed rank by rank with backtracking,
and a placement is rejected as soon as any decided constraint fails, so the
result agrees with trying all n! orders.

Languages are classified through their quotient DFA: monotonic (the letter
transformations admit an order), partially monotonic (the letters of the
quotient IDFA, i.e. after removing the empty state, admit one), nearly
monotonic (partially monotonic once constant letters are dropped), and
star-free (aperiodic transition semigroup).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .automata import Dfa, is_star_free, minimize, restrict_letters, to_idfa
from .errors import SizeMismatchError
from .transform import Transformation

#: Order search is exponential; this cap keeps it honest.
MAX_ORDER_SEARCH_N = 10

Order = tuple[int, ...]


def check_order(ts: Sequence[Transformation], order: Order) -> bool:
    """Verify that every transformation preserves ``order`` on its domain.

    ``order`` lists the states from smallest to largest.
    """
    if not ts:
        return True
    n = ts[0].n
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"order {order!r} is not a permutation of 1..{n}")
    rank = {state: pos for pos, state in enumerate(order)}
    for t in ts:
        if t.n != n:
            raise SizeMismatchError(f"transformations mix sizes {n} and {t.n}")
        dom = sorted(t.domain, key=rank.__getitem__)
        for i, p in enumerate(dom):
            for q in dom[i + 1 :]:
                if rank[t.apply(p)] > rank[t.apply(q)]:
                    return False
    return True


def find_monotonic_order(ts: Sequence[Transformation]) -> Order | None:
    """An order making every transformation monotonic, or ``None``.

    Deterministic: among all witnesses the lexicographically least state
    sequence is returned.
    """
    ts = list(ts)
    if not ts:
        raise ValueError("need at least one transformation (or use a known n)")
    n = ts[0].n
    for t in ts:
        if t.n != n:
            raise SizeMismatchError(f"transformations mix sizes {n} and {t.n}")
    if n > MAX_ORDER_SEARCH_N:
        raise ValueError(f"order search supported up to n = {MAX_ORDER_SEARCH_N}")

    images = [t.images for t in ts]
    placed: list[int] = []
    rank: dict[int, int] = {}

    def consistent() -> bool:
        # Unplaced states sit above every placed one, so a placed image that
        # should dominate an unplaced image is already a contradiction.
        for imgs in images:
            for i, p in enumerate(placed):
                tp = imgs[p - 1]
                if tp is None:
                    continue
                for q in placed[i + 1 :]:
                    tq = imgs[q - 1]
                    if tq is None:
                        continue
                    rq = rank.get(tq)
                    if rq is None:
                        continue
                    rp = rank.get(tp)
                    if rp is None or rp > rq:
                        return False
        return True

    def search() -> bool:
        if len(placed) == n:
            return True
        for state in range(1, n + 1):
            if state in rank:
                continue
            rank[state] = len(placed)
            placed.append(state)
            if consistent() and search():
                return True
            placed.pop()
            del rank[state]
        return False

    return tuple(placed) if search() else None


@dataclass(frozen=True)
class Classification:
    """Where an automaton's language sits in the monotonic hierarchy."""

    monotonic: bool
    monotonic_order: Order | None
    partially_monotonic: bool
    partial_order: Order | None
    nearly_monotonic: bool
    nearly_order: Order | None
    removed_letters: tuple[str, ...]
    star_free: bool

    def flags(self) -> tuple[bool, bool, bool, bool]:
        return (
            self.monotonic,
            self.partially_monotonic,
            self.nearly_monotonic,
            self.star_free,
        )


def _order_for(ts: Sequence[Transformation], n: int) -> Order | None:
    if not ts:
        return tuple(range(1, n + 1))
    return find_monotonic_order(ts)


def classify(dfa: Dfa) -> Classification:
    """Classify the language of ``dfa`` (minimized internally)."""
    m = minimize(dfa)

    mono = _order_for(m.letter_transforms, m.n)

    incomplete = to_idfa(m)
    partial = _order_for(incomplete.letter_transforms, incomplete.n)

    removed = tuple(x for x in m.alphabet if m.delta[x].is_constant())
    if removed:
        kept = [x for x in m.alphabet if x not in removed]
        trimmed = minimize(restrict_letters(m, kept))
        trimmed_idfa = to_idfa(trimmed)
        nearly = _order_for(trimmed_idfa.letter_transforms, trimmed_idfa.n)
    else:
        nearly = partial

    return Classification(
        monotonic=mono is not None,
        monotonic_order=mono,
        partially_monotonic=partial is not None,
        partial_order=partial,
        nearly_monotonic=nearly is not None,
        nearly_order=nearly,
        removed_letters=removed,
        star_free=is_star_free(m),
    )
