"""Total and partial transformations of a finite set {1, ..., n}.

A transformation is identified with its image vector: position k holds the
image of state k (1-based), or ``None`` where the map is undefined.  The
textual form is a bracketed comma list with ``_`` for an undefined image,
e.g. ``[2,3,_]``.  Composition reads left to right: ``a * b`` sends i to
b(a(i)), and an undefined intermediate value stays undefined.

Aperiodic transformations (no cycle of length two or more) are in bijection
with labeled rooted forests: map every non-root node to its parent and every
root to itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotAperiodicError, SizeMismatchError, TransformationParseError

#: Ground-set ceiling for exhaustive enumeration; the aperiodic count is
#: (n+1)^(n-1), which is already 262144 at n = 7.
MAX_ENUMERATION_N = 7


@dataclass(frozen=True)
class Transformation:
    """A partial self-map of {1, ..., n}; total when no image is ``None``."""

    images: tuple[int | None, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if n < 1:
            raise ValueError("a transformation needs at least one state")
        for img in self.images:
            if img is None:
                continue
            if not isinstance(img, int) or isinstance(img, bool) or not 1 <= img <= n:
                raise ValueError(f"image {img!r} outside 1..{n}")

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def of(cls, *images: int | None) -> "Transformation":
        return cls(tuple(images))

    @classmethod
    def identity(cls, n: int) -> "Transformation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def constant(cls, n: int, target: int) -> "Transformation":
        """The map sending every state to ``target``."""
        return cls((target,) * n)

    @classmethod
    def singular(cls, n: int, source: int, target: int) -> "Transformation":
        """The map sending ``source`` to ``target`` and fixing all others."""
        return cls(tuple(target if i == source else i for i in range(1, n + 1)))

    @classmethod
    def from_cycle(cls, n: int, cycle: Sequence[int]) -> "Transformation":
        """The permutation cycling through ``cycle`` and fixing all others."""
        images = list(range(1, n + 1))
        for pos, state in enumerate(cycle):
            images[state - 1] = cycle[(pos + 1) % len(cycle)]
        return cls(tuple(images))

    @classmethod
    def empty_map(cls, n: int) -> "Transformation":
        return cls((None,) * n)

    @classmethod
    def parse(cls, text: str) -> "Transformation":
        """Parse the ``[i1,...,in]`` encoding; ``_`` marks an undefined image."""
        stripped = text.strip()
        if not (stripped.startswith("[") and stripped.endswith("]")):
            raise TransformationParseError(f"expected a bracketed list, got {text!r}")
        body = stripped[1:-1]
        if not body.strip():
            raise TransformationParseError("empty transformation")
        images: list[int | None] = []
        for token in body.split(","):
            token = token.strip()
            if token == "_":
                images.append(None)
            else:
                try:
                    images.append(int(token))
                except ValueError:
                    raise TransformationParseError(f"bad image token {token!r}") from None
        try:
            return cls(tuple(images))
        except ValueError as exc:
            raise TransformationParseError(str(exc)) from None

    # ------------------------------------------------------------------
    # queries

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def is_total(self) -> bool:
        return None not in self.images

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(i for i, img in enumerate(self.images, start=1) if img is not None)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(img for img in self.images if img is not None)

    def apply(self, state: int) -> int | None:
        if not 1 <= state <= self.n:
            raise ValueError(f"state {state} outside 1..{self.n}")
        return self.images[state - 1]

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def is_constant(self) -> bool:
        first = self.images[0]
        return first is not None and all(img == first for img in self.images)

    def is_permutation(self) -> bool:
        return self.is_total and len(set(self.images)) == self.n

    def is_aperiodic(self) -> bool:
        """True iff no set of two or more states is cycled onto itself."""
        return _images_aperiodic(self.images)

    # ------------------------------------------------------------------
    # algebra and ordering

    def __mul__(self, other: "Transformation") -> "Transformation":
        return compose(self, other)

    def sort_key(self) -> tuple[int, ...]:
        """Lexicographic key; an undefined image sorts before image 1."""
        return tuple(0 if img is None else img for img in self.images)

    def __lt__(self, other: "Transformation") -> bool:
        if self.n != other.n:
            raise SizeMismatchError(f"cannot order sizes {self.n} and {other.n}")
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "[" + ",".join("_" if img is None else str(img) for img in self.images) + "]"


def compose(t1: Transformation, t2: Transformation) -> Transformation:
    """Apply ``t1`` first, then ``t2``; undefined values are absorbing."""
    if t1.n != t2.n:
        raise SizeMismatchError(f"cannot compose sizes {t1.n} and {t2.n}")
    return Transformation(
        tuple(None if img is None else t2.images[img - 1] for img in t1.images)
    )


def _images_aperiodic(images: tuple[int | None, ...]) -> bool:
    # Follow each orbit until it leaves the domain or revisits a state of the
    # current walk; a revisit at distance greater than one is a real cycle.
    for start in range(1, len(images) + 1):
        depth_of: dict[int, int] = {}
        state: int | None = start
        depth = 0
        while state is not None and state not in depth_of:
            depth_of[state] = depth
            depth += 1
            state = images[state - 1]
        if state is not None and depth - depth_of[state] > 1:
            return False
    return True


# ----------------------------------------------------------------------
# forests


@dataclass(frozen=True)
class Forest:
    """A labeled rooted forest on nodes {1, ..., n}; ``None`` marks a root."""

    parents: tuple[int | None, ...]

    def __post_init__(self) -> None:
        n = len(self.parents)
        if n < 1:
            raise ValueError("a forest needs at least one node")
        for parent in self.parents:
            if parent is None:
                continue
            if not isinstance(parent, int) or isinstance(parent, bool) or not 1 <= parent <= n:
                raise ValueError(f"parent {parent!r} outside 1..{n}")
        if not _parents_acyclic(self.parents):
            raise ValueError("parent relation contains a cycle")

    @property
    def n(self) -> int:
        return len(self.parents)

    @property
    def roots(self) -> frozenset[int]:
        return frozenset(i for i, p in enumerate(self.parents, start=1) if p is None)


def _parents_acyclic(parents: tuple[int | None, ...]) -> bool:
    n = len(parents)
    for start in range(1, n + 1):
        node: int | None = start
        steps = 0
        while node is not None:
            node = parents[node - 1]
            steps += 1
            if steps > n:
                return False
    return True


def forest_to_transformation(forest: Forest) -> Transformation:
    """Map every node to its parent and every root to itself."""
    return Transformation(
        tuple(i if p is None else p for i, p in enumerate(forest.parents, start=1))
    )


def transformation_to_forest(t: Transformation) -> Forest:
    """Inverse of :func:`forest_to_transformation`; requires a total aperiodic map."""
    if not t.is_total:
        raise ValueError("only total transformations correspond to forests")
    if not t.is_aperiodic():
        raise NotAperiodicError(f"{t} contains a nontrivial cycle")
    return Forest(tuple(None if img == i else img for i, img in enumerate(t.images, start=1)))


# ----------------------------------------------------------------------
# enumeration


def _check_enumeration_size(n: int) -> None:
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"enumeration supported for 1 <= n <= {MAX_ENUMERATION_N}, got {n}")


def enumerate_aperiodic(n: int) -> list[Transformation]:
    """All aperiodic total transformations of {1, ..., n}, lexicographically."""
    _check_enumeration_size(n)
    return [
        Transformation(images)
        for images in itertools.product(range(1, n + 1), repeat=n)
        if _images_aperiodic(images)
    ]


def enumerate_forests(n: int) -> list[Forest]:
    """All labeled rooted forests on {1, ..., n}.

    Enumerates parent vectors directly and keeps the acyclic ones, so the
    count is independent of the transformation-based enumeration.
    """
    _check_enumeration_size(n)
    choices = [
        [None] + [p for p in range(1, n + 1) if p != node] for node in range(1, n + 1)
    ]
    return [
        Forest(parents)
        for parents in itertools.product(*choices)
        if _parents_acyclic(parents)
    ]
