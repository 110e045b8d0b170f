"""Exhaustive search for the largest aperiodic transformation semigroups
generated by at most k transformations of an n-set, plus the pairwise
conflict analysis that bounds them by hand at small sizes.

The search enumerates generator sets as combinations of the aperiodic
transformations in lexicographic order and prunes only when a skipped set
provably cannot help:

* a candidate conflicting with a chosen generator (some product of the pair
  has a cycle) would put that cycle into the closure;
* once a set's closure contains a cycle, so does every superset's.

No conjectured bound is ever used for pruning, so the search can refute a
conjecture rather than assume it.  Among all generator sets reaching the
maximum, the lexicographically smallest one is reported; candidate sets are
partitioned across workers by their first generator, and results merge by
(size, then lexicographic) so the outcome is independent of scheduling.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from multiprocessing import Pool
from pathlib import Path
from typing import Iterable, Sequence

from .errors import BudgetExceededError
from .transform import Transformation, _images_aperiodic, enumerate_aperiodic

#: Desk-scale search budget; anything beyond needs an explicit override.
def within_default_budget(n: int, k: int) -> bool:
    return n <= 3 or (n == 4 and k <= 4) or (n == 5 and k <= 2)


#: Reference maxima recorded from independent verified computations; used
#: only to label results, never to prune or steer the search.
REFERENCE_MAXIMA = {
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
    (4, 3): 31,
    (4, 4): 34,
    (5, 1): 5,
    (5, 2): 62,
}


@dataclass(frozen=True)
class SearchResult:
    n: int
    k: int
    best_size: int
    best_generators: tuple[Transformation, ...]
    explored: int


# ----------------------------------------------------------------------
# raw-tuple machinery (kept picklable and per-process cached)

_APERIODIC_MEMO: dict[tuple[int, ...], bool] = {}


def _aperiodic(images: tuple[int, ...]) -> bool:
    cached = _APERIODIC_MEMO.get(images)
    if cached is None:
        cached = _images_aperiodic(images)
        _APERIODIC_MEMO[images] = cached
    return cached


@lru_cache(maxsize=4)
def _candidates(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(t.images for t in enumerate_aperiodic(n))


@lru_cache(maxsize=4)
def _conflict_masks(n: int) -> tuple[int, ...]:
    """Bit j of mask i is set when candidates i and j conflict."""
    cands = _candidates(n)
    m = len(cands)
    masks = [0] * m
    for i in range(m):
        ti = cands[i]
        for j in range(i + 1, m):
            tj = cands[j]
            ij = tuple(tj[v - 1] for v in ti)
            ji = tuple(ti[v - 1] for v in tj)
            if not (_aperiodic(ij) and _aperiodic(ji)):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return tuple(masks)


def _close_or_none(
    seed: Iterable[tuple[int, ...]], gens: Sequence[tuple[int, ...]]
) -> frozenset[tuple[int, ...]] | None:
    """Right-multiplication closure, or ``None`` as soon as a product has a
    cycle.  ``seed`` must contain every generator."""
    elements = set(seed)
    queue = list(elements)
    at = 0
    while at < len(queue):
        t = queue[at]
        at += 1
        for g in gens:
            product = tuple(g[v - 1] for v in t)
            if product in elements:
                continue
            if not _aperiodic(product):
                return None
            elements.add(product)
            queue.append(product)
    return frozenset(elements)


def _explore_root(n: int, k: int, root: int) -> tuple[int, tuple[int, ...], int]:
    """Best (size, generator indices, explored count) over all candidate sets
    whose smallest generator index is ``root``."""
    cands = _candidates(n)
    masks = _conflict_masks(n) if k > 1 else None
    best_size = 0
    best_idxs: tuple[int, ...] = ()
    explored = 0

    def record(idxs: tuple[int, ...], size: int) -> None:
        nonlocal best_size, best_idxs
        if size > best_size:
            best_size = size
            best_idxs = idxs

    def extend(
        idxs: tuple[int, ...],
        chosen_mask: int,
        closure: frozenset[tuple[int, ...]],
        gens: tuple[tuple[int, ...], ...],
    ) -> None:
        nonlocal explored
        record(idxs, len(closure))
        if len(idxs) == k:
            return
        for j in range(idxs[-1] + 1, len(cands)):
            if masks is not None and masks[j] & chosen_mask:
                continue
            new_gens = gens + (cands[j],)
            explored += 1
            new_closure = _close_or_none(closure | {cands[j]}, new_gens)
            if new_closure is None:
                continue
            extend(idxs + (j,), chosen_mask | (1 << j), new_closure, new_gens)

    explored += 1
    seed_gens = (cands[root],)
    closure = _close_or_none({cands[root]}, seed_gens)
    assert closure is not None  # powers of an aperiodic map stay aperiodic
    extend((root,), 1 << root, closure, seed_gens)
    return best_size, best_idxs, explored


def _explore_task(args: tuple[int, int, int]) -> tuple[int, tuple[int, tuple[int, ...], int]]:
    n, k, root = args
    return root, _explore_root(n, k, root)


# ----------------------------------------------------------------------
# checkpointing


def _load_checkpoint(path: Path, n: int, k: int) -> dict[int, tuple[int, list[int], int]]:
    if not path.exists():
        return {}
    doc = json.loads(path.read_text())
    if doc.get("n") != n or doc.get("k") != k:
        raise ValueError(f"checkpoint {path} was written for n={doc.get('n')}, k={doc.get('k')}")
    return {
        int(root): (entry["size"], list(entry["generators"]), entry["explored"])
        for root, entry in doc.get("roots", {}).items()
    }


def _write_checkpoint(
    path: Path, n: int, k: int, done: dict[int, tuple[int, list[int], int]]
) -> None:
    doc = {
        "n": n,
        "k": k,
        "roots": {
            str(root): {"size": size, "generators": idxs, "explored": explored}
            for root, (size, idxs, explored) in sorted(done.items())
        },
    }
    path.write_text(json.dumps(doc))


# ----------------------------------------------------------------------
# public interface


def max_aperiodic(
    n: int,
    k: int,
    *,
    override_budget: bool = False,
    workers: int = 1,
    checkpoint: str | Path | None = None,
) -> SearchResult:
    """Exact maximum closure size over aperiodic generator sets of size <= k.

    Raises :class:`BudgetExceededError` outside the default budget unless
    ``override_budget`` is set.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be at least 1")
    if not within_default_budget(n, k) and not override_budget:
        raise BudgetExceededError(
            f"(n={n}, k={k}) is outside the default budget; pass override_budget"
        )
    cands = _candidates(n)
    roots = list(range(len(cands)))

    done: dict[int, tuple[int, list[int], int]] = {}
    path = Path(checkpoint) if checkpoint is not None else None
    if path is not None:
        done = _load_checkpoint(path, n, k)

    pending = [r for r in roots if r not in done]
    if workers > 1 and pending:
        with Pool(processes=workers) as pool:
            for root, (size, idxs, explored) in pool.imap(
                _explore_task, [(n, k, r) for r in pending]
            ):
                done[root] = (size, list(idxs), explored)
                if path is not None:
                    _write_checkpoint(path, n, k, done)
    else:
        for root in pending:
            size, idxs, explored = _explore_root(n, k, root)
            done[root] = (size, list(idxs), explored)
            if path is not None:
                _write_checkpoint(path, n, k, done)

    best_size = 0
    best_idxs: tuple[int, ...] = ()
    explored_total = 0
    for root in roots:
        size, idxs, explored = done[root]
        explored_total += explored
        if size > best_size:
            best_size = size
            best_idxs = tuple(idxs)
    return SearchResult(
        n=n,
        k=k,
        best_size=best_size,
        best_generators=tuple(Transformation(cands[i]) for i in best_idxs),
        explored=explored_total,
    )


# ----------------------------------------------------------------------
# conflict analysis


def conflicts(a: Transformation, b: Transformation) -> bool:
    """True when the product in either order contains a cycle."""
    return not (a * b).is_aperiodic() or not (b * a).is_aperiodic()


@dataclass(frozen=True)
class ConflictGraph:
    """Aperiodic transformations (identity and constants excluded, since
    they never create conflicts) with an edge per conflicting pair."""

    n: int
    nodes: tuple[Transformation, ...]
    edges: frozenset[tuple[int, int]]  # index pairs, i < j

    def neighbors(self, i: int) -> frozenset[int]:
        out = set()
        for a, b in self.edges:
            if a == i:
                out.add(b)
            elif b == i:
                out.add(a)
        return frozenset(out)

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def edge_transformations(self) -> set[frozenset[Transformation]]:
        return {frozenset({self.nodes[a], self.nodes[b]}) for a, b in self.edges}


def conflict_graph(n: int) -> ConflictGraph:
    if not 1 <= n <= 4:
        raise ValueError("conflict graph supported for n <= 4")
    nodes = tuple(
        t for t in enumerate_aperiodic(n) if not t.is_identity() and not t.is_constant()
    )
    edges = set()
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if conflicts(nodes[i], nodes[j]):
                edges.add((i, j))
    return ConflictGraph(n=n, nodes=nodes, edges=frozenset(edges))


def max_conflict_free(graph: ConflictGraph) -> tuple[int, tuple[Transformation, ...]]:
    """Exact maximum independent set of the conflict graph by branch and
    bound; the lexicographically least witness (by node index) is returned."""
    m = len(graph.nodes)
    if m > 40:
        raise ValueError("independent-set search supported up to 40 nodes")
    if m == 0:
        return 0, ()
    adjacency = [0] * m
    for a, b in graph.edges:
        adjacency[a] |= 1 << b
        adjacency[b] |= 1 << a

    best_size = 0
    best_set: tuple[int, ...] = ()

    def grow(avail: int, chosen: tuple[int, ...]) -> None:
        nonlocal best_size, best_set
        if len(chosen) > best_size:
            best_size = len(chosen)
            best_set = chosen
        if not avail or len(chosen) + avail.bit_count() <= best_size:
            return
        v = (avail & -avail).bit_length() - 1
        grow(avail & ~(adjacency[v] | (1 << v)), chosen + (v,))
        grow(avail & ~(1 << v), chosen)

    grow((1 << m) - 1, ())
    return best_size, tuple(graph.nodes[i] for i in best_set)
