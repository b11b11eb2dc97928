"""Named graphs and graph families used in examples, tests and scans."""
from __future__ import annotations

import itertools
from typing import Iterator, Sequence

import numpy as np

from .errors import EnumerationTooLarge
from .graph import Digraph

__all__ = [
    "empty_graph",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "clique_union",
    "hierarchical_graph",
    "hierarchical_classes",
    "level_constant_classes",
    "random_digraph",
    "all_digraphs",
    "all_preorders",
    "preorder_classes",
    "TRI",
    "HAMM4",
    "PATH3",
    "PAIR4",
    "PRX3",
    "SIX",
    "CHAIN2",
]


def empty_graph(n: int) -> Digraph:
    return Digraph(n)


def complete_graph(n: int) -> Digraph:
    full = (1 << n) - 1
    return Digraph(n, tuple(full & ~(1 << u) for u in range(n)))


def path_graph(n: int) -> Digraph:
    """``0 -> 1 -> ... -> n-1``."""
    return Digraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Digraph:
    return Digraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)] if n > 1 else [])


def clique_union(sizes: Sequence[int]) -> Digraph:
    """Disjoint cliques of the given sizes on consecutive vertices."""
    n = sum(sizes)
    edges = []
    start = 0
    for s in sizes:
        block = range(start, start + s)
        edges += [(u, v) for u in block for v in block if u != v]
        start += s
    return Digraph.from_edges(n, edges)


def hierarchical_graph(levels: Sequence[Sequence[int]], rng=None) -> Digraph:
    """Graph whose poset is hierarchical with the given clique sizes per level.

    ``levels[0]`` is the bottom level.  Every vertex of a block on level
    ``i+1`` gets an edge to every vertex of level ``i``.  With ``rng`` the
    vertices are relabelled by a random permutation.
    """
    blocks = []
    start = 0
    for sizes in levels:
        row = []
        for s in sizes:
            row.append(list(range(start, start + s)))
            start += s
        blocks.append(row)
    n = start
    edges = []
    for row in blocks:
        for b in row:
            edges += [(u, v) for u in b for v in b if u != v]
    for lower, upper in zip(blocks, blocks[1:]):
        below = [v for b in lower for v in b]
        edges += [(u, v) for b in upper for u in b for v in below]
    if rng is not None:
        perm = rng.permutation(n)
        edges = [(int(perm[u]), int(perm[v])) for u, v in edges]
    return Digraph.from_edges(n, edges)


def _partitions(n: int, largest: int | None = None) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    largest = n if largest is None else largest
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def hierarchical_classes(n: int, sizes: Sequence[int] | None = None) -> Iterator[tuple]:
    """Every hierarchical metric on ``n`` vertices up to isomorphism.

    Yields tuples of levels (bottom first), each level a non-increasing
    tuple of clique sizes.  ``sizes`` restricts the allowed clique sizes.
    """
    allowed = None if sizes is None else set(sizes)

    def compositions(total):
        if total == 0:
            yield ()
            return
        for first in range(1, total + 1):
            for rest in compositions(total - first):
                yield (first,) + rest

    for comp in compositions(n):
        options = []
        for part in comp:
            opts = [p for p in _partitions(part) if allowed is None or set(p) <= allowed]
            options.append(opts)
        yield from itertools.product(*options)


def level_constant_classes(n: int) -> Iterator[tuple]:
    """Hierarchical classes whose block sizes are constant on every level."""
    for levels in hierarchical_classes(n):
        if all(len(set(level)) == 1 for level in levels):
            yield levels


def random_digraph(n: int, p: float, rng) -> Digraph:
    adj = rng.random((n, n)) < p
    np.fill_diagonal(adj, False)
    return Digraph.from_matrix(adj)


def all_digraphs(n: int) -> Iterator[Digraph]:
    """All ``2^(n(n-1))`` loop-free digraphs on ``n`` labelled vertices."""
    slots = [(u, v) for u in range(n) for v in range(n) if u != v]
    if len(slots) > 24:
        raise EnumerationTooLarge(f"2^{len(slots)} digraphs")
    for code in range(1 << len(slots)):
        rows = [0] * n
        for k, (u, v) in enumerate(slots):
            if code >> k & 1:
                rows[u] |= 1 << v
        yield Digraph(n, tuple(rows))


def all_preorders(n: int) -> np.ndarray:
    """Reflexive transitive relations on ``n`` points as reach bitmask rows.

    Returns an ``(N, n)`` integer array; row ``k`` of entry ``[p, k]`` is the
    closure mask of vertex ``k`` in the ``p``-th preorder.  These are exactly
    the distinct expanded forms (355 for n=4, 6942 for n=5).
    """
    slots = [(u, v) for u in range(n) for v in range(n) if u != v]
    if len(slots) > 20:
        raise EnumerationTooLarge(f"2^{len(slots)} relations")
    codes = np.arange(1 << len(slots), dtype=np.int64)
    rel = np.zeros((codes.size, n, n), dtype=np.uint8)
    for k, (u, v) in enumerate(slots):
        rel[:, u, v] = (codes >> k) & 1
    idx = np.arange(n)
    rel[:, idx, idx] = 1
    sq = np.einsum("pij,pjk->pik", rel, rel, optimize=True) > 0
    keep = (sq <= rel.astype(bool)).all(axis=(1, 2))
    rel = rel[keep].astype(np.int64)
    weights = 1 << np.arange(n, dtype=np.int64)
    return rel @ weights


def preorder_classes(n: int) -> list[Digraph]:
    """One expanded-form representative per metric isomorphism class."""
    seen = set()
    out = []
    perms = list(itertools.permutations(range(n)))
    for rows in all_preorders(n):
        rows = [int(r) for r in rows]
        rel = {(u, v) for u in range(n) for v in range(n) if u != v and rows[u] >> v & 1}
        key = min(tuple(sorted((p[u], p[v]) for u, v in rel)) for p in perms)
        if key in seen:
            continue
        seen.add(key)
        out.append(Digraph.from_edges(n, rel))
    return out


TRI = Digraph.from_edges(3, [(0, 1), (0, 2), (1, 2), (2, 1)])
HAMM4 = Digraph(4)
PATH3 = path_graph(3)
PAIR4 = Digraph.from_edges(4, [(2, 3), (3, 2)])
PRX3 = Digraph.from_edges(3, [(2, 0)])
SIX = clique_union([2, 2, 2])
CHAIN2 = Digraph.from_edges(2, [(0, 1)])
