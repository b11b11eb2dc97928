"""Deliberately naive reference implementations.

Nothing here touches the bitmask closures, RREF routines or canonical forms
of the main modules: weights come from breadth-first search over an
adjacency list, codes are spanned by brute force, maps are scanned as whole
numpy arrays.  Tests compare the fast paths against these.
"""
from __future__ import annotations

import itertools
from collections import deque

import numpy as np

from .errors import EnumerationTooLarge

__all__ = [
    "naive_closure",
    "naive_weight",
    "naive_table",
    "naive_same_metric",
    "naive_span",
    "naive_weight_enumerator",
    "naive_dual_enumerator",
    "naive_packing_radius",
    "naive_isometry_count",
    "naive_isometries",
    "naive_vectors",
]


def _adjacency(g) -> list[list[int]]:
    adj = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
    return adj


def naive_closure(g, s) -> set:
    adj = _adjacency(g)
    seen = set(s)
    todo = deque(seen)
    while todo:
        u = todo.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return seen


def naive_weight(g, s) -> int:
    """``s`` is an iterable of vertices, or a vector given as a tuple."""
    if isinstance(s, tuple) and len(s) == g.n and all(isinstance(a, int) for a in s):
        s = [i for i, a in enumerate(s) if a]
    return len(naive_closure(g, s))


def naive_table(g) -> dict:
    """``{frozenset(support): weight}`` over all ``2^n`` supports."""
    if g.n > 10:
        raise EnumerationTooLarge("naive tables stop at n = 10")
    out = {}
    for bits in itertools.product((0, 1), repeat=g.n):
        s = frozenset(i for i, b in enumerate(bits) if b)
        out[s] = naive_weight(g, s)
    return out


def naive_same_metric(g1, g2) -> bool:
    return g1.n == g2.n and naive_table(g1) == naive_table(g2)


def naive_vectors(q: int, n: int) -> np.ndarray:
    if q ** n > 1 << 22:
        raise EnumerationTooLarge(f"{q}^{n} vectors")
    return np.array(list(itertools.product(range(q), repeat=n)), dtype=np.int64).reshape(q ** n, n)


def naive_span(q: int, rows) -> set:
    """All linear combinations of ``rows``."""
    rows = [tuple(r) for r in rows]
    if not rows:
        return set()
    n = len(rows[0])
    out = set()
    for coeffs in itertools.product(range(q), repeat=len(rows)):
        out.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % q for j in range(n)))
    return out


def _weights_of(g, words: np.ndarray) -> np.ndarray:
    table = naive_table(g)
    return np.array([table[frozenset(np.nonzero(w)[0].tolist())] for w in words], dtype=np.int64)


def naive_weight_enumerator(g, q: int, rows) -> list[int]:
    words = naive_span(q, rows) or {tuple([0] * g.n)}
    coeffs = [0] * (g.n + 1)
    for w in words:
        coeffs[naive_weight(g, w)] += 1
    return coeffs


def naive_dual_enumerator(g, q: int, rows) -> list[int]:
    """Enumerator of the dual code, found by testing every word of F_q^n."""
    space = naive_vectors(q, g.n)
    if rows:
        gram = (space @ np.array(rows, dtype=np.int64).T) % q
        dual = space[(gram == 0).all(axis=1)]
    else:
        dual = space
    w = _weights_of(g, dual)
    return np.bincount(w, minlength=g.n + 1).tolist()


def naive_packing_radius(g, q: int, rows) -> int:
    """Largest ``r`` for which radius-``r`` balls around codewords are disjoint.

    Checked literally: for every pair of distinct codewords and every word
    of the space, compare both distances against ``r``.
    """
    code = sorted(naive_span(q, rows))
    if len(code) < 2:
        raise ValueError("packing radius needs at least two codewords")
    space = naive_vectors(q, g.n)
    wt = {}

    def dist(x, y):
        d = tuple((b - a) % q for a, b in zip(x, y))
        if d not in wt:
            wt[d] = naive_weight(g, d)
        return wt[d]

    best = None
    for x, y in itertools.combinations(code, 2):
        # smallest r at which the two balls meet
        meet = min(max(dist(x, tuple(z)), dist(y, tuple(z))) for z in space.tolist())
        best = meet if best is None else min(best, meet)
    return best - 1


def _all_matrices(q: int, n: int) -> np.ndarray:
    if q ** (n * n) > 1 << 22:
        raise EnumerationTooLarge(f"{q}^{n * n} matrices")
    digits = np.array(list(itertools.product(range(q), repeat=n * n)), dtype=np.int64)
    return digits.reshape(-1, n, n)


def _weight_preserving(g, q: int):
    n = g.n
    space = naive_vectors(q, n)
    w_space = _weights_of(g, space)
    table = naive_table(g)
    lookup = np.zeros(1 << n, dtype=np.int64)
    for s, w in table.items():
        lookup[sum(1 << i for i in s)] = w
    mats = _all_matrices(q, n)
    images = np.einsum("vi,mij->mvj", space, mats) % q
    masks = ((images != 0) * (1 << np.arange(n))).sum(axis=2)
    ok = (lookup[masks] == w_space[None, :]).all(axis=1)
    return mats[ok]


def naive_isometries(g, q: int) -> np.ndarray:
    """Every matrix ``M`` (rows are images of ``e_i``) with ``w(xM) = w(x)`` for all ``x``.

    Weight zero only at zero forces injectivity, so these are all invertible.
    """
    return _weight_preserving(g, q)


def naive_isometry_count(g, q: int) -> int:
    return int(_weight_preserving(g, q).shape[0])
