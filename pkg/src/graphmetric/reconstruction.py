"""Recovering a graph metric from some of its G-weights.

A :class:`WeightOracle` answers weight queries on supports and counts them.
Everything here works with supports only; the field size never matters.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .canonical import expanded_form
from .errors import InconsistentOracle, MissingRequiredWeight, SearchTooLarge
from .families import all_preorders
from .graph import Digraph, from_mask, iter_bits, popcount, to_mask
from .metric import WeightTable, g_weight_mask
from .results import CheckResult

__all__ = [
    "WeightOracle",
    "infer_from_weight12",
    "recover_matching_weights",
    "d_of_n",
    "lower_bound_witness",
    "single_weight_pair",
    "certificate",
    "verify_certificate",
    "consistent_count",
    "m_bounds",
    "exact_m_values",
    "consistency_check",
]


@dataclass
class WeightOracle:
    """Weight queries against a hidden graph or a table; ``queries`` counts calls."""

    n: int
    _answer: Callable[[int], int] = field(repr=False)
    queries: int = 0

    @classmethod
    def from_graph(cls, g: Digraph) -> "WeightOracle":
        return cls(g.n, lambda mask: g_weight_mask(g, mask))

    @classmethod
    def from_table(cls, t: WeightTable) -> "WeightOracle":
        def answer(mask):
            try:
                return t.weights[mask]
            except KeyError:
                raise MissingRequiredWeight(f"no weight for support {sorted(from_mask(mask))}") from None
        return cls(t.n, answer)

    def query(self, s) -> int:
        mask = to_mask(s, self.n)
        self.queries += 1
        if mask == 0:
            return 0
        return self._answer(mask)

    __call__ = query


def _check_singletons(n, w1):
    for i, w in enumerate(w1):
        if not 1 <= w <= n:
            raise InconsistentOracle(f"w(e_{i}) = {w} is outside [1, {n}]")


def infer_from_weight12(o: WeightOracle) -> Digraph:
    """Expanded form from the weights of all words of Hamming weight one or two.

    ``w(e_i + e_j) = w(e_i)`` exactly when ``i`` dominates ``j``.  Uses
    ``n + C(n, 2)`` queries.
    """
    n = o.n
    w1 = [o.query(1 << i) for i in range(n)]
    _check_singletons(n, w1)
    rows = [0] * n
    for i, j in itertools.combinations(range(n), 2):
        w = o.query(1 << i | 1 << j)
        if w < max(w1[i], w1[j]) or w > min(n, w1[i] + w1[j]):
            raise InconsistentOracle(f"w(e_{i} + e_{j}) = {w} breaks monotonicity")
        if w == w1[i]:
            rows[i] |= 1 << j
        if w == w1[j]:
            rows[j] |= 1 << i
    g = Digraph(n, tuple(rows))
    if expanded_form(g) != g:
        raise InconsistentOracle("inferred dominance relation is not transitive")
    for i in range(n):
        if popcount(rows[i]) + 1 != w1[i]:
            raise InconsistentOracle(f"w(e_{i}) disagrees with the dominated vertices")
    return g


def recover_matching_weights(t: WeightTable) -> WeightTable:
    """Fill in pair weights omitted along a matching.

    Needs every singleton weight and every pair weight except pairs of a
    matching.  For an omitted pair ``{a, b}`` the vertices ``a`` dominates
    (other than ``b``) are read off from the available pairs; comparing
    their count with ``w(e_a)`` decides whether ``a`` dominates ``b``.
    """
    n = t.n
    w1 = []
    for i in range(n):
        if 1 << i not in t.weights:
            raise MissingRequiredWeight(f"singleton weight w(e_{i}) is required")
        w1.append(t.weights[1 << i])
    missing = [(i, j) for i, j in itertools.combinations(range(n), 2)
               if (1 << i | 1 << j) not in t.weights]
    touched = [v for pair in missing for v in pair]
    if len(touched) != len(set(touched)):
        raise MissingRequiredWeight("omitted pairs do not form a matching")

    def dominated(a, skip):
        # mask of vertices c != a, skip with w(e_a + e_c) = w(e_a)
        return sum(1 << c for c in range(n)
                   if c not in (a, skip) and t.weights[1 << a | 1 << c] == w1[a])

    out = dict(t.weights)
    for a, b in missing:
        da, db = dominated(a, b), dominated(b, a)
        delta_a, delta_b = popcount(da) + 1, popcount(db) + 1
        if w1[a] == delta_a + 1:
            w = w1[a]
        elif w1[b] == delta_b + 1:
            w = w1[b]
        else:
            w = delta_a + delta_b - popcount(da & db)
        out[1 << a | 1 << b] = w
    return WeightTable(n, out, partial=len(out) != 1 << n)


def d_of_n(n: int) -> int:
    """Size of the smallest universally sufficient set of supports."""
    if n < 1:
        raise ValueError("n must be positive")
    return -(-n // 2) + math.comb(n, 2)


def lower_bound_witness(n: int):
    """Two graphs whose weight tables differ on exactly two pairs.

    Vertices ``3..n-1`` form a clique pointing at ``0, 1, 2``; the first
    graph adds ``0 -> 1``, the second ``0 -> 2``.  Returns
    ``(g1, g2, {0, 1}, {0, 2})``.
    """
    if n < 4:
        raise ValueError("the construction needs n >= 4")
    base = [(u, v) for u in range(3, n) for v in range(n) if u != v]
    g1 = Digraph.from_edges(n, base + [(0, 1)])
    g2 = Digraph.from_edges(n, base + [(0, 2)])
    return g1, g2, frozenset({0, 1}), frozenset({0, 2})


def single_weight_pair(n: int):
    """Complete graph vs. an ``(n-1)``-clique over a sink: one differing weight."""
    full = (1 << n) - 1
    g1 = Digraph(n, tuple(full & ~(1 << u) for u in range(n)))
    g2 = Digraph(n, tuple(full & ~(1 << u) for u in range(n - 1)) + (0,))
    return g1, g2, frozenset({n - 1})


def certificate(g: Digraph) -> list[tuple[frozenset, int]]:
    """At most ``2n - 1`` weights that pin down the metric of ``g``.

    For each vertex ``u`` the pair ``w({u})`` and ``w(<u>)`` (both equal to
    ``|<u>|``) forces ``<u>`` in any consistent graph.  Duplicates collapse,
    which saves an entry at every sink and inside every clique.
    """
    out = []
    seen = set()
    for u in range(g.n):
        c = g.reach[u]
        w = popcount(c)
        for s in (1 << u, c):
            if s not in seen:
                seen.add(s)
                out.append((from_mask(s), w))
    return out


_POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)


def _popcount_array(a: np.ndarray) -> np.ndarray:
    out = np.zeros_like(a)
    a = a.copy()
    while a.any():
        out += _POP8[a & 0xFF]
        a >>= 8
    return out


_PREORDERS: dict = {}


def _preorders(n: int) -> np.ndarray:
    if n not in _PREORDERS:
        _PREORDERS[n] = all_preorders(n)
    return _PREORDERS[n]


def _closure_sizes(rows: np.ndarray, mask: int) -> np.ndarray:
    acc = np.zeros(rows.shape[0], dtype=np.int64)
    for v in iter_bits(mask):
        acc |= rows[:, v]
    return _popcount_array(acc)


def consistent_count(cert, n: int) -> int:
    """Number of distinct metrics on ``n`` vertices agreeing with ``cert``."""
    if n > 5:
        raise SearchTooLarge("certificate verification scans all preorders; n <= 5")
    if n == 0:
        return 1
    rows = _preorders(n)
    ok = np.ones(rows.shape[0], dtype=bool)
    for s, w in cert:
        ok &= _closure_sizes(rows, to_mask(s, n)) == w
    return int(ok.sum())


def verify_certificate(cert, n: int) -> bool:
    """True iff exactly one metric on ``n`` vertices is consistent with ``cert``."""
    return consistent_count(cert, n) == 1


def m_bounds(n: int) -> tuple[int, int, int]:
    """``(M_min, lower, upper)`` with ``lower <= M_max <= upper``.

    Small cases follow the counting arguments directly: one vertex needs no
    query at all, two vertices need two.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 0, 0, 0
    if n == 2:
        return 2, 2, 3
    if n == 3:
        return 3, 4, 5
    return n, max(n, 2 * n - 4), 2 * n - 1


def exact_m_values(n: int) -> tuple[int, int]:
    """Exact ``(M_min(n), M_max(n))`` by minimum hitting sets over all supports.

    For each metric, every other metric differs from it on some set of
    supports; the fewest weights that identify it form a minimum hitting set
    of those difference sets.  Feasible for ``n <= 4``.
    """
    if n > 4:
        raise SearchTooLarge("exact M values are computed for n <= 4")
    rows = _preorders(n)
    supports = list(range(1, 1 << n))
    table = np.stack([_closure_sizes(rows, s) for s in supports], axis=1)
    if table.shape[0] == 1:
        return 0, 0
    k = len(supports)
    subsets = np.arange(1 << k, dtype=np.int64)
    sizes = _popcount_array(subsets)
    bit = 1 << np.arange(k, dtype=np.int64)
    best = []
    for p in range(table.shape[0]):
        diff = table != table[p]
        diff = np.delete(diff, p, axis=0)
        masks = np.unique(diff.astype(np.int64) @ bit)
        # drop supersets; they are hit whenever a subset is
        sub = (masks[:, None] & masks[None, :]) == masks[None, :]
        np.fill_diagonal(sub, False)
        minimal = masks[~sub.any(axis=1)]
        ok = np.ones(subsets.size, dtype=bool)
        for m in minimal:
            ok &= (subsets & m) != 0
        best.append(int(sizes[ok].min()))
    return min(best), max(best)


def consistency_check(g: Digraph, t: WeightTable) -> CheckResult:
    """Does every entry of ``t`` match ``g``?  Witness: first bad support."""
    for mask in sorted(t.weights):
        if g_weight_mask(g, mask) != t.weights[mask]:
            return CheckResult(False, from_mask(mask))
    return CheckResult(True)
