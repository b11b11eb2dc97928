"""Linear codes under a graph metric: distances, clearing, decomposition, packing."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .canonical import ReducedForm, hierarchy_violation, reduced_form
from .errors import EnumerationTooLarge, NotApplicable, NotHierarchical, ZeroCode
from .graph import Digraph, closure_mask, from_mask, iter_bits, to_mask
from .linalg import (
    ENUMERATION_GUARD,
    LinearCode,
    LinearMap,
    apply,
    codewords,
    compose,
    identity_map,
    rank,
    rref,
    support_mask,
)
from .isometry import isometry_generators
from .metric import g_weight_mask

__all__ = [
    "DecomposedCode",
    "max_set",
    "cleared_form",
    "msg",
    "min_distance",
    "packing_radius_bruteforce",
    "canonical_decomposition",
    "non_decomposable_witness",
    "is_level_split",
    "decomposable_by_search",
    "packing_radius_formula",
]


def max_set(r: ReducedForm, x) -> frozenset:
    """Coordinates of ``supp(x)`` whose block is maximal among the blocks hit."""
    s = support_mask(x)
    blocks = {r.pi[i] for i in iter_bits(s)}
    top = {b for b in blocks if not any(c != b and r.dominates(c, b) for c in blocks)}
    return frozenset(i for i in iter_bits(s) if r.pi[i] in top)


def cleared_form(r: ReducedForm, x) -> tuple:
    keep = max_set(r, x)
    return tuple(a if i in keep else 0 for i, a in enumerate(x))


def msg(g: Digraph, x) -> frozenset:
    """Minimal generating subset of ``x``: same closure, nothing removable.

    Vertices are tried for removal from the highest index down, so among
    clique members the lowest index survives.
    """
    mask = to_mask(x, g.n)
    target = closure_mask(g, mask)
    for v in sorted(iter_bits(mask), reverse=True):
        if closure_mask(g, mask & ~(1 << v)) == target:
            mask &= ~(1 << v)
    return from_mask(mask)


def min_distance(g: Digraph, c: LinearCode, guard: int = ENUMERATION_GUARD) -> int:
    if c.k == 0:
        raise ZeroCode("the zero code has no minimum distance")
    return min(g_weight_mask(g, support_mask(x)) for x in codewords(c, guard) if any(x))


def packing_radius_bruteforce(g: Digraph, c: LinearCode, guard: int = ENUMERATION_GUARD) -> int:
    """Largest ``r`` such that radius-``r`` balls around codewords are disjoint.

    By translation invariance only the pairs ``(0, c)`` matter; the balls
    meet at radius ``min_y max(w(y), w(c - y))``.
    """
    if c.k == 0:
        raise ZeroCode("packing radius of the zero code is unbounded")
    q, n = c.q, c.n
    if q ** n > guard:
        raise EnumerationTooLarge(f"{q}^{n} words exceed guard {guard}")
    if q == 2:
        w = [g_weight_mask(g, m) for m in range(1 << n)]
        meet = min(min(max(w[y], w[cm ^ y]) for y in range(1 << n))
                   for cm in (support_mask(x) for x in codewords(c, guard)) if cm)
        return meet - 1
    space = list(itertools.product(range(q), repeat=n))
    w = {y: g_weight_mask(g, support_mask(y)) for y in space}
    best = None
    for x in codewords(c, guard):
        if not any(x):
            continue
        m = min(max(w[y], w[tuple((a - b) % q for a, b in zip(x, y))]) for y in space)
        best = m if best is None else min(best, m)
    return best - 1


@dataclass(frozen=True)
class DecomposedCode:
    """``isometry(C) = components[0] + ... + components[h-1]`` (direct sum).

    ``components[i]`` is supported on the vertices of level ``i + 1``.
    """

    isometry: LinearMap
    components: tuple
    reduced: ReducedForm

    def image(self) -> LinearCode:
        rows = [b for comp in self.components for b in comp.basis]
        n = self.isometry.n
        return rref(self.isometry.q, rows, n) if rows else LinearCode(self.isometry.q, n, ())


def non_decomposable_witness(g: Digraph, q: int = 2):
    """``span{e_j + e_k}`` for the lowest hierarchy violation, else ``None``."""
    r = reduced_form(g)
    bad = hierarchy_violation(r)
    if bad is None:
        return None
    a, b = bad
    j, k = r.blocks[a][0], r.blocks[b][0]
    x = [0] * g.n
    x[j] = x[k] = 1
    return rref(q, [x], g.n)


def canonical_decomposition(g: Digraph, c: LinearCode) -> DecomposedCode:
    """Isometric image of ``c`` that splits level by level.

    Reduce ``c`` with pivot columns searched from the top level down.  A
    basis row ``x`` with pivot ``p`` on level ``l`` has all its level-``l``
    part maximal and everything else dominated by ``p``; the map
    ``e_p -> e_p - x_p^{-1} (x - x~)`` sends ``x`` to its cleared form and
    fixes every other basis row.  The product of these maps is the witness.
    """
    r = reduced_form(g)
    bad = hierarchy_violation(r)
    if bad is not None:
        raise NotHierarchical(
            f"level {r.level[bad[1]]} block {bad[1]} does not dominate block {bad[0]}",
            witness=non_decomposable_witness(g, c.q),
        )
    q, n = c.q, c.n
    lev = [r.level[r.pi[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: (-lev[i], i))
    basis = rref(q, c.basis, n, column_order=order).basis if c.k else ()
    t = identity_map(q, n)
    cleared = [[] for _ in range(r.h)]
    for x in basis:
        p = next(i for i in order if x[i])
        top = lev[p]
        xt = tuple(a if lev[i] == top else 0 for i, a in enumerate(x))
        inv = pow(x[p], q - 2, q)
        rows = [list(row) for row in identity_map(q, n).matrix]
        for j in range(n):
            rows[p][j] = (rows[p][j] - inv * (x[j] - xt[j])) % q
        t = compose(LinearMap(q, rows), t)
        cleared[top - 1].append(xt)
    comps = tuple(rref(q, rows, n) if rows else LinearCode(q, n, ()) for rows in cleared)
    return DecomposedCode(t, comps, r)


def is_level_split(r: ReducedForm, c: LinearCode) -> bool:
    """Is ``c`` the direct sum of its intersections with the level subspaces?"""
    q, n = c.q, c.n
    total = 0
    for i in range(1, r.h + 1):
        outside = [v for v in range(n) if r.level[r.pi[v]] != i]
        # dim(C cap F^{V_i}) = k - rank of C projected onto the other coordinates
        proj = [[x[v] for v in outside] for x in c.basis]
        total += c.k - (rank(q, proj) if outside and proj else 0)
    return total == c.k


def packing_radius_formula(g: Digraph, c: LinearCode) -> int:
    """Packing radius from the level structure of a decomposed code.

    With ``k0`` the lowest level carrying a component, ``r0`` the fewest
    blocks hit by a nonzero word of that component, and ``L0`` the common
    block size there::

        R = ceil(r0 / 2) * L0 - 1 + sum_{i < k0} |V'_i| L(i)

    Requires a hierarchical poset with block size constant on each level.
    """
    if c.k == 0:
        raise ZeroCode("packing radius of the zero code is unbounded")
    r = reduced_form(g)
    if hierarchy_violation(r) is not None:
        raise NotApplicable("poset is not hierarchical")
    for lv in r.levels:
        if len({r.L[b] for b in lv}) > 1:
            raise NotApplicable("block sizes vary within a level")
    d = canonical_decomposition(g, c)
    k0 = next(i for i, comp in enumerate(d.components, start=1) if comp.k)
    comp = d.components[k0 - 1]
    r0 = min(len({r.pi[i] for i in iter_bits(support_mask(x))})
             for x in codewords(comp) if any(x))
    L0 = r.L[r.levels[k0 - 1][0]]
    below = sum(len(r.levels[i - 1]) * r.L[r.levels[i - 1][0]] for i in range(1, k0))
    return -(-r0 // 2) * L0 - 1 + below


def decomposable_by_search(g: Digraph, c: LinearCode, limit: int = 1 << 16) -> bool:
    """Exhaustive: does some isometric image of ``c`` split along the levels?

    Walks the orbit of ``c`` under generators of the isometry group.
    """
    r = reduced_form(g)
    q, n = c.q, c.n
    gens = isometry_generators(g, q)
    start = rref(q, c.basis, n) if c.k else LinearCode(q, n, ())
    seen = {start.basis}
    todo = [start]
    while todo:
        d = todo.pop()
        if is_level_split(r, d):
            return True
        for t in gens:
            e = rref(q, [apply(t, x) for x in d.basis], n) if d.k else d
            if e.basis not in seen:
                seen.add(e.basis)
                if len(seen) > limit:
                    raise EnumerationTooLarge("code orbit exceeds search limit")
                todo.append(e)
    return False
