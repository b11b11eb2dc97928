"""Linear isometries of a graph metric.

Maps follow the row convention of :mod:`graphmetric.linalg`:
``T(e_i) = sum_j M[i][j] e_j``.  A map *respects domination* when
``M[i][j] != 0`` only for ``j`` in the closure of ``i``.

Two normal-subgroup candidates appear below.  ``N(G)`` is the literal set of
invertible pattern-respecting maps with nonzero diagonal; it is not closed
under composition once a clique has two or more vertices.  ``N+(G)`` drops
the diagonal condition and is a genuine normal subgroup of the isometry
group, with ``Aut(G~) . N+(G)`` the whole group and intersection the block
permutations.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .canonical import reduced_form
from .errors import EnumerationTooLarge, NotAnIsometry, SearchTooLarge
from .graph import Digraph, iter_bits, popcount
from .linalg import (
    ENUMERATION_GUARD,
    LinearMap,
    apply,
    compose,
    identity_map,
    invert,
    is_invertible,
    permutation_map,
    support_mask,
)
from .metric import g_weight_mask

__all__ = [
    "IsometryDecomposition",
    "respects_pattern",
    "respects_domination",
    "in_n_plus",
    "aut_expanded",
    "is_automorphism",
    "aut_generators",
    "is_isometry",
    "decompose_isometry",
    "gl_order",
    "diag_invertible_count",
    "n_order",
    "n_plus_order",
    "group_order",
    "product_order",
    "isometry_generators",
    "mask_action",
]


def respects_pattern(g: Digraph, t: LinearMap) -> bool:
    """``M[i][j] != 0`` implies ``j`` lies in the closure of ``i``."""
    if t.n != g.n:
        raise ValueError("size mismatch")
    return all(support_mask(row) & ~g.reach[i] == 0 for i, row in enumerate(t.matrix))


def respects_domination(g: Digraph, t: LinearMap) -> bool:
    """Membership in ``N(G)``: nonzero diagonal, pattern, invertible."""
    if not respects_pattern(g, t):
        return False
    return all(t.matrix[i][i] for i in range(g.n)) and is_invertible(t)


def in_n_plus(g: Digraph, t: LinearMap) -> bool:
    """Membership in ``N+(G)``: pattern and invertible, diagonal unrestricted."""
    return respects_pattern(g, t) and is_invertible(t)


def is_automorphism(g: Digraph, perm) -> bool:
    """Does ``perm`` preserve the edges of the expanded form?"""
    reach = g.reach
    for u in range(g.n):
        image = 0
        for v in iter_bits(reach[u]):
            image |= 1 << perm[v]
        if image != reach[perm[u]]:
            return False
    return True


def aut_expanded(g: Digraph, guard: int = 10) -> list[tuple]:
    """All automorphisms of the expanded form, as tuples ``perm[i]``.

    Backtracking over vertices with candidates filtered by closure size and
    the number of dominating vertices.
    """
    n = g.n
    if n > guard:
        raise SearchTooLarge(f"n={n} exceeds the automorphism guard {guard}")
    reach = g.reach
    down = [popcount(r) for r in reach]
    up = [sum(1 for v in range(n) if reach[v] >> u & 1) for u in range(n)]
    sig = [(down[u], up[u]) for u in range(n)]
    out = []
    image = [-1] * n
    used = [False] * n

    def extend(u):
        if u == n:
            out.append(tuple(image))
            return
        for c in range(n):
            if used[c] or sig[c] != sig[u]:
                continue
            ok = True
            for v in range(u):
                if (reach[u] >> v & 1) != (reach[c] >> image[v] & 1) or \
                        (reach[v] >> u & 1) != (reach[image[v]] >> c & 1):
                    ok = False
                    break
            if ok:
                image[u], used[c] = c, True
                extend(u + 1)
                image[u], used[c] = -1, False

    extend(0)
    return out


def _perm_compose(a, b):
    # a o b
    return tuple(a[i] for i in b)


def aut_generators(g: Digraph, guard: int = 10) -> list[tuple]:
    """A small generating set of ``Aut(G~)``, picked greedily."""
    n = g.n
    ident = tuple(range(n))
    group = {ident}
    gens = []
    for p in aut_expanded(g, guard):
        if p in group:
            continue
        gens.append(p)
        frontier = list(group)
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = _perm_compose(s, x)
                    if y not in group:
                        group.add(y)
                        nxt.append(y)
            frontier = nxt
    return gens


def _all_vectors(q, n):
    return itertools.product(range(q), repeat=n)


def is_isometry(g: Digraph, t: LinearMap, guard: int = ENUMERATION_GUARD) -> bool:
    """Weight-preserving check, exhaustive when ``q^n <= guard``."""
    if t.n != g.n:
        raise ValueError("size mismatch")
    if t.q ** t.n <= guard:
        for x in _all_vectors(t.q, t.n):
            if g_weight_mask(g, support_mask(apply(t, x))) != g_weight_mask(g, support_mask(x)):
                return False
        return True
    try:
        decompose_isometry(g, t)
    except NotAnIsometry:
        return False
    return True


@dataclass(frozen=True)
class IsometryDecomposition:
    """``t = T_phi o nmap`` with ``T_phi(e_i) = e_{phi[i]}``."""

    phi: tuple
    nmap: LinearMap

    def permutation_map(self) -> LinearMap:
        return permutation_map(self.nmap.q, self.phi)

    def compose(self) -> LinearMap:
        return compose(self.permutation_map(), self.nmap)


def decompose_isometry(g: Digraph, t: LinearMap) -> IsometryDecomposition:
    """Split an isometry into an automorphism of ``G~`` and a member of ``N(G)``.

    Row ``i`` is sent to the block whose closure equals the closure of
    ``supp T(e_i)``; within each block ``phi`` is the lexicographically
    least bijection with ``M[i][phi(i)] != 0``.
    """
    if t.n != g.n:
        raise ValueError("size mismatch")
    r = reduced_form(g)
    reach = g.reach
    block_closure = {reach[b[0]]: k for k, b in enumerate(r.blocks)}
    rows_of = [[] for _ in range(r.m)]
    for i, row in enumerate(t.matrix):
        s = support_mask(row)
        c = 0
        for v in iter_bits(s):
            c |= reach[v]
        k = block_closure.get(c)
        if k is None:
            raise NotAnIsometry(f"closure of supp T(e_{i}) is not a principal closure")
        rows_of[k].append(i)
    phi = [-1] * g.n
    for k, rows in enumerate(rows_of):
        cols = r.blocks[k]
        if len(rows) != len(cols):
            raise NotAnIsometry(f"block {k} receives {len(rows)} rows, needs {len(cols)}")
        match = _least_matching(rows, cols, t.matrix)
        if match is None:
            raise NotAnIsometry(f"no nonzero transversal into block {k}")
        for i, j in zip(rows, match):
            phi[i] = j
    phi = tuple(phi)
    if not is_automorphism(g, phi):
        raise NotAnIsometry("induced vertex map is not an automorphism of the expanded form")
    p = permutation_map(t.q, phi)
    m = compose(invert(p), t)
    if not respects_domination(g, m):
        raise NotAnIsometry("remaining factor does not respect domination")
    return IsometryDecomposition(phi, m)


def _least_matching(rows, cols, matrix):
    chosen = []
    used = set()

    def extend(k):
        if k == len(rows):
            return True
        for j in cols:
            if j not in used and matrix[rows[k]][j]:
                used.add(j)
                chosen.append(j)
                if extend(k + 1):
                    return True
                used.discard(j)
                chosen.pop()
        return False

    return list(chosen) if extend(0) else None


def gl_order(k: int, q: int) -> int:
    return math.prod(q ** k - q ** i for i in range(k))


@lru_cache(maxsize=None)
def diag_invertible_count(k: int, q: int, guard: int = 1 << 22) -> int:
    """Invertible ``k x k`` matrices over F_q with every diagonal entry nonzero."""
    if k == 0:
        return 1
    if k == 1:
        return q - 1
    free = k * k - k
    if (q - 1) ** k * q ** free > guard:
        raise SearchTooLarge(f"counting {k}x{k} matrices over F_{q}")
    count = 0
    off = [(i, j) for i in range(k) for j in range(k) if i != j]
    for diag in itertools.product(range(1, q), repeat=k):
        for vals in itertools.product(range(q), repeat=free):
            m = [[0] * k for _ in range(k)]
            for i in range(k):
                m[i][i] = diag[i]
            for (i, j), a in zip(off, vals):
                m[i][j] = a
            if is_invertible(LinearMap(q, m)):
                count += 1
    return count


def _free_exponent(g: Digraph, r) -> int:
    # entries outside the diagonal blocks that the pattern leaves free
    return sum(popcount(g.reach[i]) - r.L[r.pi[i]] for i in range(g.n))


def n_order(g: Digraph, q: int) -> int:
    """``|N(G)|``: product of diagonal-block counts times free off-block entries."""
    r = reduced_form(g)
    return math.prod(diag_invertible_count(L, q) for L in r.L) * q ** _free_exponent(g, r)


def n_plus_order(g: Digraph, q: int) -> int:
    r = reduced_form(g)
    return math.prod(gl_order(L, q) for L in r.L) * q ** _free_exponent(g, r)


def product_order(g: Digraph, q: int, guard: int = 10) -> int:
    """``|Aut(G~)| * |N(G)|`` taken literally."""
    return len(aut_expanded(g, guard)) * n_order(g, q)


def group_order(g: Digraph, q: int, guard: int = 10) -> int:
    """Order of the linear isometry group.

    ``|Aut(G~)| * |N+(G)| / prod_b L_b!``, the denominator being the block
    permutations that the two factors share.
    """
    r = reduced_form(g)
    shared = math.prod(math.factorial(L) for L in r.L)
    return len(aut_expanded(g, guard)) * n_plus_order(g, q) // shared


def isometry_generators(g: Digraph, q: int, guard: int = 10) -> list[LinearMap]:
    """Generators of the isometry group.

    Transvections ``e_i -> e_i + e_j`` for each dominated ``j``, a scaling
    of each coordinate by a primitive element when ``q > 2``, and a greedy
    generating set of ``Aut(G~)``.
    """
    n = g.n
    gens = []
    base = [list(r) for r in identity_map(q, n).matrix]
    for i in range(n):
        for j in iter_bits(g.reach[i] & ~(1 << i)):
            m = [row[:] for row in base]
            m[i][j] = 1
            gens.append(LinearMap(q, m))
    if q > 2:
        prim = next(a for a in range(2, q)
                    if all(pow(a, (q - 1) // p, q) != 1 for p in _prime_factors(q - 1)))
        for i in range(n):
            m = [row[:] for row in base]
            m[i][i] = prim
            gens.append(LinearMap(q, m))
    gens += [permutation_map(q, p) for p in aut_generators(g, guard)]
    return gens


def _prime_factors(m):
    out, d = set(), 2
    while d * d <= m:
        while m % d == 0:
            out.add(d)
            m //= d
        d += 1
    if m > 1:
        out.add(m)
    return out


def mask_action(t: LinearMap) -> list[int]:
    """For q = 2: ``table[x] = T(x)`` with vectors encoded as bitmasks."""
    if t.q != 2:
        raise ValueError("mask action is only defined over F_2")
    if t.n > 20:
        raise EnumerationTooLarge("2^n table")
    rows = [support_mask(r) for r in t.matrix]
    table = [0] * (1 << t.n)
    for x in range(1, 1 << t.n):
        low = x & -x
        table[x] = table[x ^ low] ^ rows[low.bit_length() - 1]
    return table
