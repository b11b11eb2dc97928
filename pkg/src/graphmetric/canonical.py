"""Expanded and reduced canonical forms of a graph metric.

Two graphs induce the same metric exactly when their transitive closures
coincide, so the closure (minus loops) is the *expanded* form.  Contracting
strongly connected components and keeping only cover relations gives the
*reduced* form: an L-weighted Hasse diagram of the poset ``P_G``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .errors import FormatError, SearchTooLarge
from .graph import Digraph, iter_bits, popcount

__all__ = [
    "ReducedForm",
    "expanded_form",
    "strongly_connected_components",
    "reduced_form",
    "is_hierarchical",
    "hierarchy_violation",
    "same_metric",
    "isomorphic_metrics",
    "metric_isomorphism",
    "parse_reduced_form",
    "format_reduced_form",
]


def expanded_form(g: Digraph) -> Digraph:
    """Transitive closure without loops; every added edge is a shortcut."""
    return Digraph(g.n, tuple(r & ~(1 << u) for u, r in enumerate(g.reach)))


def strongly_connected_components(g: Digraph) -> list[tuple[int, ...]]:
    """Classes of mutual reachability, ordered by their smallest vertex."""
    reach = g.reach
    seen = 0
    comps = []
    for u in range(g.n):
        if seen >> u & 1:
            continue
        comp = tuple(v for v in iter_bits(reach[u]) if reach[v] >> u & 1)
        for v in comp:
            seen |= 1 << v
        comps.append(comp)
    return comps


@dataclass(frozen=True)
class ReducedForm:
    """Hasse diagram of ``P_G`` with block sizes ``L`` and projection ``pi``.

    Reduced vertex ``b`` stands for the strongly connected component
    ``blocks[b]``; ``level[b]`` is the number of elements in a longest chain
    with ``b`` on top, so sinks sit on level 1.
    """

    m: int
    hasse: Digraph
    L: tuple
    pi: tuple
    level: tuple
    h: int

    @property
    def n(self) -> int:
        return len(self.pi)

    @cached_property
    def reach(self) -> tuple:
        """Reflexive dominance masks on reduced vertices."""
        return self.hasse.reach

    @cached_property
    def blocks(self) -> tuple:
        out = [[] for _ in range(self.m)]
        for v, b in enumerate(self.pi):
            out[b].append(v)
        return tuple(tuple(b) for b in out)

    @cached_property
    def levels(self) -> tuple:
        """``levels[i-1]`` lists the reduced vertices of level ``i``."""
        out = [[] for _ in range(self.h)]
        for b, lv in enumerate(self.level):
            out[lv - 1].append(b)
        return tuple(tuple(x) for x in out)

    def level_vertices(self, i: int) -> tuple:
        """Original vertices ``V_i`` lying over level ``i``."""
        return tuple(v for v, b in enumerate(self.pi) if self.level[b] == i)

    def dominates(self, a: int, b: int) -> bool:
        return bool(self.reach[a] >> b & 1)


def reduced_form(g: Digraph) -> ReducedForm:
    comps = strongly_connected_components(g)
    m = len(comps)
    pi = [0] * g.n
    for b, comp in enumerate(comps):
        for v in comp:
            pi[v] = b
    # reachability between components, reflexive
    creach = []
    for comp in comps:
        mask = 0
        for v in iter_bits(g.reach[comp[0]]):
            mask |= 1 << pi[v]
        creach.append(mask)
    rows = []
    for b in range(m):
        strict = creach[b] & ~(1 << b)
        covers = strict
        for d in iter_bits(strict):
            covers &= ~(creach[d] & ~(1 << d))
        rows.append(covers)
    hasse = Digraph(m, tuple(rows))
    level = [0] * m
    # a vertex reaches strictly more components than anything below it
    for b in sorted(range(m), key=lambda b: popcount(creach[b])):
        level[b] = 1 + max((level[c] for c in iter_bits(rows[b])), default=0)
    return ReducedForm(
        m=m,
        hasse=hasse,
        L=tuple(len(c) for c in comps),
        pi=tuple(pi),
        level=tuple(level),
        h=max(level, default=0),
    )


def hierarchy_violation(r: ReducedForm):
    """First ``(a, b)`` with ``b`` on level ``i+1`` not dominating ``a`` on level ``i``.

    Levels are scanned from the bottom, vertices by index.  ``None`` when
    the form is hierarchical.
    """
    for i in range(1, r.h):
        for a in r.levels[i - 1]:
            for b in r.levels[i]:
                if not r.dominates(b, a):
                    return a, b
    return None


def is_hierarchical(r: ReducedForm) -> bool:
    return hierarchy_violation(r) is None


def same_metric(g1: Digraph, g2: Digraph) -> bool:
    if g1.n != g2.n:
        raise ValueError("graphs on different vertex counts")
    return g1.reach == g2.reach


def _reduced_isomorphism(r1: ReducedForm, r2: ReducedForm, guard: int):
    if r1.m != r2.m or sorted(r1.L) != sorted(r2.L):
        return None
    m = r1.m

    def sig(r, b):
        down = popcount(r.reach[b])
        up = sum(1 for c in range(r.m) if r.reach[c] >> b & 1)
        return r.L[b], r.level[b], down, up

    s1 = [sig(r1, b) for b in range(m)]
    s2 = [sig(r2, b) for b in range(m)]
    if sorted(s1) != sorted(s2):
        return None
    classes: dict = {}
    for s in s2:
        classes[s] = classes.get(s, 0) + 1
    if math.prod(math.factorial(c) for c in classes.values()) > guard:
        raise SearchTooLarge("too many signature-compatible bijections")

    order = sorted(range(m), key=lambda b: -popcount(r1.reach[b]))
    image = [-1] * m
    used = [False] * m

    def extend(k):
        if k == m:
            return True
        b = order[k]
        for c in range(m):
            if used[c] or s2[c] != s1[b]:
                continue
            ok = True
            for j in range(k):
                a = order[j]
                if r1.dominates(a, b) != r2.dominates(image[a], c) or \
                        r1.dominates(b, a) != r2.dominates(c, image[a]):
                    ok = False
                    break
            if ok:
                image[b], used[c] = c, True
                if extend(k + 1):
                    return True
                image[b], used[c] = -1, False
        return False

    return tuple(image) if extend(0) else None


def metric_isomorphism(g1: Digraph, g2: Digraph, guard: int = 10 ** 7):
    """A vertex bijection ``sigma`` with ``w_G2(sigma(X)) = w_G1(X)``, or ``None``.

    Found on reduced forms (L-weighted Hasse diagrams) and lifted to the
    original vertices block by block.
    """
    if g1.n != g2.n:
        return None
    r1, r2 = reduced_form(g1), reduced_form(g2)
    f = _reduced_isomorphism(r1, r2, guard)
    if f is None:
        return None
    sigma = [0] * g1.n
    for b, block in enumerate(r1.blocks):
        for u, v in zip(block, r2.blocks[f[b]]):
            sigma[u] = v
    return tuple(sigma)


def isomorphic_metrics(g1: Digraph, g2: Digraph, guard: int = 10 ** 7) -> bool:
    return metric_isomorphism(g1, g2, guard) is not None


def format_reduced_form(r: ReducedForm) -> str:
    lines = [f"{r.m} {r.h}"]
    lines += [f"{b} {r.L[b]} {r.level[b]}" for b in range(r.m)]
    edges = r.hasse.edges
    lines.append(str(len(edges)))
    lines += [f"{u} {v}" for u, v in edges]
    lines.append(str(r.n))
    lines += [str(b) for b in r.pi]
    return "\n".join(lines) + "\n"


def parse_reduced_form(text: str) -> ReducedForm:
    lines = [l.strip() for l in text.splitlines() if l.strip() and not l.strip().startswith("#")]
    try:
        it = iter(lines)
        m, h = map(int, next(it).split())
        L, level = [0] * m, [0] * m
        for _ in range(m):
            b, lb, lv = map(int, next(it).split())
            L[b], level[b] = lb, lv
        e = int(next(it))
        edges = [tuple(map(int, next(it).split())) for _ in range(e)]
        n = int(next(it))
        pi = [int(next(it)) for _ in range(n)]
    except (StopIteration, ValueError):
        raise FormatError("truncated or malformed reduced form") from None
    if next(it, None) is not None:
        raise FormatError("trailing lines after reduced form")
    if any(not 0 <= b < m for b in pi) or sorted(set(pi)) != list(range(m)):
        raise FormatError("projection is not onto the reduced vertices")
    if any(pi.count(b) != L[b] for b in range(m)):
        raise FormatError("block sizes disagree with the projection")
    try:
        hasse = Digraph.from_edges(m, edges)
    except (IndexError, ValueError) as exc:
        raise FormatError(str(exc)) from None
    return ReducedForm(m, hasse, tuple(L), tuple(pi), tuple(level), h)
