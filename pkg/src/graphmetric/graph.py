"""Directed graphs, dominance and closures.

Vertices are ``0..n-1``.  Internally a set of vertices is an ``int`` bitmask
(bit ``v`` set iff ``v`` is a member); the public functions accept any
iterable of vertex indices and return ``frozenset`` objects.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import FormatError

__all__ = [
    "Digraph",
    "to_mask",
    "from_mask",
    "popcount",
    "closure",
    "closure_mask",
    "dominates",
    "is_closed",
    "is_shortcut",
    "reverse",
    "induced_subgraph",
    "parse_graph",
    "format_graph",
]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def to_mask(vertices: Iterable[int] | int, n: int | None = None) -> int:
    """Bitmask of a vertex collection; ints are taken to already be masks."""
    if isinstance(vertices, int):
        mask = vertices
        if mask < 0 or (n is not None and mask >> n):
            raise IndexError(f"support mask {mask:#b} out of range for n={n}")
        return mask
    mask = 0
    for v in vertices:
        if v < 0 or (n is not None and v >= n):
            raise IndexError(f"vertex {v} out of range for n={n}")
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Digraph:
    """Loop-free simple digraph stored as out-neighbour bitmasks.

    ``out[u]`` has bit ``v`` set iff ``(u, v)`` is an edge.
    """

    n: int
    out: tuple = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        out = tuple(self.out) if self.out else (0,) * self.n
        if len(out) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(out)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(out):
            if row & ~full:
                raise IndexError(f"edge head out of range in row {u}")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
        object.__setattr__(self, "out", out)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Digraph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, adj) -> "Digraph":
        rows = []
        for u, line in enumerate(adj):
            rows.append(sum(1 << v for v, a in enumerate(line) if a))
        return cls(len(rows), tuple(rows))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.out[u])]

    @property
    def adj(self) -> list[list[bool]]:
        return [[bool(self.out[u] >> v & 1) for v in range(self.n)] for u in range(self.n)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    @cached_property
    def reach(self) -> tuple:
        """``reach[u]`` is the mask of the closure of ``{u}`` (contains ``u``)."""
        rows = [row | (1 << u) for u, row in enumerate(self.out)]
        # Warshall on bit rows
        for k in range(self.n):
            bit = 1 << k
            rk = rows[k]
            for i in range(self.n):
                if rows[i] & bit:
                    rows[i] |= rk
        return tuple(rows)

    def __repr__(self):
        return f"Digraph(n={self.n}, edges={self.edges})"


def closure_mask(g: Digraph, mask: int) -> int:
    reach = g.reach
    out = 0
    for v in iter_bits(mask):
        out |= reach[v]
    return out


def closure(g: Digraph, x: Iterable[int] | int) -> frozenset:
    """All vertices reachable from ``x`` by directed paths, ``x`` included."""
    return from_mask(closure_mask(g, to_mask(x, g.n)))


def dominates(g: Digraph, u: int, v: int) -> bool:
    """True iff ``v`` is in the closure of ``u``; reflexive."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise IndexError("vertex out of range")
    return bool(g.reach[u] >> v & 1)


def is_closed(g: Digraph, x: Iterable[int] | int) -> bool:
    mask = to_mask(x, g.n)
    return closure_mask(g, mask) == mask


def is_shortcut(g: Digraph, u: int, v: int) -> bool:
    """Whether a simple path of length >= 2 runs from ``u`` to ``v``.

    Equivalently: ``v`` is reachable from an out-neighbour ``w`` of ``u``,
    ``w`` not in ``{u, v}``, without passing through ``u``.
    """
    if u == v:
        raise ValueError("a shortcut needs distinct endpoints")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise IndexError("vertex out of range")
    blocked = 1 << u
    start = g.out[u] & ~(1 << v)
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= g.out[w]
        nxt &= ~blocked & ~seen
        if nxt >> v & 1:
            return True
        seen |= nxt
        frontier = nxt
    return False


def reverse(g: Digraph) -> Digraph:
    rows = [0] * g.n
    for u, v in g.edges:
        rows[v] |= 1 << u
    return Digraph(g.n, tuple(rows))


def induced_subgraph(g: Digraph, s: Iterable[int] | int) -> Digraph:
    """Subgraph on ``s``, relabelled ``0..|s|-1`` in increasing original order."""
    keep = sorted(from_mask(to_mask(s, g.n)))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(sum(1 << index[w] for w in iter_bits(g.out[v]) if w in index))
    return Digraph(len(keep), tuple(rows))


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines


def parse_graph(text: str) -> Digraph:
    """Parse the ``n m`` / ``u v`` edge-list format."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty graph file")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError:
        raise FormatError(f"bad header line {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise FormatError(f"header announces {m} edges, found {len(lines) - 1}")
    seen = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise FormatError(f"self-loop {u} {v}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge {u} {v} out of range")
        if (u, v) in seen:
            raise FormatError(f"duplicate edge {u} {v}")
        seen.add((u, v))
    return Digraph.from_edges(n, seen)


def format_graph(g: Digraph) -> str:
    edges = g.edges
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"
