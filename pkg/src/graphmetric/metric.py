"""G-weights, G-distances, spheres and weight tables."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import EnumerationTooLarge, FormatError
from .graph import Digraph, closure_mask, from_mask, iter_bits, popcount, to_mask
from .linalg import ENUMERATION_GUARD, support_mask

__all__ = [
    "WeightTable",
    "g_weight",
    "g_weight_mask",
    "g_distance",
    "g_weight_reduced",
    "weight_table",
    "sphere",
    "sphere_supports",
    "parse_weight_table",
    "format_weight_table",
]


def _as_support(g_n: int, x) -> int:
    # tuples/lists of residues are vectors; sets and ints are supports
    if isinstance(x, (tuple, list)):
        if len(x) != g_n:
            raise ValueError(f"vector of length {len(x)} for a graph on {g_n} vertices")
        return support_mask(x)
    return to_mask(x, g_n)


def g_weight_mask(g: Digraph, mask: int) -> int:
    return popcount(closure_mask(g, mask))


def g_weight(g: Digraph, x) -> int:
    """Size of the closure of the support of ``x``.

    ``x`` may be a vector (tuple/list of residues), a set of vertices or a
    support bitmask.
    """
    return g_weight_mask(g, _as_support(g.n, x))


def g_distance(g: Digraph, x: Sequence[int], y: Sequence[int]) -> int:
    """``w_G(y - x)``; for reduced residues ``y_i - x_i != 0`` iff ``x_i != y_i``."""
    if len(x) != len(y) or len(x) != g.n:
        raise ValueError("dimension mismatch")
    diff = sum(1 << i for i, (a, b) in enumerate(zip(x, y)) if a != b)
    return g_weight_mask(g, diff)


def g_weight_reduced(r, s) -> int:
    """Weight computed on a reduced form: sum of L over the closure of pi(s)."""
    mask = to_mask(s, len(r.pi))
    image = 0
    for v in iter_bits(mask):
        image |= 1 << r.pi[v]
    ideal = 0
    for b in iter_bits(image):
        ideal |= r.reach[b]
    return sum(r.L[b] for b in iter_bits(ideal))


@dataclass
class WeightTable:
    """Map from support bitmask to G-weight; ``partial`` marks incomplete tables."""

    n: int
    weights: dict = field(default_factory=dict)
    partial: bool = False

    def __getitem__(self, s) -> int:
        return self.weights[to_mask(s, self.n)]

    def __contains__(self, s) -> bool:
        return to_mask(s, self.n) in self.weights

    def __len__(self):
        return len(self.weights)

    def get(self, s, default=None):
        return self.weights.get(to_mask(s, self.n), default)

    def items(self):
        return self.weights.items()

    def is_total(self) -> bool:
        return len(self.weights) == 1 << self.n

    def is_monotone(self) -> bool:
        """Check weight(A) <= weight(A | {v}) over entries present in the table."""
        for mask, w in self.weights.items():
            for v in range(self.n):
                bigger = mask | 1 << v
                if bigger != mask and bigger in self.weights and self.weights[bigger] < w:
                    return False
        return True


def weight_table(g: Digraph, supports: Iterable | None = None) -> WeightTable:
    """Full table over all ``2^n`` supports, or only the given ones."""
    if supports is None:
        if g.n > 24:
            raise EnumerationTooLarge(f"2^{g.n} supports")
        reach = g.reach
        weights = [0] * (1 << g.n)
        closures = [0] * (1 << g.n)
        for mask in range(1, 1 << g.n):
            low = mask & -mask
            c = closures[mask ^ low] | reach[low.bit_length() - 1]
            closures[mask] = c
            weights[mask] = popcount(c)
        return WeightTable(g.n, dict(enumerate(weights)), partial=False)
    table = {}
    for s in supports:
        m = to_mask(s, g.n)
        table[m] = g_weight_mask(g, m)
    return WeightTable(g.n, table, partial=len(table) != 1 << g.n)


def sphere_supports(g: Digraph, radius: int) -> set:
    """Supports (as frozensets) of the words of G-weight ``radius``."""
    if g.n > 24:
        raise EnumerationTooLarge(f"2^{g.n} supports")
    return {from_mask(m) for m in range(1 << g.n) if g_weight_mask(g, m) == radius}


def sphere(g: Digraph, radius: int, q: int, guard: int = ENUMERATION_GUARD) -> set:
    """All words of F_q^n at G-distance ``radius`` from zero."""
    if q ** g.n > guard:
        raise EnumerationTooLarge(f"{q}^{g.n} words exceed guard {guard}")
    out = set()
    for m in range(1 << g.n):
        if g_weight_mask(g, m) != radius:
            continue
        idx = list(iter_bits(m))
        for vals in itertools.product(range(1, q), repeat=len(idx)):
            x = [0] * g.n
            for i, a in zip(idx, vals):
                x[i] = a
            out.add(tuple(x))
    return out


def sphere_size(g: Digraph, radius: int, q: int) -> int:
    """``|S_radius|`` via supports: each support ``s`` contributes ``(q-1)^|s|``."""
    return sum((q - 1) ** popcount(m) for m in range(1 << g.n) if g_weight_mask(g, m) == radius)


def mask_to_bits(mask: int, n: int) -> str:
    """Binary string of length n, least significant bit (vertex 0) rightmost."""
    return format(mask, f"0{n}b") if n else ""


def parse_weight_table(text: str, n: int | None = None) -> WeightTable:
    """Lines ``bitmask weight``; the bitmask is binary with vertex 0 as LSB."""
    weights = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or set(parts[0]) - {"0", "1"}:
            raise FormatError(f"bad table line {line!r}")
        if n is None:
            n = len(parts[0])
        elif len(parts[0]) != n:
            raise FormatError(f"bitmask {parts[0]!r} is not of length {n}")
        mask = int(parts[0], 2)
        w = int(parts[1])
        if w < 0:
            raise FormatError("negative weight")
        if mask in weights and weights[mask] != w:
            raise FormatError(f"conflicting entries for {parts[0]}")
        weights[mask] = w
    if n is None:
        raise FormatError("empty weight table")
    if weights.get(0, 0) != 0:
        raise FormatError("the empty support must have weight 0")
    return WeightTable(n, weights, partial=len(weights) != 1 << n)


def format_weight_table(t: WeightTable) -> str:
    return "".join(f"{mask_to_bits(m, t.n)} {w}\n" for m, w in sorted(t.weights.items()))
