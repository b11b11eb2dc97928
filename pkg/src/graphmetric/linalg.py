"""Exact linear algebra over prime fields F_q.

Vectors are tuples of residues.  A :class:`LinearMap` stores the images of
the standard basis as rows: ``T(e_i) = sum_j matrix[i][j] e_j``, so a vector
``x`` (a row) maps to ``x @ matrix``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import EnumerationTooLarge, FormatError, Singular

__all__ = [
    "is_prime",
    "LinearCode",
    "LinearMap",
    "rref",
    "rank",
    "dual_code",
    "codewords",
    "all_codes",
    "apply",
    "compose",
    "invert",
    "is_invertible",
    "identity_map",
    "permutation_map",
    "support_mask",
    "vector_from_string",
    "vector_to_string",
    "parse_code",
    "format_code",
    "parse_map",
    "format_map",
    "ENUMERATION_GUARD",
]

ENUMERATION_GUARD = 1 << 24


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, int(q ** 0.5) + 1))


def _check_q(q: int):
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime; only prime fields are supported")


def support_mask(x: Sequence[int]) -> int:
    return sum(1 << i for i, a in enumerate(x) if a)


def vector_from_string(s: str) -> tuple:
    """``"1100"`` -> ``(1, 1, 0, 0)``; coordinate 0 is the leftmost digit."""
    return tuple(int(c) for c in s.replace(" ", ""))


def vector_to_string(x: Sequence[int]) -> str:
    if all(a < 10 for a in x):
        return "".join(str(a) for a in x)
    return " ".join(str(a) for a in x)


@dataclass(frozen=True)
class LinearCode:
    """Linear code given by its reduced row-echelon basis."""

    q: int
    n: int
    basis: tuple = ()

    @property
    def k(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.q ** self.k

    def __contains__(self, x) -> bool:
        return rank(self.q, list(self.basis) + [tuple(x)]) == self.k

    def __repr__(self):
        rows = ", ".join(vector_to_string(b) for b in self.basis)
        return f"LinearCode(q={self.q}, n={self.n}, basis=[{rows}])"


def _rref_rows(q: int, rows: list[list[int]], ncols: int, order: Sequence[int]):
    pivots = []
    r = 0
    for c in order:
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = pow(rows[r][c], q - 2, q)
        rows[r] = [a * inv % q for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % q for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rref(q: int, rows: Iterable[Sequence[int]], n: int | None = None,
         column_order: Sequence[int] | None = None) -> LinearCode:
    """Canonical basis of the row space of ``rows`` over F_q.

    ``column_order`` changes the order in which pivot columns are searched;
    the default is ``0..n-1`` and gives the usual RREF.
    """
    _check_q(q)
    rows = [list(r) for r in rows]
    if n is None:
        if not rows:
            raise ValueError("cannot infer length of an empty row set")
        n = len(rows[0])
    for r in rows:
        if len(r) != n:
            raise ValueError("rows of different widths")
        if any(not (0 <= a < q) for a in r):
            raise ValueError(f"entry outside F_{q}")
    order = list(range(n)) if column_order is None else list(column_order)
    basis, _ = _rref_rows(q, rows, n, order)
    return LinearCode(q, n, tuple(tuple(b) for b in basis))


def rank(q: int, rows: Sequence[Sequence[int]]) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    basis, _ = _rref_rows(q, rows, len(rows[0]), range(len(rows[0])))
    return len(basis)


def pivot_columns(c: LinearCode) -> list[int]:
    return [next(j for j, a in enumerate(b) if a) for b in c.basis]


def dual_code(c: LinearCode) -> LinearCode:
    """Orthogonal complement under the standard dot product."""
    q, n = c.q, c.n
    pivots = pivot_columns(c)
    free = [j for j in range(n) if j not in pivots]
    rows = []
    for f in free:
        y = [0] * n
        y[f] = 1
        for b, p in zip(c.basis, pivots):
            y[p] = (-b[f]) % q
        rows.append(y)
    return rref(q, rows, n)


def codewords(c: LinearCode, guard: int = ENUMERATION_GUARD) -> Iterator[tuple]:
    """All ``q^k`` codewords, the zero word first."""
    if c.q ** c.k > guard:
        raise EnumerationTooLarge(f"{c.q}^{c.k} codewords exceed guard {guard}")
    q, n = c.q, c.n
    for coeffs in itertools.product(range(q), repeat=c.k):
        x = [0] * n
        for a, b in zip(coeffs, c.basis):
            if a:
                for j, bj in enumerate(b):
                    if bj:
                        x[j] = (x[j] + a * bj) % q
        yield tuple(x)


def all_codes(q: int, n: int, k: int) -> Iterator[LinearCode]:
    """Every ``k``-dimensional subspace of F_q^n, once each, as an RREF basis."""
    _check_q(q)
    for pivots in itertools.combinations(range(n), k):
        slots = []
        for i, p in enumerate(pivots):
            for j in range(p + 1, n):
                if j not in pivots:
                    slots.append((i, j))
        for fill in itertools.product(range(q), repeat=len(slots)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), a in zip(slots, fill):
                rows[i][j] = a
            yield LinearCode(q, n, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class LinearMap:
    q: int
    matrix: tuple

    def __post_init__(self):
        m = tuple(tuple(int(a) for a in row) for row in self.matrix)
        n = len(m)
        if any(len(row) != n for row in m):
            raise ValueError("linear map matrix must be square")
        if any(not (0 <= a < self.q) for row in m for a in row):
            raise ValueError(f"entry outside F_{self.q}")
        object.__setattr__(self, "matrix", m)

    @property
    def n(self) -> int:
        return len(self.matrix)

    def __call__(self, x):
        return apply(self, x)


def identity_map(q: int, n: int) -> LinearMap:
    return LinearMap(q, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def permutation_map(q: int, perm: Sequence[int]) -> LinearMap:
    """The map ``e_i -> e_{perm[i]}``."""
    n = len(perm)
    return LinearMap(q, tuple(tuple(int(perm[i] == j) for j in range(n)) for i in range(n)))


def apply(t: LinearMap, x: Sequence[int]) -> tuple:
    if len(x) != t.n:
        raise ValueError("dimension mismatch")
    q = t.q
    out = [0] * t.n
    for a, row in zip(x, t.matrix):
        if a:
            for j, b in enumerate(row):
                if b:
                    out[j] += a * b
    return tuple(v % q for v in out)


def compose(s: LinearMap, t: LinearMap) -> LinearMap:
    """``s o t`` (apply ``t`` first)."""
    if s.q != t.q or s.n != t.n:
        raise ValueError("incompatible maps")
    rows = tuple(apply(s, row) for row in t.matrix)
    return LinearMap(s.q, rows)


def is_invertible(t: LinearMap) -> bool:
    return rank(t.q, t.matrix) == t.n


def invert(t: LinearMap) -> LinearMap:
    q, n = t.q, t.n
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(t.matrix)]
    reduced, pivots = _rref_rows(q, aug, 2 * n, range(n))
    if pivots != list(range(n)):
        raise Singular("linear map is not invertible")
    return LinearMap(q, tuple(tuple(r[n:]) for r in reduced))


def _content_lines(text: str) -> list[str]:
    return [l.strip() for l in text.splitlines() if l.strip() and not l.strip().startswith("#")]


def parse_code(text: str) -> LinearCode:
    """``q n k`` header then ``k`` rows of residues; normalised to RREF."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty code file")
    try:
        q, n, k = (int(t) for t in lines[0].split())
    except ValueError:
        raise FormatError(f"bad header {lines[0]!r}") from None
    if not is_prime(q):
        raise FormatError(f"q={q} is not prime")
    if len(lines) - 1 != k:
        raise FormatError(f"header announces {k} rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) == 1 and len(parts[0]) == n and n > 1:
            parts = list(parts[0])
        if len(parts) != n:
            raise FormatError(f"row {line!r} does not have {n} entries")
        row = [int(p) for p in parts]
        if any(not (0 <= a < q) for a in row):
            raise FormatError(f"row {line!r} has entries outside F_{q}")
        rows.append(row)
    return rref(q, rows, n)


def format_code(c: LinearCode) -> str:
    lines = [f"{c.q} {c.n} {c.k}"] + [" ".join(str(a) for a in b) for b in c.basis]
    return "\n".join(lines) + "\n"


def parse_map(text: str) -> LinearMap:
    """``q n`` header then ``n`` rows; row ``i`` is the image of ``e_i``."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty map file")
    try:
        q, n = (int(t) for t in lines[0].split())
    except ValueError:
        raise FormatError(f"bad header {lines[0]!r}") from None
    if len(lines) - 1 != n:
        raise FormatError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != n:
            raise FormatError(f"row {line!r} does not have {n} entries")
        rows.append(tuple(int(p) for p in parts))
    try:
        return LinearMap(q, tuple(rows))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_map(t: LinearMap) -> str:
    lines = [f"{t.q} {t.n}"] + [" ".join(str(a) for a in row) for row in t.matrix]
    return "\n".join(lines) + "\n"
