"""Weight enumerators, the MacWilliams identity and the extension property.

Characters are used only over F_2, where ``chi(a) = (-1)^a`` keeps every
sum an exact integer.  The closed-form block products also make sense for
any prime ``q`` because a nontrivial additive character sums to ``-1`` over
the nonzero elements.
"""
from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .canonical import ReducedForm, is_hierarchical, reduced_form
from .errors import (
    EnumerationTooLarge,
    FormatError,
    NotSingleLevel,
    SearchTooLarge,
    UdpViolated,
)
from .graph import Digraph, closure_mask, iter_bits, popcount, reverse, to_mask
from .isometry import isometry_generators, mask_action
from .linalg import ENUMERATION_GUARD, LinearCode, all_codes, codewords, dual_code, rref, support_mask
from .metric import g_weight_mask
from .results import CheckResult

__all__ = [
    "WeightEnumerator",
    "ExtensionWitness",
    "weight_enumerator",
    "udp_check",
    "omega_check",
    "identity_check",
    "identity_predicted",
    "character_sum",
    "p_closed_form",
    "dual_enumerator_1level",
    "extension_check",
    "extends",
    "extension_predicted",
    "i_sets",
]


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficients ``A_0..A_n`` of ``sum_i A_i X^i``."""

    coeffs: tuple
    q: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        if len(self.coeffs) != self.n + 1:
            raise ValueError("need n + 1 coefficients")
        if any(a < 0 for a in self.coeffs):
            raise ValueError("negative coefficient")

    @property
    def size(self) -> int:
        return sum(self.coeffs)

    def to_json(self) -> str:
        return json.dumps({"coeffs": list(self.coeffs), "q": self.q, "n": self.n})

    @classmethod
    def from_json(cls, text: str) -> "WeightEnumerator":
        try:
            d = json.loads(text)
            return cls(tuple(d["coeffs"]), int(d["q"]), int(d["n"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad enumerator record: {exc}") from None

    def __str__(self):
        def term(i, a):
            if i == 0:
                return str(a)
            mono = "X" if i == 1 else f"X^{i}"
            return mono if a == 1 else f"{a}{mono}"

        return " + ".join(term(i, a) for i, a in enumerate(self.coeffs) if a) or "0"


def weight_enumerator(g: Digraph, c: LinearCode, guard: int = ENUMERATION_GUARD) -> WeightEnumerator:
    counts = [0] * (c.n + 1)
    for x in codewords(c, guard):
        counts[g_weight_mask(g, support_mask(x))] += 1
    return WeightEnumerator(tuple(counts), c.q, c.n)


def udp_check(r: ReducedForm, guard: int = 20) -> CheckResult:
    """Within each level, equal L-sums must come from equal L-multisets.

    Witness ``(S, S')``: reduced-vertex tuples on one level with equal
    sums and different multisets, ``S`` found later in the scan.
    """
    for lv in r.levels:
        if len(lv) > guard:
            raise SearchTooLarge(f"level with {len(lv)} vertices exceeds guard {guard}")
        seen: dict = {}
        for mask in range(1, 1 << len(lv)):
            members = tuple(lv[i] for i in iter_bits(mask))
            ms = tuple(sorted(r.L[b] for b in members))
            total = sum(ms)
            prev = seen.setdefault(total, members)
            if tuple(sorted(r.L[b] for b in prev)) != ms:
                return CheckResult(False, (members, prev))
    return CheckResult(True)


def omega_check(r: ReducedForm) -> CheckResult:
    """No level holds three or more blocks sharing a size larger than one.

    Witness ``(level, size, blocks)``.
    """
    for i, lv in enumerate(r.levels, start=1):
        count = Counter(r.L[b] for b in lv)
        for k in sorted(count):
            if k > 1 and count[k] > 2:
                return CheckResult(False, (i, k, tuple(b for b in lv if r.L[b] == k)))
    return CheckResult(True)


def _codes_in_scan_order(q, n, max_dim):
    for k in range(max_dim + 1):
        yield from sorted(all_codes(q, n, k), key=lambda c: c.basis, reverse=True)


def identity_check(g: Digraph, max_dim: int = 2, q: int = 2) -> CheckResult:
    """Does ``W^G(C)`` determine ``W^{G-bar}(C^perp)`` over all codes of small dimension?

    Codes are scanned by dimension, then by RREF basis in decreasing
    lexicographic order.  Witness: ``(C1, C2)`` with equal enumerators whose
    duals differ, ``C1`` the first code seen with that enumerator.
    """
    if q ** g.n > 1 << 12 or max_dim > 3:
        raise SearchTooLarge("identity scan limited to q^n <= 4096 and dimension <= 3")
    gbar = reverse(g)
    first: dict = {}
    for c in _codes_in_scan_order(q, g.n, min(max_dim, g.n)):
        w = weight_enumerator(g, c).coeffs
        wd = weight_enumerator(gbar, dual_code(c)).coeffs
        if w in first:
            c0, wd0 = first[w]
            if wd0 != wd:
                return CheckResult(False, (c0, c))
        else:
            first[w] = (c, wd)
    return CheckResult(True)


def identity_predicted(g: Digraph):
    """``True``/``False`` from the UDP when the poset is hierarchical, else ``None``."""
    r = reduced_form(g)
    if not is_hierarchical(r):
        return None
    return udp_check(r).holds


@lru_cache(maxsize=1 << 14)
def _generating_supports(g: Digraph, jmask: int) -> tuple:
    members = list(iter_bits(jmask))
    out = []
    for bits in range(1 << len(members)):
        s = sum(1 << members[i] for i in iter_bits(bits))
        if closure_mask(g, s) == jmask:
            out.append(s)
    return tuple(out)


def character_sum(g: Digraph, x, jc) -> int:
    """``sum (-1)^{x.y}`` over binary ``y`` whose support generates ``jc``."""
    jmask = to_mask(jc, g.n)
    if closure_mask(g, jmask) != jmask:
        raise ValueError("the set must be closed")
    if popcount(jmask) > 24:
        raise EnumerationTooLarge("2^|J| supports")
    xm = support_mask(x)
    return sum(-1 if popcount(s & xm) & 1 else 1 for s in _generating_supports(g, jmask))


def p_closed_form(g: Digraph, x, jc, q: int = 2) -> int:
    """Block product for a single-level poset.

    Each block of ``jc`` contributes ``q^L - 1`` when ``x`` vanishes on it
    and ``-1`` otherwise.
    """
    r = reduced_form(g)
    if r.h > 1:
        raise NotSingleLevel(f"poset has {r.h} levels")
    jmask = to_mask(jc, g.n)
    hit = {r.pi[i] for i in iter_bits(support_mask(x))}
    blocks = {r.pi[i] for i in iter_bits(jmask)}
    if any(any(not jmask >> v & 1 for v in r.blocks[b]) for b in blocks):
        raise ValueError("the set must be closed")
    out = 1
    for b in blocks:
        out *= -1 if b in hit else q ** r.L[b] - 1
    return out


def dual_enumerator_1level(g: Digraph, w: WeightEnumerator, size: int | None = None) -> WeightEnumerator:
    """``W^{G-bar}(C^perp)`` from ``W^G(C)`` when the poset has one level.

    ``A'_j = (1/|C|) sum_i A_i p_ij`` where ``p_ij`` sums the block product
    over all closed sets of size ``j`` for a word of weight ``i``; the UDP
    makes ``p_ij`` independent of the word chosen.
    """
    r = reduced_form(g)
    if r.h > 1:
        raise NotSingleLevel(f"poset has {r.h} levels")
    udp = udp_check(r)
    if not udp:
        raise UdpViolated(f"equal sums with different block sizes: {udp.witness}")
    q, n = w.q, w.n
    size = w.size if size is None else size
    if r.m > 20:
        raise SearchTooLarge("closed-set scan over 2^m block subsets")
    subsets = [(mask, sum(r.L[b] for b in iter_bits(mask))) for mask in range(1 << r.m)]
    rep = {}
    for mask, s in subsets:
        rep.setdefault(s, mask)
    out = [0] * (n + 1)
    for i, a in enumerate(w.coeffs):
        if not a:
            continue
        if i not in rep:
            raise ValueError(f"no word of weight {i} exists")
        hit = rep[i]
        for mask, j in subsets:
            p = 1
            for b in iter_bits(mask):
                p *= -1 if hit >> b & 1 else q ** r.L[b] - 1
            out[j] += a * p
    if any(v % size for v in out):
        raise ValueError("transform is not divisible by |C|; input is not an enumerator")
    return WeightEnumerator(tuple(v // size for v in out), q, n)


@dataclass(frozen=True)
class ExtensionWitness:
    """A weight-preserving ``t: code -> image`` with ``t(basis[i]) = images[i]``."""

    code: LinearCode
    image: LinearCode
    basis: tuple
    images: tuple


def _mask_vec(m, n):
    return tuple(m >> i & 1 for i in range(n))


class _Orbits:
    """Orbits of the isometry group on ordered independent k-tuples over F_2."""

    def __init__(self, g: Digraph, k: int):
        n = g.n
        if n > 8:
            raise SearchTooLarge("orbit scan needs n <= 8")
        tuples = []
        for t in itertools.permutations(range(1, 1 << n), k):
            span = {0}
            ok = True
            for v in t:
                if v in span:
                    ok = False
                    break
                span |= {s ^ v for s in span}
            if ok:
                tuples.append(t)
        if len(tuples) > 1 << 20:
            raise SearchTooLarge("too many ordered independent tuples")
        self.index = {t: i for i, t in enumerate(tuples)}
        self.tuples = tuples
        self.parent = list(range(len(tuples)))
        for gen in isometry_generators(g, 2):
            table = mask_action(gen)
            for i, t in enumerate(tuples):
                self._union(i, self.index[tuple(table[v] for v in t)])
        wt = [g_weight_mask(g, m) for m in range(1 << n)]
        self.profile = []
        for t in tuples:
            prof = []
            for coeffs in range(1, 1 << k):
                v = 0
                for j in iter_bits(coeffs):
                    v ^= t[j]
                prof.append(wt[v])
            self.profile.append(tuple(prof))

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def _union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def extends(g: Digraph, basis, images) -> bool:
    """Does ``basis[i] -> images[i]`` extend to a linear isometry of F_2^n?

    False as well when the map is not weight preserving on the span.
    """
    a = tuple(support_mask(x) for x in basis)
    b = tuple(support_mask(x) for x in images)
    orb = _Orbits(g, len(a))
    if a not in orb.index or b not in orb.index:
        raise ValueError("basis and images must be linearly independent")
    ia, ib = orb.index[a], orb.index[b]
    if orb.profile[ia] != orb.profile[ib]:
        return False
    return orb.find(ia) == orb.find(ib)


def extension_check(g: Digraph, dim_cap: int = 2) -> CheckResult:
    """Does every weight-preserving map between codes of dimension <= cap extend?

    Over F_2.  A map between codes given on ordered bases preserves weights
    iff the two bases have the same weight profile, and extends iff they lie
    in one orbit of the isometry group.  Witness: :class:`ExtensionWitness`.
    """
    n = g.n
    for k in range(1, min(dim_cap, n) + 1):
        orb = _Orbits(g, k)
        first: dict = {}
        for i, t in enumerate(orb.tuples):
            prof = orb.profile[i]
            root = orb.find(i)
            j = first.setdefault(prof, i)
            if orb.find(j) != root:
                a, b = orb.tuples[j], t
                basis = tuple(_mask_vec(v, n) for v in a)
                images = tuple(_mask_vec(v, n) for v in b)
                return CheckResult(False, ExtensionWitness(
                    rref(2, basis, n), rref(2, images, n), basis, images))
    return CheckResult(True)


def extension_predicted(g: Digraph):
    """UDP and condition Omega on a hierarchical poset; ``None`` otherwise."""
    r = reduced_form(g)
    if not is_hierarchical(r):
        return None
    return udp_check(r).holds and omega_check(r).holds


def i_sets(r: ReducedForm, c: LinearCode) -> dict:
    """``{j: blocks of size j hit by supp(C)}``."""
    s = 0
    for b in c.basis:
        s |= support_mask(b)
    out: dict = {}
    for b in sorted({r.pi[i] for i in iter_bits(s)}):
        out.setdefault(r.L[b], set()).add(b)
    return out
