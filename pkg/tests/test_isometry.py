import functools
import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import digraphs
from graphmetric.canonical import reduced_form
from graphmetric.codes import max_set
from graphmetric.errors import NotAnIsometry
from graphmetric.families import CHAIN2, HAMM4, SIX, TRI, all_digraphs, complete_graph, empty_graph
from graphmetric.isometry import (
    aut_expanded,
    aut_generators,
    decompose_isometry,
    diag_invertible_count,
    gl_order,
    group_order,
    in_n_plus,
    is_automorphism,
    is_isometry,
    isometry_generators,
    mask_action,
    n_order,
    n_plus_order,
    product_order,
    respects_domination,
)
from graphmetric.linalg import LinearMap, apply, compose, identity_map, invert, permutation_map
from graphmetric.metric import g_weight
from graphmetric.oracle import naive_isometries, naive_isometry_count

CLIQUE2 = complete_graph(2)


def test_respects_domination_examples():
    assert respects_domination(CHAIN2, LinearMap(2, ((1, 1), (0, 1))))
    assert not respects_domination(CHAIN2, LinearMap(2, ((1, 0), (1, 1))))
    assert respects_domination(TRI, identity_map(3, 3))


def test_aut_examples():
    assert len(aut_expanded(HAMM4)) == 24
    assert aut_expanded(CHAIN2) == [(0, 1)]
    assert len(aut_expanded(SIX)) == 48
    assert is_automorphism(SIX, (1, 0, 4, 5, 2, 3))
    assert not is_automorphism(CHAIN2, (1, 0))


def test_is_isometry_examples():
    assert is_isometry(CHAIN2, LinearMap(2, ((1, 1), (0, 1))))
    assert not is_isometry(CHAIN2, permutation_map(2, (1, 0)))
    assert is_isometry(TRI, identity_map(3, 3))
    assert is_isometry(TRI, identity_map(5, 3))


def test_decompose_examples():
    t = LinearMap(2, ((1, 1), (0, 1)))
    d = decompose_isometry(CHAIN2, t)
    assert d.phi == (0, 1) and d.nmap == t
    p = permutation_map(2, (2, 0, 3, 1))
    d = decompose_isometry(HAMM4, p)
    assert d.phi == (2, 0, 3, 1) and d.nmap == identity_map(2, 4)
    d = decompose_isometry(CLIQUE2, permutation_map(2, (1, 0)))
    assert d.phi == (1, 0) and d.nmap == identity_map(2, 2)


def test_decompose_rejects():
    with pytest.raises(NotAnIsometry):
        decompose_isometry(CHAIN2, permutation_map(2, (1, 0)))
    with pytest.raises(NotAnIsometry):
        decompose_isometry(HAMM4, LinearMap(2, ((1, 1, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))))


@pytest.mark.parametrize("g, q, order", [
    (CHAIN2, 2, 2),
    (empty_graph(3), 2, 6),
    (CLIQUE2, 2, 6),
    (CLIQUE2, 3, 48),
    (TRI, 2, 24),
    (complete_graph(3), 2, 168),
    (SIX, 2, 6 ** 3 * 6),
])
def test_group_order_examples(g, q, order):
    assert group_order(g, q) == order


def test_group_order_against_enumeration():
    for g in (CHAIN2, CLIQUE2, TRI, empty_graph(3), complete_graph(3)):
        for q in (2, 3):
            if q ** (g.n * g.n) > 1 << 22:
                continue
            assert group_order(g, q) == naive_isometry_count(g, q)


def test_literal_product_overcounts():
    # |Aut| * |N| taken literally agrees on small binary cliques and drifts after
    assert product_order(CHAIN2, 2) == group_order(CHAIN2, 2)
    assert product_order(TRI, 2) == group_order(TRI, 2) == 24
    assert product_order(CLIQUE2, 2) == group_order(CLIQUE2, 2) == 6
    assert product_order(CLIQUE2, 3) == 56 and group_order(CLIQUE2, 3) == 48
    assert product_order(complete_graph(3), 2) == 204 and group_order(complete_graph(3), 2) == 168


def test_n_is_not_closed():
    # two members of N with nonzero diagonal whose product has a zero diagonal
    a = LinearMap(2, ((1, 1), (0, 1)))
    b = LinearMap(2, ((1, 0), (1, 1)))
    ab = compose(a, b)
    assert all(m.matrix[i][i] for m in (a, b) for i in range(2))
    # row convention: the matrix of a o b is M_b M_a
    assert ab.matrix == ((1, 1), (1, 0))
    assert is_isometry(CLIQUE2, ab)


def test_matrix_counts():
    assert [gl_order(k, 2) for k in range(4)] == [1, 1, 6, 168]
    assert gl_order(2, 3) == 48
    assert [diag_invertible_count(k, 2) for k in range(4)] == [1, 1, 3, 34]
    assert diag_invertible_count(2, 3) == 28
    assert n_order(CHAIN2, 2) == 2 and n_plus_order(CHAIN2, 2) == 2
    assert n_plus_order(SIX, 2) == 6 ** 3


def _brute_group(g, q):
    mats = naive_isometries(g, q)
    return {tuple(map(tuple, m)) for m in mats}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_every_isometry_decomposes(n):
    for g in all_digraphs(n):
        for m in _brute_group(g, 2):
            t = LinearMap(2, m)
            d = decompose_isometry(g, t)
            assert d.compose() == t
            assert is_automorphism(g, d.phi)
            assert in_n_plus(g, d.nmap)


def test_generators_generate():
    for g in (TRI, CHAIN2, complete_graph(3), empty_graph(3)):
        target = group_order(g, 2)
        seen = {identity_map(2, g.n).matrix}
        frontier = list(seen)
        gens = isometry_generators(g, 2)
        while frontier:
            nxt = []
            for m in frontier:
                for s in gens:
                    p = compose(s, LinearMap(2, m)).matrix
                    if p not in seen:
                        seen.add(p)
                        nxt.append(p)
            frontier = nxt
        assert len(seen) == target


def test_aut_generators_generate():
    for g in (HAMM4, SIX, TRI):
        gens = aut_generators(g)
        group = {tuple(range(g.n))}
        frontier = list(group)
        while frontier:
            nxt = []
            for p in frontier:
                for s in gens:
                    r = tuple(s[p[i]] for i in range(g.n))
                    if r not in group:
                        group.add(r)
                        nxt.append(r)
            frontier = nxt
        assert group == set(aut_expanded(g))


@settings(max_examples=60, deadline=None)
@given(digraphs(5), st.integers(0, 2**32 - 1), st.sampled_from([2, 3]))
def test_random_products_of_generators(g, seed, q):
    rng = np.random.default_rng(seed)
    gens = isometry_generators(g, q)
    if not gens:
        return
    t = functools.reduce(compose, [gens[i] for i in rng.integers(0, len(gens), 6)], identity_map(q, g.n))
    assert is_isometry(g, t)
    d = decompose_isometry(g, t)
    assert d.compose() == t
    x = tuple(int(a) for a in rng.integers(0, q, g.n))
    assert g_weight(g, apply(t, x)) == g_weight(g, x)


@settings(max_examples=40, deadline=None)
@given(digraphs(6))
def test_order_divides_and_matches_parts(g):
    order = group_order(g, 2)
    assert order % n_plus_order(g, 2) == 0
    assert order >= len(aut_expanded(g))


def test_mask_action():
    t = LinearMap(2, ((1, 1, 0), (0, 1, 0), (0, 0, 1)))
    table = mask_action(t)
    for x in range(8):
        vec = tuple(x >> i & 1 for i in range(3))
        y = apply(t, vec)
        assert table[x] == sum(b << i for i, b in enumerate(y))
    with pytest.raises(ValueError):
        mask_action(identity_map(3, 2))


def _random_pattern_map(rng, g, q):
    while True:
        m = [[int(rng.integers(0, q)) if g.reach[i] >> j & 1 else 0 for j in range(g.n)] for i in range(g.n)]
        t = LinearMap(q, m)
        if in_n_plus(g, t):
            return t


@settings(max_examples=40, deadline=None)
@given(digraphs(6), st.integers(0, 2**32 - 1), st.sampled_from([2, 3]))
def test_n_plus_is_a_group(g, seed, q):
    rng = np.random.default_rng(seed)
    a, b = _random_pattern_map(rng, g, q), _random_pattern_map(rng, g, q)
    assert in_n_plus(g, compose(a, b))
    assert in_n_plus(g, invert(a))
    assert is_isometry(g, a)


def test_max_set_preserved_up_to_projection():
    checked = 0
    for g in all_digraphs(3):
        r = reduced_form(g)
        for m in _brute_group(g, 2):
            t = LinearMap(2, m)
            if not respects_domination(g, t):
                continue
            for x in itertools.product((0, 1), repeat=3):
                a, b = max_set(r, x), max_set(r, apply(t, x))
                assert {r.pi[i] for i in a} == {r.pi[i] for i in b}
                checked += 1
    assert checked > 0
    # the sets themselves can move inside a clique
    t = LinearMap(2, ((1, 0), (1, 1)))
    r = reduced_form(CLIQUE2)
    assert respects_domination(CLIQUE2, t)
    assert max_set(r, (0, 1)) == {1} and max_set(r, apply(t, (0, 1))) == {0, 1}
