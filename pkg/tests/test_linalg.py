import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphmetric.errors import EnumerationTooLarge, FormatError, Singular
from graphmetric.linalg import (
    LinearCode,
    LinearMap,
    all_codes,
    apply,
    codewords,
    compose,
    dual_code,
    format_code,
    format_map,
    identity_map,
    invert,
    is_invertible,
    is_prime,
    parse_code,
    parse_map,
    permutation_map,
    pivot_columns,
    rank,
    rref,
)
from graphmetric.oracle import naive_span


def vec(s):
    return tuple(int(c) for c in s)


def test_rref_examples():
    c = rref(2, [vec("1100"), vec("1100")])
    assert c.basis == (vec("1100"),)
    assert rref(2, [vec("1100"), vec("0110")]).basis == (vec("1010"), vec("0110"))
    assert rref(3, [vec("120")]).basis == (vec("120"),)
    assert rref(3, [vec("210")]).basis == (vec("120"),)


def test_rref_canonical():
    a = rref(3, [vec("1021"), vec("0112")])
    # same row space, different generators: (1,0,2,1) + (0,1,1,2) and 2(0,1,1,2)
    b = rref(3, [(1, 1, 0, 0), (0, 2, 2, 1)])
    assert a == b
    assert pivot_columns(a) == [0, 1]


def test_rref_mixed_widths():
    with pytest.raises(ValueError):
        rref(2, [vec("10"), vec("101")])


def test_dual_examples():
    c1 = rref(2, [vec("1100")])
    d = dual_code(c1)
    assert d.k == 3
    for w in ("0011", "1110", "1101"):
        assert vec(w) in d
    full = rref(2, [vec("100"), vec("010"), vec("001")])
    assert dual_code(full).k == 0


def test_dual_six():
    c1 = rref(2, [vec("100010"), vec("101000")])
    d = dual_code(c1)
    assert d.k == 4
    for x in c1.basis:
        for y in d.basis:
            assert sum(a * b for a, b in zip(x, y)) % 2 == 0


def test_codewords():
    assert sorted(codewords(rref(2, [vec("1100")]))) == [vec("0000"), vec("1100")]
    assert list(codewords(LinearCode(2, 4, ()))) == [vec("0000")]
    words = list(codewords(rref(2, [vec("100"), vec("010")])))
    assert len(words) == 4 and words[0] == vec("000")
    with pytest.raises(EnumerationTooLarge):
        list(codewords(rref(2, np.eye(30, dtype=int).tolist()), guard=1 << 10))


def test_maps():
    t = LinearMap(2, ((1, 1), (0, 1)))
    assert apply(t, (1, 0)) == (1, 1)
    assert apply(identity_map(3, 3), (2, 1, 0)) == (2, 1, 0)
    assert not is_invertible(LinearMap(2, ((1, 1), (1, 1))))
    with pytest.raises(Singular):
        invert(LinearMap(2, ((1, 1), (1, 1))))
    p = permutation_map(2, (1, 2, 0))
    assert apply(p, (1, 0, 0)) == (0, 1, 0)


def test_compose_order():
    s = LinearMap(2, ((1, 1), (0, 1)))
    t = permutation_map(2, (1, 0))
    x = (1, 0)
    assert apply(compose(s, t), x) == apply(s, apply(t, x))


def test_primes():
    assert [q for q in range(20) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize("q, n, k, count", [(2, 4, 2, 35), (2, 5, 2, 155), (3, 3, 1, 13), (2, 3, 0, 1)])
def test_all_codes_gaussian_binomial(q, n, k, count):
    codes = list(all_codes(q, n, k))
    assert len(codes) == count
    assert len({c.basis for c in codes}) == count


matrices = st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.sampled_from([2, 3, 5]), st.just(n), st.integers(0, 5), st.integers(0, 2**32 - 1)))


def _random_rows(q, n, k, seed):
    rng = np.random.default_rng(seed)
    return rng.integers(0, q, size=(k, n)).tolist()


@settings(max_examples=120, deadline=None)
@given(matrices)
def test_rref_matches_naive_span(params):
    q, n, k, seed = params
    rows = _random_rows(q, n, k, seed)
    c = rref(q, rows, n)
    assert c.k == rank(q, rows)
    words = set(codewords(c))
    assert len(words) == q ** c.k
    assert words == (naive_span(q, rows) if rows else {(0,) * n})
    # pivots are 1 and clear their columns
    for b, p in zip(c.basis, pivot_columns(c)):
        assert b[p] == 1
        assert sum(1 for r in c.basis if r[p]) == 1


@settings(max_examples=120, deadline=None)
@given(matrices)
def test_dual_properties(params):
    q, n, k, seed = params
    c = rref(q, _random_rows(q, n, k, seed), n)
    d = dual_code(c)
    assert c.k + d.k == n
    for x in c.basis:
        for y in d.basis:
            assert sum(a * b for a, b in zip(x, y)) % q == 0
    assert dual_code(d) == c


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_inverse(params):
    q, n, _, seed = params
    rows = _random_rows(q, n, n, seed)
    t = LinearMap(q, tuple(map(tuple, rows)))
    if is_invertible(t):
        i = invert(t)
        assert compose(t, i) == identity_map(q, n)
        assert compose(i, t) == identity_map(q, n)
    else:
        assert rank(q, rows) < n


def test_code_format_round_trip():
    for q, n, k in [(2, 4, 2), (3, 3, 1), (5, 2, 2)]:
        for c in itertools.islice(all_codes(q, n, k), 10):
            assert parse_code(format_code(c)) == c
    assert parse_code("2 4 1\n1100\n") == rref(2, [vec("1100")])


def test_map_format_round_trip():
    t = LinearMap(3, ((1, 2, 0), (0, 1, 0), (2, 0, 1)))
    assert parse_map(format_map(t)) == t


@pytest.mark.parametrize("text", ["", "4 3 1\n100\n", "2 3 2\n100\n", "2 3 1\n120\n", "2 3 1\n10\n"])
def test_code_format_errors(text):
    with pytest.raises(FormatError):
        parse_code(text)


@pytest.mark.parametrize("text", ["", "2 2\n1 0\n", "2 2\n1 0\n0 5\n", "2 2\n1 0 0\n0 1\n"])
def test_map_format_errors(text):
    with pytest.raises(FormatError):
        parse_map(text)
