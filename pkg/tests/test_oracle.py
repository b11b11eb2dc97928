"""The reference implementations are checked against hand-computed values only."""
import pytest

from graphmetric.errors import EnumerationTooLarge
from graphmetric.families import CHAIN2, PAIR4, PRX3, TRI, complete_graph, empty_graph
from graphmetric.graph import Digraph
from graphmetric.oracle import (
    naive_closure,
    naive_dual_enumerator,
    naive_isometry_count,
    naive_packing_radius,
    naive_same_metric,
    naive_span,
    naive_table,
    naive_vectors,
    naive_weight,
    naive_weight_enumerator,
)


def test_oracle_examples():
    assert naive_weight(TRI, {0}) == 3
    assert naive_same_metric(TRI, Digraph.from_edges(3, [(0, 2), (1, 2), (2, 1)]))
    assert not naive_same_metric(TRI, Digraph.from_edges(3, [(1, 2), (2, 1)]))
    assert naive_isometry_count(CHAIN2, 2) == 2


def test_closure_and_table():
    assert naive_closure(PRX3, {2}) == {0, 2}
    t = naive_table(PAIR4)
    assert len(t) == 16
    assert t[frozenset({2})] == 2 and t[frozenset({0, 2})] == 3


def test_vectors_and_span():
    v = naive_vectors(3, 2)
    assert v.shape == (9, 2)
    assert naive_vectors(2, 0).shape == (1, 0)
    assert naive_span(2, [(1, 1, 0), (0, 1, 1)]) == {(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)}
    assert len(naive_span(3, [(1, 2)])) == 3


def test_enumerators():
    assert naive_weight_enumerator(PAIR4, 2, [(1, 1, 0, 0)]) == [1, 0, 1, 0, 0]
    assert naive_dual_enumerator(PAIR4, 2, [(1, 1, 0, 0)]) == [1, 0, 4, 0, 3]
    assert naive_dual_enumerator(PAIR4, 2, [(0, 0, 1, 1)]) == [1, 2, 2, 2, 1]


def test_packing():
    assert naive_packing_radius(PRX3, 2, [(1, 1, 0)]) == 0
    assert naive_packing_radius(PRX3, 2, [(0, 0, 1)]) == 1
    assert naive_packing_radius(empty_graph(5), 2, [(1,) * 5]) == 2


@pytest.mark.parametrize("g, q, count", [
    (empty_graph(2), 2, 2),
    (complete_graph(2), 2, 6),
    (complete_graph(2), 3, 48),
    (empty_graph(2), 3, 8),
    (complete_graph(3), 2, 168),
])
def test_isometry_counts(g, q, count):
    assert naive_isometry_count(g, q) == count


def test_guard():
    with pytest.raises(EnumerationTooLarge):
        naive_isometry_count(empty_graph(5), 2)
