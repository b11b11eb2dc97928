"""
Recovering a graph from weights
===============================

Singleton and pair weights pin down the metric.  A handful of well-chosen
weights already suffice, and a perfect matching of pairs can be skipped.
"""
import itertools

from graphmetric.families import preorder_classes
from graphmetric.graph import Digraph, format_graph
from graphmetric.metric import weight_table
from graphmetric.reconstruction import (
    WeightOracle,
    certificate,
    d_of_n,
    exact_m_values,
    infer_from_weight12,
    lower_bound_witness,
    m_bounds,
    recover_matching_weights,
    verify_certificate,
)

hidden = Digraph.from_edges(4, [(0, 1), (1, 2), (3, 2)])

# %%
# Ask for every weight of a word with one or two nonzero coordinates.
oracle = WeightOracle.from_graph(hidden)
found = infer_from_weight12(oracle)
print(f"{oracle.queries} queries recover:")
print(format_graph(found), end="")

# %%
# Leave out the pairs {0,3} and {1,2}; the missing weights are forced.
pairs = [set(p) for p in itertools.combinations(range(4), 2) if set(p) not in ({0, 3}, {1, 2})]
partial = weight_table(hidden, [{i} for i in range(4)] + pairs)
completed = recover_matching_weights(partial)
print("w({0,3}) =", completed[{0, 3}], " w({1,2}) =", completed[{1, 2}])
print("universally sufficient supports for n = 4:", d_of_n(4))

# %%
# Two graphs that differ only on two pair weights: neither pair can be skipped.
g1, g2, s1, s2 = lower_bound_witness(4)
print("G1:", weight_table(g1)[s1], weight_table(g1)[s2], " G2:", weight_table(g2)[s1], weight_table(g2)[s2])

# %%
# Per graph, at most 2n - 1 weights identify it among all metrics.
for g in preorder_classes(3):
    cert = certificate(g)
    print(len(cert), "weights", "unique" if verify_certificate(cert, 3) else "ambiguous", g.edges)

# %%
# Exact worst and best cases for tiny n, against the general bounds.
for n in range(1, 5):
    print(n, "exact (min, max):", exact_m_values(n), " bounds (min, lower, upper):", m_bounds(n))
