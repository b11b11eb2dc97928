"""
Weights, distances and canonical forms
======================================

A directed graph on the coordinates turns F_q^n into a metric space: the
weight of a word counts the vertices reachable from its support.
"""
from graphmetric import expanded_form, g_distance, g_weight, reduced_form, same_metric
from graphmetric.canonical import isomorphic_metrics
from graphmetric.families import TRI, cycle_graph, complete_graph
from graphmetric.graph import Digraph, is_shortcut

# %%
# Vertex 0 points at a 2-clique {1, 2}.  Anything touching 0 reaches all three.
print("w(100) =", g_weight(TRI, (1, 0, 0)))
print("w(010) =", g_weight(TRI, (0, 1, 0)))
print("d(110, 011) =", g_distance(TRI, (1, 1, 0), (0, 1, 1)))

# %%
# The edges (0,1) and (0,2) are shortcuts: dropping one leaves the metric unchanged.
print("(0,1) is a shortcut:", is_shortcut(TRI, 0, 1))
trimmed = Digraph.from_edges(3, [(0, 2), (1, 2), (2, 1)])
print("same metric after removing it:", same_metric(TRI, trimmed))

# %%
# The expanded form adds every implied edge; a circuit through all vertices
# expands to the complete graph.
print("expanded 3-cycle == K3:", expanded_form(cycle_graph(3)) == complete_graph(3))
print("3-cycle and K3 give isomorphic metrics:", isomorphic_metrics(cycle_graph(3), complete_graph(3)))

# %%
# The reduced form collapses each clique to one weighted vertex and keeps
# only cover relations.  Sinks sit on level 1.
r = reduced_form(TRI)
for b, members in enumerate(r.blocks):
    print(f"block {b}: vertices {members}, size {r.L[b]}, level {r.level[b]}")
print("Hasse edges:", r.hasse.edges)
