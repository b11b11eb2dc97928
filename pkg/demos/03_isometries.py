"""
The isometry group
==================

Linear isometries split into a graph automorphism followed by a map that
only mixes each coordinate with the coordinates it dominates.
"""
from graphmetric.families import complete_graph, CHAIN2, TRI
from graphmetric.isometry import (
    aut_expanded,
    decompose_isometry,
    group_order,
    n_order,
    n_plus_order,
    product_order,
)
from graphmetric.linalg import LinearMap, format_map
from graphmetric.oracle import naive_isometry_count

# %%
# On 0 -> 1 the map e_0 -> e_0 + e_1 keeps every weight.
t = LinearMap(2, ((1, 1), (0, 1)))
d = decompose_isometry(CHAIN2, t)
print("phi =", d.phi)
print(format_map(d.nmap), end="")

# %%
# Counting: brute force over all matrices against the product formula.
for name, g in [("chain", CHAIN2), ("TRI", TRI), ("K2", complete_graph(2)), ("K3", complete_graph(3))]:
    for q in (2, 3):
        if q ** (g.n * g.n) > 1 << 22:
            continue
        print(f"{name:5s} q={q}: |Aut|={len(aut_expanded(g))} |N|={n_order(g, q)} |N+|={n_plus_order(g, q)}"
              f"  brute={naive_isometry_count(g, q)}  formula={group_order(g, q)}"
              f"  |Aut|*|N|={product_order(g, q)}")

# %%
# The last column drifts once a clique has two vertices and q > 2, or three
# vertices at q = 2: maps with a nonzero diagonal do not form a group.
