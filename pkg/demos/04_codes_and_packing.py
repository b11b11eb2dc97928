"""
Codes, decomposition and packing radius
=======================================

Minimum distance alone does not decide the packing radius.  On a
hierarchical poset every code is isometric to a level-by-level direct sum,
and the packing radius can be read off the lowest nonzero level.
"""
import numpy as np

from graphmetric.codes import (
    canonical_decomposition,
    min_distance,
    packing_radius_bruteforce,
    packing_radius_formula,
)
from graphmetric.errors import NotHierarchical
from graphmetric.families import PRX3, hierarchical_graph
from graphmetric.linalg import apply, format_code, rref

# %%
# Two codes at distance 2 with different packing radii.
c1, c2 = rref(2, [(1, 1, 0)]), rref(2, [(0, 0, 1)])
for name, c in (("C1", c1), ("C2", c2)):
    print(name, "d =", min_distance(PRX3, c), "R =", packing_radius_bruteforce(PRX3, c))

# %%
# A three-level hierarchy: two sinks, a 2-clique above them, one top vertex.
rng = np.random.default_rng(7)
g = hierarchical_graph([[1, 1], [2], [1]], rng)
c = rref(2, rng.integers(0, 2, size=(2, g.n)).tolist(), g.n)
d = canonical_decomposition(g, c)
print(format_code(c), end="")
for level, comp in enumerate(d.components, start=1):
    print(f"level {level}: dimension {comp.k}")
print("image rows:", [apply(d.isometry, x) for x in c.basis])
print("R formula =", packing_radius_formula(g, c), " R brute =", packing_radius_bruteforce(g, c))

# %%
# Without a hierarchy the decomposition can fail; the error carries a code
# that no isometry splits.
try:
    canonical_decomposition(PRX3, c1)
except NotHierarchical as exc:
    print("not hierarchical:", exc)
    print(format_code(exc.witness), end="")
