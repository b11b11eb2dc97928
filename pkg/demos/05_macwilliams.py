"""
When does the MacWilliams identity hold?
========================================

The enumerator of C under G should determine the enumerator of the dual
under the reverse graph.  For hierarchical posets this happens exactly when
equal block-size sums on a level come from equal multisets.
"""
from graphmetric.canonical import reduced_form
from graphmetric.families import PAIR4, SIX
from graphmetric.graph import reverse
from graphmetric.linalg import dual_code, rref
from graphmetric.macwilliams import (
    dual_enumerator_1level,
    extension_check,
    extension_predicted,
    identity_check,
    identity_predicted,
    omega_check,
    udp_check,
    weight_enumerator,
)

# %%
# Two vertices plus a 2-clique: block sizes 1, 1, 2 on one level.
c1, c2 = rref(2, [(1, 1, 0, 0)]), rref(2, [(0, 0, 1, 1)])
for name, c in (("C1", c1), ("C2", c2)):
    print(name, weight_enumerator(PAIR4, c), " dual:", weight_enumerator(reverse(PAIR4), dual_code(c)))
print("UDP:", udp_check(reduced_form(PAIR4)), " predicted:", identity_predicted(PAIR4))
print("exhaustive scan finds:", identity_check(PAIR4).witness)

# %%
# Three 2-cliques satisfy the UDP, so the dual enumerator follows from the
# primal one by the single-level transform.
c = rref(2, [(1, 1, 0, 0, 0, 0), (0, 0, 1, 0, 1, 0)])
w = weight_enumerator(SIX, c)
print("W =", w, " transformed:", dual_enumerator_1level(SIX, w))
print("direct:", weight_enumerator(reverse(SIX), dual_code(c)))

# %%
# But the same graph breaks the extension property: three blocks of size 2
# on one level violate condition Omega.
print("Omega:", omega_check(reduced_form(SIX)), " predicted extension:", extension_predicted(SIX))
res = extension_check(SIX)
print("weight-preserving map that does not extend:")
for a, b in zip(res.witness.basis, res.witness.images):
    print("  ", "".join(map(str, a)), "->", "".join(map(str, b)))
