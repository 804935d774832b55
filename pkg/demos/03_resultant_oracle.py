"""
Checking closed forms against the resultant
===========================================

For small hypergraphs the characteristic polynomial at a rational point can
be computed directly as a Macaulay resultant.
"""

# %%
from fractions import Fraction

from hypercharpoly import (
    charpoly_path,
    charpoly_single_edge,
    charpoly_starlike,
    make_hyperpath,
    make_single_edge,
    make_starlike,
    verify_formula,
)
from hypercharpoly.oracle import build_macaulay, macaulay_resultant
from hypercharpoly.hypergraph import eigen_system

sys3 = eigen_system(make_single_edge(3))
for p in sys3:
    print(p)

# %%
inst = build_macaulay(list(sys3.at(2).polys))
print("matrix size", inst.size, "minor size", len(inst.minor_indices()))
print(macaulay_resultant(list(sys3.at(2).polys)), charpoly_single_edge(3).eval(2))

# %%
print(verify_formula(make_hyperpath(2, 3), charpoly_path(2, 3), [2, Fraction(5, 2)]))
print(verify_formula(make_starlike(3, [1, 1]), charpoly_starlike(3, [1, 1]), [3]))

# %%
# Three arms of lengths 1, 1, 2.  The degree law pins the degree at 2304.
F = charpoly_starlike(3, [1, 1, 2])
print(F)
print(F.degree())
