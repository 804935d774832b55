"""
The dollar game behind the exponents
====================================

Stratum sizes of stable configurations on a hyperpath are the exponents of
the factors in its characteristic polynomial.
"""

# %%
from hypercharpoly.chipfiring import count_strata, critical_configs_Kk
from hypercharpoly.charpoly import mu_vector

for k in range(2, 7):
    print(f"K_{k}: {len(critical_configs_Kk(k))} critical configurations")

print(sorted(str(c) for c in critical_configs_Kk(3)))

# %%
for n, k in [(1, 3), (2, 3), (3, 3), (2, 4)]:
    print((n, k), count_strata(n, k), mu_vector(n, k))

# %%
# A firing graph: two cycles, then the part that never comes back.
from hypercharpoly import build_firing_graph, make_hyperpath, to_dot, validate_structure
from hypercharpoly.firing_graph import cycle_part_cycles

H = make_hyperpath(3, 3)
FG = build_firing_graph(H, (1, 1, 1, 1, 0, 0))
print("stratum", FG.stratum, "nodes", len(FG.nodes))
for cyc in cycle_part_cycles(FG):
    print("  cycle:", " -> ".join(map(str, cyc)))
print(validate_structure(FG))

# %%
dot = to_dot(FG)
print(dot.splitlines()[2])
# open("firing_graph.dot", "w").write(dot)   # then: dot -Tpng firing_graph.dot
