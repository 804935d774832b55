"""
Characteristic polynomials of hyperpaths
========================================

Closed forms are kept in the variable t = lambda**k, so every factor prints
as a polynomial in lambda**k.
"""

# %%
from hypercharpoly import charpoly_path, charpoly_star, expected_degree, format_factored

for n in range(1, 5):
    F = charpoly_path(n, 3)
    print(f"P_{n}^3:", F)

# %%
# The degree always equals r (k-1)^(r-1), r being the number of vertices.
for n, k in [(2, 4), (3, 4), (5, 5)]:
    F = charpoly_path(n, k)
    r = n * (k - 1) + 1
    print(f"P_{n}^{k}: degree {F.degree()} vs {expected_degree(r, k)}")

# %%
# The factored form is exact, so evaluation at a rational point is too.
from fractions import Fraction

F = charpoly_path(2, 3)
print(F.eval(3) == 3**35 * 26**6 * 25**9)
print(F.eval(Fraction(1, 2)))

# %%
# LaTeX for a write-up
print(format_factored(charpoly_star(3, 3), "latex"))

# %%
# Roots in t of the 3-uniform hyperpaths are squares of eigenvalues of
# ordinary paths.
import numpy as np
from hypercharpoly.charpoly import path_graph_eigenvalues, power_hypergraph_root_check

rep = power_hypergraph_root_check(charpoly_path(4, 3), 4)
print("all matched:", rep.ok)
for p, tau, j, mu_ in rep.matched[:6]:
    print(f"  root {tau.real:.6f} of ({p}) = ({mu_:.6f})^2, path on {j} vertices")
print(np.round(path_graph_eigenvalues(5) ** 2, 6))
