import sympy as sp

from hypercharpoly import UniformHypergraph

LAM = sp.Symbol("lam")


def graph_charpoly(H: UniformHypergraph) -> list[int]:
    """det(lam*I - A) of a 2-uniform hypergraph, coefficients low -> high."""
    r = H.num_vertices
    A = sp.zeros(r)
    for e in H.edges:
        u, v = sorted(e)
        A[u, v] = A[v, u] = 1
    return [int(c) for c in reversed(sp.Poly((LAM * sp.eye(r) - A).det(), LAM).all_coeffs())]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
