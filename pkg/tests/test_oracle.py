import random
from fractions import Fraction

import pytest
import sympy as sp

from hypercharpoly.charpoly import charpoly_path, charpoly_single_edge, charpoly_star, charpoly_starlike
from hypercharpoly.hypergraph import (
    LamPoly,
    UniformHypergraph,
    eigen_system,
    make_hyperpath,
    make_hyperstar,
    make_single_edge,
    make_starlike,
)
from hypercharpoly.oracle import (
    DegenerateMinor,
    OracleTooLarge,
    bareiss_det,
    build_macaulay,
    charpoly_eval_oracle,
    macaulay_matrix_size,
    macaulay_resultant,
    monomials_of_degree,
    verify_formula,
)
from hypercharpoly.polyalg import T


def power(n, i, d, c=1):
    return LamPoly(n, {tuple(d if j == i else 0 for j in range(n)): c})


@pytest.mark.parametrize("seed", range(8))
def test_bareiss_matches_sympy(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 7)
    M = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
    if seed == 0:
        M = [[0, 1], [1, 0]]
    assert bareiss_det(M) == sp.Matrix(M).det()


def test_bareiss_singular_and_empty():
    assert bareiss_det([[1, 2], [2, 4]]) == 0
    assert bareiss_det([]) == 1


def test_monomials():
    ms = monomials_of_degree(3, 2)
    assert len(ms) == 6 and ms[0] == (2, 0, 0) and ms[-1] == (0, 0, 2)


@pytest.mark.parametrize("degrees", [(1, 1), (2, 2), (2, 3), (2, 2, 2), (3, 1, 2)])
def test_normalisation(degrees):
    n = len(degrees)
    assert macaulay_resultant([power(n, i, d) for i, d in enumerate(degrees)]) == 1


def test_linear_forms_give_determinant():
    rng = random.Random(3)
    A = [[rng.randint(-5, 5) for _ in range(3)] for _ in range(3)]
    polys = [LamPoly(3, {tuple(1 if j == c else 0 for j in range(3)): A[r][c] for c in range(3)}) for r in range(3)]
    assert macaulay_resultant(polys) == sp.Matrix(A).det()


def test_binary_forms_match_sylvester():
    # a x^2 + b xy + c y^2 and d x + e y
    x, y = sp.symbols("x y")
    p = LamPoly(2, {(2, 0): 2, (1, 1): -3, (0, 2): 5})
    q = LamPoly(2, {(1, 0): 7, (0, 1): 1})
    ref = sp.resultant(2 * x**2 - 3 * x + 5, 7 * x + 1, x)
    assert macaulay_resultant([p, q]) == ref


def _pad(p: LamPoly, offset: int, total: int) -> LamPoly:
    def shift(terms):
        return {(0,) * offset + m + (0,) * (total - offset - len(m)): c for m, c in terms.items()}

    return LamPoly(total, shift(p.const), shift(p.lam))


def test_block_multiplicativity():
    # a 3-edge (three quadrics) next to a 2-edge (two linear forms), disjoint variables
    A = list(eigen_system(make_single_edge(3), 3).polys)
    B = list(eigen_system(make_single_edge(2), 3).polys)
    joint = [_pad(p, 0, 5) for p in A] + [_pad(p, 3, 5) for p in B]
    ra, rb = macaulay_resultant(A), macaulay_resultant(B)
    # exponent of each block is the product of the other block's degrees
    assert macaulay_resultant(joint) == ra ** (1 * 1) * rb ** (2 * 2 * 2)


@pytest.mark.parametrize("seed", range(3))
def test_scaling(seed):
    rng = random.Random(seed)
    lam = Fraction(rng.randint(2, 6))
    polys = list(eigen_system(make_single_edge(3), lam).polys)
    i = rng.randrange(3)
    c = Fraction(rng.randint(2, 9), rng.randint(1, 5))
    scaled = list(polys)
    scaled[i] = LamPoly(3, {m: v * c for m, v in polys[i].const.items()})
    # degree of Res in the coefficients of F_i is the product of the other degrees
    assert macaulay_resultant(scaled) == c ** 4 * macaulay_resultant(polys)


def test_row_scaling_with_rational_lambda():
    assert charpoly_eval_oracle(make_single_edge(3), Fraction(5, 2)) == charpoly_single_edge(3).eval(Fraction(5, 2))


def test_spec_values():
    assert charpoly_eval_oracle(make_single_edge(3), 2) == 2744
    assert charpoly_eval_oracle(make_hyperpath(2, 3), 3) == 3**35 * 26**6 * 25**9


@pytest.mark.parametrize("H,F", [
    (make_single_edge(4), charpoly_single_edge(4)),
    (make_hyperstar(2, 3), charpoly_star(2, 3)),
    (make_starlike(3, [1, 1]), charpoly_starlike(3, [1, 1])),
    (make_hyperpath(2, 2), charpoly_path(2, 2)),
    (make_hyperpath(4, 2), charpoly_path(4, 2)),
])
def test_formula_agrees_with_oracle(H, F):
    rep = verify_formula(H, F, [2, Fraction(-1, 3), 7])
    assert rep.ok, str(rep)


def test_mismatch_is_reported():
    rep = verify_formula(make_single_edge(3), charpoly_single_edge(3).mul_factor(T - 1), [2])
    assert not rep.ok
    assert "MISMATCH" in str(rep)


def test_degenerate_minor_at_zero():
    with pytest.raises(DegenerateMinor):
        charpoly_eval_oracle(make_single_edge(3), 0)
    rep = verify_formula(make_single_edge(3), charpoly_single_edge(3), [0])
    assert not rep.ok and rep.rows[0].oracle is None


def test_size_guard():
    assert macaulay_matrix_size(5, [2] * 5) == 210
    assert macaulay_matrix_size(4, [3] * 4) == 220
    with pytest.raises(OracleTooLarge):
        charpoly_eval_oracle(make_hyperpath(3, 3), 2)


def test_input_validation():
    with pytest.raises(ValueError):
        build_macaulay([LamPoly(2, {(1, 0): 1, (0, 2): 1}), power(2, 1, 1)])
    with pytest.raises(ValueError):
        build_macaulay(list(eigen_system(make_single_edge(3)).polys))
    with pytest.raises(ValueError):
        build_macaulay([power(3, 0, 1)])


def test_split_fallback(monkeypatch):
    import hypercharpoly.oracle as oracle

    A = list(eigen_system(make_single_edge(3), 3).polys)
    B = list(eigen_system(make_single_edge(2), 3).polys)
    joint = [_pad(p, 0, 5) for p in A] + [_pad(p, 3, 5) for p in B]
    expected = macaulay_resultant(joint)
    real = oracle._resultant_fixed_order

    def refuse_big(polys):
        if len(polys) > 3:
            raise DegenerateMinor("forced")
        return real(polys)

    monkeypatch.setattr(oracle, "_resultant_fixed_order", refuse_big)
    assert macaulay_resultant(joint) == expected
    with pytest.raises(DegenerateMinor):
        macaulay_resultant(list(eigen_system(make_hyperpath(3, 2), 3).polys))
