from fractions import Fraction

import pytest
import sympy as sp

from conftest import graph_charpoly
from hypercharpoly.charpoly import (
    charpoly_path,
    charpoly_single_edge,
    charpoly_star,
    charpoly_starlike,
    denominator_sequence,
    expected_degree,
    g_power,
    h_iterate,
    mu,
    mu_vector,
    power_hypergraph_root_check,
    star_pair_lambda_exponent,
    stratum_multisets,
)
from hypercharpoly.hypergraph import make_hyperpath, make_hyperstar, make_starlike
from hypercharpoly.polyalg import T, TRat

t = sp.Symbol("t")


def sympy_h(s):
    """h_s computed with sympy from x -> 1/(1 - x/t), independently of TRat."""
    if s == 0:
        return sp.Integer(0)
    x = sp.Integer(1)
    for _ in range(s - 1):
        x = sp.cancel(1 / (1 - x / t))
    return x


def as_sympy(r: TRat):
    num = sum(c * t**i for i, c in enumerate(r.num.coeffs))
    den = sum(c * t**i for i, c in enumerate(r.den.coeffs))
    return num / den


@pytest.mark.parametrize("s", range(0, 8))
def test_h_iterates_match_sympy(s):
    assert sp.cancel(as_sympy(h_iterate(s)) - sympy_h(s)) == 0


def test_small_iterates():
    assert h_iterate(2) == TRat(T, T - 1)
    assert h_iterate(3) == TRat(T - 1, T - 2)
    assert h_iterate(4) == TRat(T**2 - 2 * T, T**2 - 3 * T + 1)


def test_literal_composition():
    assert g_power(-1, 5) == TRat(0)
    assert g_power(0, TRat(T)) == TRat(1)
    for s in range(2, 6):
        assert g_power(s - 1, 1) == h_iterate(s)


def test_denominators_telescope():
    b = denominator_sequence(7)
    assert b[4] == T**2 * (T - 1) * (T - 3)
    for s in range(1, 6):
        assert TRat(T) - h_iterate(s) == TRat(b[s], b[s - 1])


@pytest.mark.parametrize("n,k", [(1, 3), (2, 3), (4, 3), (3, 4), (2, 5)])
def test_mu_partitions_all_stable_configurations(n, k):
    assert sum(mu_vector(n, k)) == (k - 1) ** (n * (k - 1))


def test_mu_values():
    assert mu_vector(2, 3) == [4, 3, 9]
    assert mu_vector(2, 4) == [297, 176, 256]
    with pytest.raises(ValueError):
        mu(2, 3, 3)


def test_stratum_multisets():
    got = stratum_multisets([1, 1], 3)
    assert got == {(0, 0): 1, (0, 1): 6, (1, 1): 9}


REFERENCE = {
    (1, 3): "λ^3 · (λ^3 - 1)^3",
    (2, 3): "λ^35 · (λ^3 - 1)^6 · (λ^3 - 2)^9",
    (3, 3): "λ^151 · (λ^3 - 1)^27 · (λ^3 - 2)^18 · (λ^6 - 3λ^3 + 1)^27",
    (4, 3): "λ^891 · (λ^3 - 1)^201 · (λ^3 - 2)^81 · (λ^3 - 3)^81 · (λ^6 - 3λ^3 + 1)^54",
    (1, 4): "λ^44 · (λ^4 - 1)^16",
    (2, 4): "λ^2671 · (λ^4 - 1)^352 · (λ^4 - 2)^256",
    (3, 4): "λ^95774 · (λ^4 - 1)^11440 · (λ^4 - 2)^5632 · (λ^8 - 3λ^4 + 1)^4096",
}


@pytest.mark.parametrize("nk", REFERENCE)
def test_reference_hyperpaths(nk):
    n, k = nk
    F = charpoly_path(n, k)
    assert str(F) == REFERENCE[nk]
    assert F.degree() == expected_degree(n * (k - 1) + 1, k)


@pytest.mark.parametrize("n", range(1, 7))
def test_graph_case_paths(n):
    assert charpoly_path(n, 2).expand() == graph_charpoly(make_hyperpath(n, 2))


@pytest.mark.parametrize("m", range(1, 6))
def test_graph_case_stars(m):
    assert charpoly_star(m, 2).expand() == graph_charpoly(make_hyperstar(m, 2))


@pytest.mark.parametrize("arms", [(2, 1), (2, 2), (3, 1, 1), (2, 3, 1)])
def test_graph_case_starlike(arms):
    assert charpoly_starlike(2, arms).expand() == graph_charpoly(make_starlike(2, arms))


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_two_edge_star_lambda_power(k):
    assert charpoly_star(2, k).lambda_exponent == star_pair_lambda_exponent(k)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_family_consistency(k):
    for m in range(1, 4):
        assert charpoly_starlike(k, [1] * m) == charpoly_star(m, k)
    for n in range(1, 4):
        assert charpoly_starlike(k, [n]) == charpoly_path(n, k)
    assert charpoly_starlike(k, [2, 1]) == charpoly_starlike(k, [1, 2])
    assert charpoly_path(1, k) == charpoly_single_edge(k)


def test_starlike_112():
    F = charpoly_starlike(3, [1, 1, 2])
    assert str(F) == (
        "λ^999 · (λ^3 - 1)^75 · (λ^3 - 2)^63 · (λ^3 - 3)^27"
        " · (λ^6 - 3λ^3 + 1)^54 · (λ^6 - 4λ^3 + 2)^81"
    )
    assert F.degree() == 2304


def test_invalid_parameters():
    for bad in (lambda: charpoly_path(0, 3), lambda: charpoly_star(0, 3),
                lambda: charpoly_starlike(3, []), lambda: charpoly_starlike(1, [1])):
        with pytest.raises(ValueError):
            bad()


@pytest.mark.parametrize("n", range(1, 5))
def test_roots_are_squared_path_eigenvalues(n):
    rep = power_hypergraph_root_check(charpoly_path(n, 3), n)
    assert rep.ok and rep.matched


def test_root_check_detects_foreign_factor():
    F = charpoly_path(2, 3).mul_factor(T - 5)
    assert not power_hypergraph_root_check(F, 2).ok


def test_eval_at_three():
    assert charpoly_path(2, 3).eval(3) == 3**35 * 26**6 * 25**9
    assert charpoly_single_edge(3).eval(Fraction(2)) == 2744
