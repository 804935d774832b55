from fractions import Fraction

import pytest

from hypercharpoly.hypergraph import (
    LamPoly,
    UniformHypergraph,
    cored_vertices,
    delete_vertex,
    eigen_system,
    is_cut_vertex,
    make_hyperpath,
    make_hyperstar,
    make_single_edge,
    make_starlike,
    poisson_split,
)


def test_hyperpath_layout():
    H = make_hyperpath(3, 3)
    assert H.num_vertices == 7
    assert H.edges == (frozenset({0, 1, 2}), frozenset({2, 3, 4}), frozenset({4, 5, 6}))
    assert [H.degree(v) for v in H.vertices] == [1, 1, 2, 1, 2, 1, 1]
    assert H.is_connected()


def test_starlike_layout_and_star():
    H = make_starlike(3, [2, 1])
    assert H.edges == (frozenset({0, 1, 2}), frozenset({2, 3, 4}), frozenset({0, 5, 6}))
    S = make_hyperstar(3, 4)
    assert S.num_vertices == 10 and S.degree(0) == 3
    assert make_starlike(4, [1, 1, 1]) == S


@pytest.mark.parametrize("bad", [
    lambda: UniformHypergraph(3, 3, ({0, 1},)),
    lambda: UniformHypergraph(3, 3, ({0, 1, 5},)),
    lambda: UniformHypergraph(3, 3, ({0, 1, 2}, {2, 1, 0})),
    lambda: UniformHypergraph(1, 3, ()),
    lambda: make_hyperpath(0, 3),
    lambda: make_starlike(3, []),
    lambda: make_starlike(3, [1, 0]),
])
def test_invalid_hypergraphs(bad):
    with pytest.raises(ValueError):
        bad()


def test_cored_and_cut_vertices():
    H = make_hyperpath(2, 3)
    assert cored_vertices(H) == {0, 1, 3, 4}
    assert is_cut_vertex(H, 2)
    assert not is_cut_vertex(H, 1)
    assert is_cut_vertex(make_hyperstar(3, 3), 0)
    disconnected = UniformHypergraph(3, 6, ({0, 1, 2}, {3, 4, 5}))
    with pytest.raises(ValueError):
        is_cut_vertex(disconnected, 0)


def test_delete_vertex_drops_incident_edges():
    H, mapping = delete_vertex(make_hyperpath(2, 3), 2)
    assert H.num_vertices == 4 and H.edges == ()
    H, mapping = delete_vertex(make_hyperpath(2, 3), 0)
    assert H.edges == (frozenset({1, 2, 3}),)
    assert mapping[4] == 3


def test_relabel():
    H = make_single_edge(3).relabel({0: 2, 1: 0, 2: 1})
    assert H.edges == (frozenset({0, 1, 2}),)


def test_eigen_system_of_single_edge():
    sys_ = eigen_system(make_single_edge(3))
    F0 = sys_.poly(0)
    assert F0.coefficient((2, 0, 0)) == (0, 1)
    assert F0.coefficient((0, 1, 1)) == (-1, 0)
    assert F0.is_homogeneous() and F0.total_degree == 2
    assert F0.to_string() == "λx0^2 - x1x2"
    at2 = sys_.at(2)
    assert not at2.poly(0).is_symbolic()
    # (1,1,1) is an eigenvector for lambda = 1
    assert all(p.evaluate((1, 1, 1), lam=1) == 0 for p in sys_)


def test_eigen_system_on_path_sums_over_edges():
    H = make_hyperpath(2, 3)
    F2 = eigen_system(H, Fraction(3)).poly(2)
    assert F2.const == {(0, 0, 2, 0, 0): 3, (1, 1, 0, 0, 0): -1, (0, 0, 0, 1, 1): -1}


def test_set_variable():
    p = LamPoly(2, {(1, 1): 2, (0, 2): 1}, {(2, 0): 1})
    assert p.set_variable(0, 0) == LamPoly(1, {(2,): 1})
    assert p.set_variable(0, 1) == LamPoly(1, {(1,): 2, (2,): 1}, {(0,): 1})
    with pytest.raises(ValueError):
        p.set_variable(0, 2)


def test_poisson_split_at_cut_vertex():
    H = make_hyperpath(2, 3)
    ps = poisson_split(H, 2)
    assert ps.variables == (0, 1, 3, 4)
    # on x_2 = 0 the two sides of the path decouple
    assert ps.Fbar[0] == LamPoly(4, {}, {(2, 0, 0, 0): 1})
    assert ps.Fbar[1] == LamPoly(4, {}, {(0, 2, 0, 0): 1})
    assert ps.f[0] == LamPoly(4, {(0, 1, 0, 0): -1}, {(2, 0, 0, 0): 1})
    assert ps.f_w.total_degree == 2
