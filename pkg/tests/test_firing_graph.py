import dataclasses

import pytest

from hypercharpoly.chipfiring import Configuration, classify_stable, is_stable_hyper, stable_configs_path
from hypercharpoly.firing_graph import (
    anti_lex_less,
    build_firing_graph,
    check_firing_invariants,
    cycle_part_cycles,
    to_dot,
    validate_structure,
)
from hypercharpoly.hypergraph import make_hyperpath, make_hyperstar

FIXTURE = (1, 1, 1, 1, 0, 0)


@pytest.fixture(scope="module")
def fig():
    return build_firing_graph(make_hyperpath(3, 3), FIXTURE)


def test_fixture_shape(fig):
    assert len(fig.nodes) == 13
    assert fig.stratum == 2
    assert fig.nodes[1].nonbank == (2, 2, 1, 1, 0, 0)
    cycles = cycle_part_cycles(fig)
    assert sorted(map(len, cycles)) == [3, 3]
    assert fig.gprime
    stable = [c for c in fig.gprime if is_stable_hyper(fig.hypergraph, c)]
    assert stable and all(anti_lex_less(fig.root, c) for c in stable)


def test_fixture_passes_checks(fig):
    assert validate_structure(fig).ok
    assert check_firing_invariants(fig).ok


def test_wrong_stratum_is_reported(fig):
    rep = validate_structure(fig, s=1)
    assert not rep.ok
    assert any("cycles" in v for v in rep.violations)


def test_tampered_graph_is_reported(fig):
    # drop G' membership: cycle count changes and the stratum no longer fits
    bad = dataclasses.replace(fig, gprime=frozenset())
    assert not validate_structure(bad).ok


@pytest.mark.parametrize("n,k", [(1, 3), (2, 3), (3, 3), (1, 4), (2, 4)])
def test_every_root_satisfies_the_structure(n, k):
    H = make_hyperpath(n, k)
    for c in stable_configs_path(n, k):
        FG = build_firing_graph(H, c)
        assert FG.stratum == classify_stable(H, c)
        rep = validate_structure(FG)
        assert rep.ok, str(rep)
        inv = check_firing_invariants(FG, samples=50)
        assert inv.ok, str(inv)


def test_root_only_has_bank_arrow(fig):
    out = fig.successors(fig.root)
    assert len(out) == 1 and out[0].vertex == 0 and out[0].edge == 0
    assert out[0].label() == "(0, e1)"


def test_anti_lex_order():
    assert anti_lex_less((0, 0), (0, 1))          # lighter first
    assert anti_lex_less((1, 0), (0, 1))          # equal weight: larger at first difference
    assert not anti_lex_less((0, 1), (1, 0))
    assert not anti_lex_less((1, 1), (1, 1))
    assert anti_lex_less((0, 1), (1, 0), order=[1, 0])
    with pytest.raises(ValueError):
        anti_lex_less((1,), (1, 2))


def test_builder_rejects_bad_input():
    H = make_hyperpath(2, 3)
    with pytest.raises(ValueError):
        build_firing_graph(H, (2, 0, 0, 0))
    with pytest.raises(ValueError):
        build_firing_graph(H, (0, 0, 0))
    with pytest.raises(ValueError):
        build_firing_graph(make_hyperstar(2, 3), (0, 0, 0, 0))
    FG = build_firing_graph(H, Configuration.from_nonbank((0, 0, 0, 0)))
    assert FG.root.nonbank == (0, 0, 0, 0)


def test_dot_export(fig):
    dot = to_dot(fig)
    assert dot.startswith("digraph firing_graph {")
    assert dot.count("->") == len(fig.arrows)
    assert 'label="(•,1,1,1,1,0,0)", shape=doublecircle' in dot
    assert 'label="(0, e1)"' in dot


def test_networkx_view(fig):
    G = fig.to_networkx()
    assert G.number_of_nodes() == 13
    assert G.number_of_edges() == len(fig.arrows)
