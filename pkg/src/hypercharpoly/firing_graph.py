"""Firing graphs of hyperpaths and checks of their structure.

``build_firing_graph`` follows the level-by-level construction: fire the bank
once along its edge, then repeatedly expand every newly created non-stable
configuration by firing its largest overfull vertex along each edge that
contains it, until a level consists of stable configurations only.
"""
from __future__ import annotations

import random
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx

from .chipfiring import (
    OMITTED,
    Configuration,
    classify_stable,
    fire_hyper,
    is_stable_hyper,
)
from .hypergraph import UniformHypergraph, make_hyperpath


@dataclass(frozen=True)
class Arrow:
    source: Configuration
    target: Configuration
    vertex: int
    edge: int  # 0-based index into H.edges

    def label(self) -> str:
        return f"({self.vertex}, e{self.edge + 1})"


@dataclass(frozen=True)
class FiringGraph:
    hypergraph: UniformHypergraph
    root: Configuration
    nodes: tuple            # discovery order, root first
    arrows: tuple
    stratum: int
    gprime: frozenset       # nodes first reached through the G' entry arrow
    fired: dict = field(compare=False)  # expanded node -> fired vertex u_c
    parent: dict = field(compare=False)  # node -> arrow of first arrival

    @property
    def n(self) -> int:
        return len(self.hypergraph.edges)

    @property
    def k(self) -> int:
        return self.hypergraph.k

    def successors(self, c: Configuration) -> list[Arrow]:
        return [a for a in self.arrows if a.source == c]

    def to_networkx(self) -> nx.MultiDiGraph:
        G = nx.MultiDiGraph()
        for c in self.nodes:
            G.add_node(c)
        for a in self.arrows:
            G.add_edge(a.source, a.target, vertex=a.vertex, edge=a.edge)
        return G


def _normalize(H: UniformHypergraph, c0) -> Configuration:
    if isinstance(c0, Configuration):
        if c0.bank != 0 or len(c0) != H.num_vertices:
            raise ValueError("root must live on the hyperpath with bank vertex 0")
        return Configuration((OMITTED,) + c0.nonbank, 0)
    vals = tuple(c0)
    if len(vals) != H.num_vertices - 1:
        raise ValueError(f"expected {H.num_vertices - 1} non-bank values, got {len(vals)}")
    return Configuration.from_nonbank(vals)


def build_firing_graph(H: UniformHypergraph, c0) -> FiringGraph:
    """Firing graph of the hyperpath ``H`` rooted at the stable ``c0``.

    ``c0`` is a :class:`Configuration` with bank 0 or the tuple of its
    non-bank values; the bank entry is always stored as omitted.
    """
    n, k = len(H.edges), H.k
    if n == 0 or H != make_hyperpath(n, k):
        raise ValueError("firing graphs are built on hyperpaths labelled left to right")
    root = _normalize(H, c0)
    if not is_stable_hyper(H, root):
        raise ValueError(f"root {root} is not stable")
    s = classify_stable(H, root)
    entry = (s * (k - 1), s)  # fire vertex s(k-1) on e_{s+1}

    order = [root]
    seen = {root}
    arrows = []
    gprime = set()
    fired = {}
    parent = {}

    bar = fire_hyper(H, root, 0, 0)
    arrows.append(Arrow(root, bar, 0, 0))
    order.append(bar)
    seen.add(bar)
    parent[bar] = arrows[-1]
    if (0, 0) == entry:
        gprime.add(bar)
    frontier = [bar]

    while any(not is_stable_hyper(H, c) for c in frontier):
        new = []
        for c in frontier:
            if is_stable_hyper(H, c):
                continue
            u = max(v for v in range(1, H.num_vertices) if c[v] >= k - 1)
            fired[c] = u
            for ei, e in enumerate(H.edges):
                if u not in e:
                    continue
                nxt = fire_hyper(H, c, u, ei)
                arrow = Arrow(c, nxt, u, ei)
                arrows.append(arrow)
                if nxt not in seen:
                    seen.add(nxt)
                    order.append(nxt)
                    parent[nxt] = arrow
                    if c in gprime or (u, ei) == entry:
                        gprime.add(nxt)
                    new.append(nxt)
        frontier = new

    return FiringGraph(H, root, tuple(order), tuple(arrows), s, frozenset(gprime), fired, parent)


def anti_lex_less(c, c2, order: Sequence[int] | None = None) -> bool:
    """Left anti-lexicographic order: lighter first; on equal weight the one
    that is larger at the first differing vertex comes first.

    ``c`` and ``c2`` are Configurations (bank ignored) or plain sequences of
    the non-bank values; ``order`` lists the positions to compare.
    """
    a = c.nonbank if isinstance(c, Configuration) else tuple(c)
    b = c2.nonbank if isinstance(c2, Configuration) else tuple(c2)
    if len(a) != len(b):
        raise ValueError("configurations on different vertex sets")
    idx = range(len(a)) if order is None else order
    wa, wb = sum(a), sum(b)
    if wa != wb:
        return wa < wb
    for i in idx:
        if a[i] != b[i]:
            return a[i] > b[i]
    return False


@dataclass
class Report:
    """Outcome of a structural check; ``violations`` holds readable witnesses."""

    name: str
    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, msg: str) -> None:
        self.violations.append(msg)

    def __str__(self):
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        lines = [f"{self.name}: {status}"]
        lines += [f"  - {v}" for v in self.violations[:20]]
        return "\n".join(lines)


def cycle_part_cycles(FG: FiringGraph) -> list[list[Configuration]]:
    """Simple directed cycles among the nodes outside G'."""
    G = nx.DiGraph()
    for a in FG.arrows:
        if a.source not in FG.gprime and a.target not in FG.gprime:
            G.add_edge(a.source, a.target)
    return [list(cyc) for cyc in nx.simple_cycles(G)]


def validate_structure(FG: FiringGraph, s: int | None = None) -> Report:
    """Check the cycle-chain-then-G' shape of a hyperpath firing graph."""
    if s is None:
        s = FG.stratum
    rep = Report(f"structure of G({FG.root}) with s={s}")
    n, k = FG.n, FG.k
    if s != FG.stratum:
        rep.fail(f"given stratum {s} differs from the root's stratum {FG.stratum}")

    cycles = cycle_part_cycles(FG)
    rep.details["cycles"] = len(cycles)
    rep.details["cycle_lengths"] = sorted(len(c) for c in cycles)
    rep.details["gprime_size"] = len(FG.gprime)
    if len(cycles) != s:
        rep.fail(f"found {len(cycles)} cycles outside G', expected {s}")
    for cyc in cycles:
        if len(cyc) != k:
            rep.fail(f"cycle of length {len(cyc)} != {k}: " + " -> ".join(map(str, cyc)))

    if bool(FG.gprime) != (s < n):
        rep.fail(f"G' has {len(FG.gprime)} nodes but s={s}, n={n}")

    for a in FG.arrows:
        if a.source in FG.gprime and a.target not in FG.gprime:
            rep.fail(f"arrow {a.label()} leaves G': {a.source} -> {a.target}")

    for c in FG.nodes:
        if c in FG.gprime and not anti_lex_less(FG.root, c):
            kind = "stable" if is_stable_hyper(FG.hypergraph, c) else "non-stable"
            rep.fail(f"root {FG.root} does not precede {kind} G' node {c}")
    return rep


def _check_out_arrows(FG: FiringGraph, rep: Report) -> None:
    H = FG.hypergraph
    out = Counter(a.source for a in FG.arrows)
    for c in FG.nodes:
        if c == FG.root:
            if out[c] != 1:
                rep.fail(f"root has {out[c]} out-arrows, expected the single bank arrow")
        elif is_stable_hyper(H, c):
            if out[c]:
                rep.fail(f"stable node {c} has {out[c]} out-arrows")
        else:
            u = FG.fired.get(c)
            if u is None or out[c] != H.degree(u):
                rep.fail(f"non-stable node {c} has {out[c]} out-arrows")


def check_firing_invariants(FG: FiringGraph, samples: int = 200, seed: int = 0) -> Report:
    """Joint-vertex firing rule, weight bound and the equality case of the
    weight bound, the last one along tree paths and random simple paths."""
    H, k, n = FG.hypergraph, FG.k, FG.n
    rep = Report(f"firing invariants of G({FG.root})")
    w0 = FG.root.weight
    _check_out_arrows(FG, rep)

    joints = [t * (k - 1) for t in range(1, n + 1)]
    for c, u in FG.fired.items():
        for j in joints:
            if (u == j) != (c[j] == k - 1):
                rep.fail(f"at {c}: fired {u}, joint {j} holds {c[j]}")

    for c in FG.nodes:
        if c.weight < w0:
            rep.fail(f"node {c} has weight {c.weight} < {w0}")
        if c.weight > w0 + k - 1:
            rep.fail(f"node {c} has weight {c.weight} > {w0 + k - 1}")

    first_edge = set(range(1, k))

    def check_path(path_arrows):
        fired_e1 = Counter()
        for a in path_arrows:
            if a.edge == 0 and a.vertex != 0:
                fired_e1[a.vertex] += 1
            c = a.target
            once = set(fired_e1) == first_edge and all(v == 1 for v in fired_e1.values())
            if (c.weight == w0) != once:
                rep.fail(
                    f"node {c} (weight {c.weight}) reached with e1-firings {dict(fired_e1)}"
                )
                return

    # tree paths
    for c in FG.nodes[1:]:
        path = []
        cur = c
        while cur != FG.root:
            a = FG.parent[cur]
            path.append(a)
            cur = a.source
        check_path(reversed(path))

    # random simple paths
    succ: dict = {}
    for a in FG.arrows:
        succ.setdefault(a.source, []).append(a)
    rng = random.Random(seed)
    for _ in range(samples):
        visited = {FG.root}
        cur = FG.root
        path = []
        while succ.get(cur):
            a = rng.choice(succ[cur])
            if a.target in visited:
                break
            path.append(a)
            visited.add(a.target)
            cur = a.target
        check_path(path)
    return rep


def _dot_quote(s: str) -> str:
    return '"' + s.replace('"', r"\"") + '"'


def to_dot(FG: FiringGraph) -> str:
    """DOT text; node label is the configuration tuple, arrow label (vertex, edge)."""
    ids = {c: f"c{i}" for i, c in enumerate(FG.nodes)}
    lines = ["digraph firing_graph {", "  rankdir=LR;"]
    for c in FG.nodes:
        attrs = [f"label={_dot_quote(str(c))}"]
        if c == FG.root:
            attrs.append("shape=doublecircle")
        elif c in FG.fired:
            attrs.append("shape=circle")
        else:
            attrs.append("shape=box")
        if c in FG.gprime:
            attrs.append("style=dashed")
        lines.append(f"  {ids[c]} [{', '.join(attrs)}];")
    for a in FG.arrows:
        lines.append(f"  {ids[a.source]} -> {ids[a.target]} [label={_dot_quote(a.label())}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
