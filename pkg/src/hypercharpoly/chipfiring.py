"""Dollar game on simple graphs, on complete graphs K_k and on k-uniform
hypergraphs.

A :class:`Configuration` stores one chip count per vertex.  The bank entry
may be :data:`OMITTED`, in which case arithmetic on it is skipped; this is
how configurations on hypergraphs are written when only the non-bank values
matter.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .hypergraph import UniformHypergraph, make_hyperpath

OMITTED = None
ENUMERATION_LIMIT = 10**7


class EnumerationTooLarge(ValueError):
    """An exhaustive enumeration would exceed :data:`ENUMERATION_LIMIT`."""


def _guard(count: int, what: str) -> None:
    if count > ENUMERATION_LIMIT:
        raise EnumerationTooLarge(f"{what}: {count} configurations exceeds the limit {ENUMERATION_LIMIT}")


@dataclass(frozen=True)
class Configuration:
    values: tuple
    bank: int = 0

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if not (0 <= self.bank < len(vals)):
            raise ValueError(f"bank {self.bank} out of range")
        for v, x in enumerate(vals):
            if v == self.bank:
                continue
            if x is OMITTED or x < 0:
                raise ValueError(f"vertex {v} has invalid chip count {x!r}")

    @classmethod
    def from_nonbank(cls, nonbank: Sequence[int], bank: int = 0) -> Configuration:
        vals = list(nonbank)
        vals.insert(bank, OMITTED)
        return cls(tuple(vals), bank)

    def __getitem__(self, v):
        return self.values[v]

    def __len__(self):
        return len(self.values)

    @property
    def nonbank(self) -> tuple:
        return self.values[: self.bank] + self.values[self.bank + 1:]

    @property
    def weight(self) -> int:
        return sum(self.nonbank)

    def __str__(self):
        return "(" + ",".join("•" if x is OMITTED else str(x) for x in self.values) + ")"


def _bump(values: list, v: int, delta: int) -> None:
    if values[v] is not OMITTED:
        values[v] += delta


# ---------------------------------------------------------------------------
# simple graphs; ``G`` is any mapping vertex -> neighbours (dict of sets,
# networkx.Graph, ...)


def complete_graph(k: int) -> dict[int, set]:
    return {v: {u for u in range(k) if u != v} for v in range(k)}


def is_stable_graph(G: Mapping, c: Configuration) -> bool:
    return all(0 <= c[v] < len(G[v]) for v in G if v != c.bank)


def fire_graph(G: Mapping, c: Configuration, v) -> Configuration:
    """Fire ``v``: it loses deg(v) chips, each neighbour gains one.

    A non-bank vertex needs at least deg(v) chips; the bank may only fire
    from a stable configuration and is allowed to go into debt.
    """
    if v == c.bank:
        if not is_stable_graph(G, c):
            raise ValueError("the bank may only fire when the configuration is stable")
    elif c[v] < len(G[v]):
        raise ValueError(f"vertex {v} holds {c[v]} < deg {len(G[v])} chips and cannot fire")
    vals = list(c.values)
    _bump(vals, v, -len(G[v]))
    for u in G[v]:
        _bump(vals, u, 1)
    return Configuration(tuple(vals), c.bank)


# ---------------------------------------------------------------------------
# complete graph K_k with bank 0; internally only the k-1 non-bank values


def _stabilize_Kk(vals: tuple, k: int) -> tuple:
    vals = list(vals)
    while True:
        hot = [i for i, x in enumerate(vals) if x >= k - 1]
        if not hot:
            return tuple(vals)
        i = hot[-1]
        vals[i] -= k - 1
        for j in range(len(vals)):
            if j != i:
                vals[j] += 1


def _bank_step_Kk(vals: tuple, k: int) -> tuple:
    return _stabilize_Kk(tuple(x + 1 for x in vals), k)


def stabilization_outcomes_Kk(vals: Sequence[int], k: int) -> set[tuple]:
    """All stable configurations reachable by maximal legal firing sequences
    from ``vals`` (non-bank values on K_k), exploring every firing order."""
    start = tuple(vals)
    seen = {start}
    stack = [start]
    outcomes = set()
    while stack:
        cur = stack.pop()
        hot = [i for i, x in enumerate(cur) if x >= k - 1]
        if not hot:
            outcomes.add(cur)
            continue
        for i in hot:
            nxt = list(cur)
            nxt[i] -= k - 1
            for j in range(len(nxt)):
                if j != i:
                    nxt[j] += 1
            nxt = tuple(nxt)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return outcomes


def stable_configs_Kk(k: int) -> Iterable[tuple]:
    return itertools.product(range(k - 1), repeat=k - 1)


def _as_Kk_values(k: int, c) -> tuple:
    if isinstance(c, Configuration):
        if c.bank != 0 or len(c) != k:
            raise ValueError(f"expected a configuration on K_{k} with bank 0")
        vals = c.nonbank
    else:
        vals = tuple(c)
    if len(vals) != k - 1:
        raise ValueError(f"expected {k - 1} non-bank values on K_{k}, got {len(vals)}")
    return vals


def is_critical_Kk(k: int, c) -> bool:
    """Whether a stable configuration on K_k (bank 0) is recurrent.

    Starting from ``c`` the only w-legal move is to fire the bank; then
    non-bank vertices fire until the configuration is stable again.  ``c``
    is recurrent when this process returns to ``c``.
    """
    if k < 2:
        raise ValueError("K_k needs k >= 2")
    vals = _as_Kk_values(k, c)
    if any(not (0 <= x < k - 1) for x in vals):
        raise ValueError(f"{vals} is not stable on K_{k}")
    cur = vals
    for _ in range((k - 1) ** (k - 1)):
        cur = _bank_step_Kk(cur, k)
        if cur == vals:
            return True
    return False


@lru_cache(maxsize=None)
def _critical_values_Kk(k: int) -> frozenset:
    _guard((k - 1) ** (k - 1), f"stable configurations on K_{k}")
    step = {c: _bank_step_Kk(c, k) for c in stable_configs_Kk(k)}
    # the recurrent states of a functional graph are the ones on its cycles
    on_cycle = set()
    state = {}
    for start in step:
        if start in state:
            continue
        path = []
        cur = start
        while cur not in state:
            state[cur] = "open"
            path.append(cur)
            cur = step[cur]
        if state[cur] == "open":
            idx = path.index(cur)
            on_cycle.update(path[idx:])
        for p in path:
            state[p] = "done"
    return frozenset(on_cycle)


def critical_configs_Kk(k: int) -> set[Configuration]:
    if k < 2:
        raise ValueError("K_k needs k >= 2")
    return {Configuration.from_nonbank(v) for v in _critical_values_Kk(k)}


# ---------------------------------------------------------------------------
# k-uniform hypergraphs


def is_stable_hyper(H: UniformHypergraph, c: Configuration) -> bool:
    return all(0 <= x < H.k - 1 for x in c.nonbank)


def fire_hyper(H: UniformHypergraph, c: Configuration, v: int, e: int) -> Configuration:
    """Fire ``v`` along edge number ``e``: ``v`` pays k-1, the rest of ``e`` gains 1."""
    edge = H.edges[e]
    if v not in edge:
        raise ValueError(f"vertex {v} is not in edge {sorted(edge)}")
    if v == c.bank:
        if not is_stable_hyper(H, c):
            raise ValueError("the bank may only fire when the configuration is stable")
    elif c[v] < H.k - 1:
        raise ValueError(f"vertex {v} holds {c[v]} < {H.k - 1} chips and cannot fire")
    vals = list(c.values)
    _bump(vals, v, -(H.k - 1))
    for u in edge:
        if u != v:
            _bump(vals, u, 1)
    return Configuration(tuple(vals), c.bank)


def _path_params(H: UniformHypergraph) -> tuple[int, int]:
    n, k = len(H.edges), H.k
    if n == 0 or H != make_hyperpath(n, k):
        raise ValueError("expected a hyperpath labelled left to right")
    return n, k


def edge_blocks(c: Configuration, n: int, k: int) -> list[tuple]:
    """Non-bank values of the restriction of ``c`` to each edge e_1..e_n."""
    return [tuple(c.values[(i - 1) * (k - 1) + 1: i * (k - 1) + 1]) for i in range(1, n + 1)]


def _classify_values(vals: tuple, n: int, k: int, critical: frozenset) -> int:
    for i in range(n):
        if vals[i * (k - 1):(i + 1) * (k - 1)] not in critical:
            return i
    return n


def classify_stable(H: UniformHypergraph, c: Configuration) -> int:
    """Stratum index ``s``: the first ``s`` edge restrictions are critical on
    K_k and the next one (if any) is not."""
    n, k = _path_params(H)
    if c.bank != 0 or len(c) != H.num_vertices:
        raise ValueError("expected a configuration on the hyperpath with bank 0")
    if not is_stable_hyper(H, c):
        raise ValueError(f"{c} is not stable")
    return _classify_values(c.nonbank, n, k, _critical_values_Kk(k))


def stable_configs_path(n: int, k: int) -> Iterable[Configuration]:
    _guard((k - 1) ** (n * (k - 1)), f"stable configurations on P_{n}^{k}")
    for vals in itertools.product(range(k - 1), repeat=n * (k - 1)):
        yield Configuration.from_nonbank(vals)


def count_strata(n: int, k: int) -> list[int]:
    """Exhaustive sizes ``[|B_0|, ..., |B_n|]`` over all stable configurations."""
    if n < 1 or k < 2:
        raise ValueError("need n >= 1 and k >= 2")
    _guard((k - 1) ** (n * (k - 1)), f"stable configurations on P_{n}^{k}")
    critical = _critical_values_Kk(k)
    counts = [0] * (n + 1)
    for vals in itertools.product(range(k - 1), repeat=n * (k - 1)):
        counts[_classify_values(vals, n, k, critical)] += 1
    return counts
