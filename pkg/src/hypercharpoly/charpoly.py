"""Closed-form characteristic polynomials of hyperpaths, hyperstars and
starlike hypergraphs, assembled exactly in ``t = lambda**k``.

Every product below has the shape

    lambda**a * prod ((t - H) / lambda**(k-1))**m * (smaller pieces)**e

where ``H`` is a sum of iterates ``h_s = g^(s-1)(1)`` of the Moebius map
``g(x) = 1/(1 - x/t)``.  The rational ``h_s`` introduce denominators that
must telescope away; :meth:`FactoredCharPoly.finalize` checks that they do.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Sequence

import numpy as np

from .polyalg import T, FactoredCharPoly, TPoly, TRat


# ---------------------------------------------------------------------------
# iterates of g


def g_map(x: TRat) -> TRat:
    """``g(x) = 1 / (1 - x/t)``."""
    return TRat(1) / (TRat(1) - x / T)


def g_power(i: int, x) -> TRat:
    """``g^i(x)`` by literal composition: ``g^-1 = 0``, ``g^0 = 1``,
    ``g^i = g^(i-1) o g``."""
    x = TRat(x) if not isinstance(x, TRat) else x
    if i == -1:
        return TRat(0)
    if i == 0:
        return TRat(1)
    if i == 1:
        return g_map(x)
    return g_power(i - 1, g_map(x))


@lru_cache(maxsize=None)
def h_iterate(s: int) -> TRat:
    """``h_s = g^(s-1)(1)`` via ``h_0 = 0, h_1 = 1, h_{s+1} = t/(t - h_s)``.

    The iterates do not depend on k; only the meaning of ``t`` does.
    """
    if s < 0:
        raise ValueError("s must be >= 0")
    if s == 0:
        return TRat(0)
    if s == 1:
        return TRat(1)
    prev = h_iterate(s - 1)
    return TRat(T) / (TRat(T) - prev)


def denominator_sequence(count: int) -> list[TPoly]:
    """``b_1..b_count`` from ``b_1 = 1, b_2 = t - 1, b_{s+1} = t b_s - t b_{s-1}``.

    ``h_s = t b_{s-1} / b_s`` and ``t - h_s = b_{s+1} / b_s`` (up to common
    factors that :class:`TRat` cancels).
    """
    bs = [TPoly([1]), T - 1]
    while len(bs) < count:
        bs.append(T * bs[-1] - T * bs[-2])
    return bs[:count]


@dataclass
class HIterates:
    """Table ``s -> h_s`` for one uniformity ``k``."""

    k: int
    table: dict = field(default_factory=dict)

    def __getitem__(self, s: int) -> TRat:
        if s not in self.table:
            self.table[s] = h_iterate(s)
        return self.table[s]


# ---------------------------------------------------------------------------
# stratum sizes


def mu(n: int, k: int, s: int) -> int:
    """Number of stable configurations on P_n^k in stratum ``s``."""
    if not (0 <= s <= n):
        raise ValueError(f"stratum {s} outside [0, {n}]")
    if s == n:
        return k ** (n * (k - 2))
    return k ** (s * (k - 2)) * ((k - 1) ** (k - 1) - k ** (k - 2)) * (k - 1) ** ((n - s - 1) * (k - 1))


def mu_vector(n: int, k: int) -> list[int]:
    return [mu(n, k, s) for s in range(n + 1)]


def expected_degree(num_vertices: int, k: int) -> int:
    """Degree of the resultant of ``r`` forms of degree ``k-1`` in ``r`` variables."""
    r = num_vertices
    return r * (k - 1) ** (r - 1)


def star_pair_lambda_exponent(k: int) -> int:
    """Power of lambda in the characteristic polynomial of the two-edge hyperstar."""
    return (2 * k - 1) * (k - 1) ** (2 * (k - 1)) - 2 * k ** (k - 1) * (k - 1) ** (k - 1) + k ** (2 * k - 3)


# ---------------------------------------------------------------------------
# assemblies


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"uniformity must be >= 2, got {k}")


@lru_cache(maxsize=None)
def charpoly_single_edge(k: int) -> FactoredCharPoly:
    _check_k(k)
    lam = k * (k - 1) ** (k - 1) - k ** (k - 1)
    return FactoredCharPoly(k, lam).mul_factor(T - 1, k ** (k - 2)).finalize()


@lru_cache(maxsize=None)
def charpoly_path(n: int, k: int) -> FactoredCharPoly:
    """Characteristic polynomial of the hyperpath P_n^k.

    Recursion on ``n`` with the single edge as base case:

        lambda^((k-2)(k-1)^(n(k-1))) * prod_s ((t - h_s)/lambda^(k-1))^mu(n,k,s)
            * charpoly_path(n-1, k)^((k-1)^(k-1))
    """
    _check_k(k)
    if n < 1:
        raise ValueError(f"a hyperpath needs n >= 1, got {n}")
    if n == 1:
        return charpoly_single_edge(k)
    F = FactoredCharPoly(k, (k - 2) * (k - 1) ** (n * (k - 1)))
    for s in range(n + 1):
        F = F.mul_factor(TRat(T) - h_iterate(s), mu(n, k, s), lambda_shift=-(k - 1))
    F = F * charpoly_path(n - 1, k) ** ((k - 1) ** (k - 1))
    return F.finalize()


@lru_cache(maxsize=None)
def charpoly_star(m: int, k: int) -> FactoredCharPoly:
    """Characteristic polynomial of the hyperstar with ``m`` edges."""
    _check_k(k)
    if m < 1:
        raise ValueError(f"a hyperstar needs m >= 1, got {m}")
    r = m * (k - 1)
    F = FactoredCharPoly(k, r * (k - 1) ** r)
    base = (k - 1) ** (k - 1) - k ** (k - 2)
    for p in range(m + 1):
        e = comb(m, p) * k ** ((k - 2) * p) * base ** (m - p)
        F = F.mul_factor(T - p, e, lambda_shift=-(k - 1))
    return F.finalize()


def stratum_multisets(arm_lengths: Sequence[int], k: int) -> dict[tuple, int]:
    """Group the multi-indices ``(s_1..s_m)`` by their sorted value.

    Returns ``{sorted (s_1..s_m): sum of prod_i mu(n_i, k, s_i)}``; the
    factor attached to a multi-index only sees the multiset of its entries.
    """
    acc: dict[tuple, int] = {(): 1}
    for n in arm_lengths:
        nxt: dict[tuple, int] = {}
        mus = mu_vector(n, k)
        for key, e in acc.items():
            for s, m in enumerate(mus):
                kk = tuple(sorted(key + (s,)))
                nxt[kk] = nxt.get(kk, 0) + e * m
        acc = nxt
    return acc


def charpoly_starlike(k: int, arm_lengths: Sequence[int]) -> FactoredCharPoly:
    """Characteristic polynomial of hyperpaths of the given lengths sharing
    one end vertex."""
    return _charpoly_starlike(k, tuple(arm_lengths))


@lru_cache(maxsize=None)
def _charpoly_starlike(k: int, arms: tuple) -> FactoredCharPoly:
    _check_k(k)
    if not arms:
        raise ValueError("a starlike hypergraph needs at least one arm")
    if any(n < 1 for n in arms):
        raise ValueError(f"arm lengths must be >= 1, got {list(arms)}")
    m = len(arms)
    ones = sum(1 for n in arms if n == 1)
    r = [n * (k - 1) for n in arms]
    R = sum(r)
    F = FactoredCharPoly(k, (m * (k - 2) + ones) * (k - 1) ** R)
    for i, n in enumerate(arms):
        if n > 1:
            F = F * charpoly_path(n - 1, k) ** ((k - 1) ** (k - 1 + R - r[i]))
    for key, e in sorted(stratum_multisets(arms, k).items()):
        H = TRat(0)
        for s in key:
            H = H + h_iterate(s)
        F = F.mul_factor(TRat(T) - H, e, lambda_shift=-(k - 1))
    return F.finalize()


# ---------------------------------------------------------------------------
# numerical diagnostic


@dataclass
class RootCheckReport:
    matched: list = field(default_factory=list)    # (factor, root, path size, eigenvalue)
    unmatched: list = field(default_factory=list)  # (factor, root)

    @property
    def ok(self) -> bool:
        return not self.unmatched


def path_graph_eigenvalues(j: int) -> np.ndarray:
    """Adjacency spectrum of the simple path on ``j`` vertices."""
    return 2 * np.cos(np.pi * np.arange(1, j + 1) / (j + 1))


def power_hypergraph_root_check(F: FactoredCharPoly, n: int, tol: float = 1e-9) -> RootCheckReport:
    """Match every root ``tau`` of every t-factor of ``F`` with ``mu**2`` for
    an eigenvalue ``mu`` of a simple path on at most ``n + 1`` vertices."""
    cands = [(j, mu_) for j in range(1, n + 2) for mu_ in path_graph_eigenvalues(j)]
    rep = RootCheckReport()
    for p, _ in F.sorted_factors():
        roots = np.roots([float(c) for c in reversed(p.coeffs)])
        for tau in roots:
            best = min(cands, key=lambda jm: abs(tau - jm[1] ** 2))
            if abs(tau - best[1] ** 2) <= tol:
                rep.matched.append((p, complex(tau), best[0], float(best[1])))
            else:
                rep.unmatched.append((p, complex(tau)))
    return rep
