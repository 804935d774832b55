"""Brute-force check of the closed forms through the Macaulay resultant.

For ``n`` homogeneous forms of degrees ``d_1..d_n`` in ``n`` variables put
``D = sum(d_i - 1) + 1``.  The Macaulay matrix ``M`` has one row and one column
per monomial of degree ``D``; the row of ``x^a`` is ``(x^a / x_i^d_i) * F_i`` for
the first ``i`` with ``x_i^d_i | x^a``.  Deleting the rows and columns of the
*reduced* monomials (divisible by exactly one ``x_i^d_i``) leaves ``M'``, and

    Res(F_1, ..., F_n) = det(M) / det(M')

whenever ``det(M') != 0``.  Rows and columns share one monomial order, so
``Res(x_1^d_1, ..., x_n^d_n) = 1`` with no sign fix-up.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, lcm, prod
from typing import Sequence

from .hypergraph import LamPoly, UniformHypergraph, eigen_system
from .polyalg import FactoredCharPoly

MAX_COLUMNS = 2500


class DegenerateMinor(ArithmeticError):
    """det(M') vanished for every variable ordering and the system does not split."""


class OracleTooLarge(ValueError):
    """The Macaulay matrix would exceed :data:`MAX_COLUMNS` columns."""


def bareiss_det(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    M = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        rowk = M[k]
        for i in range(k + 1, n):
            rowi = M[i]
            a = rowi[k]
            if a == 0:
                for j in range(k + 1, n):
                    if rowi[j]:
                        rowi[j] = rowi[j] * pivot // prev
            else:
                for j in range(k + 1, n):
                    rowi[j] = (rowi[j] * pivot - a * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def monomials_of_degree(n: int, D: int) -> list[tuple]:
    """All exponent vectors of length ``n`` summing to ``D``, lexicographically descending."""
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for a in range(left, -1, -1):
            rec(prefix + (a,), left - a, slots - 1)

    rec((), D, n)
    return out


@dataclass
class MacaulayInstance:
    n: int
    degrees: tuple
    total_degree: int
    monomials: list                      # row/column order
    rows: list                           # integer rows of M
    row_scale: list                      # integer each row was multiplied by
    reduced: list                        # True for reduced monomials

    @property
    def size(self) -> int:
        return len(self.monomials)

    def minor_indices(self) -> list[int]:
        return [i for i, red in enumerate(self.reduced) if not red]


def macaulay_matrix_size(n: int, degrees: Sequence[int]) -> int:
    D = sum(d - 1 for d in degrees) + 1
    return comb(D + n - 1, n - 1)


def build_macaulay(polys: Sequence[LamPoly]) -> MacaulayInstance:
    n = len(polys)
    if n == 0:
        raise ValueError("need at least one polynomial")
    for p in polys:
        if p.nvars != n:
            raise ValueError(f"expected {n} variables, got a polynomial in {p.nvars}")
        if p.is_symbolic():
            raise ValueError("substitute a value for lambda before building the Macaulay matrix")
        if not p.is_homogeneous() or not p.const:
            raise ValueError("polynomials must be nonzero and homogeneous")
    degrees = tuple(p.total_degree for p in polys)
    if any(d < 1 for d in degrees):
        raise ValueError("degrees must be >= 1")
    size = macaulay_matrix_size(n, degrees)
    if size > MAX_COLUMNS:
        raise OracleTooLarge(f"Macaulay matrix would have {size} columns (limit {MAX_COLUMNS})")
    D = sum(d - 1 for d in degrees) + 1
    monos = monomials_of_degree(n, D)
    index = {m: i for i, m in enumerate(monos)}

    scales = []
    int_terms = []
    for p in polys:
        L = lcm(*(c.denominator for c in p.const.values()))
        scales.append(L)
        int_terms.append([(m, int(c * L)) for m, c in p.const.items()])

    rows, row_scale, reduced = [], [], []
    for a in monos:
        hits = [i for i in range(n) if a[i] >= degrees[i]]
        i = hits[0]
        reduced.append(len(hits) == 1)
        shift = list(a)
        shift[i] -= degrees[i]
        row = [0] * len(monos)
        for m, c in int_terms[i]:
            row[index[tuple(x + y for x, y in zip(shift, m))]] += c
        rows.append(row)
        row_scale.append(scales[i])
    return MacaulayInstance(n, degrees, D, monos, rows, row_scale, reduced)


def _resultant_fixed_order(polys: Sequence[LamPoly]) -> Fraction:
    inst = build_macaulay(polys)
    keep = inst.minor_indices()
    sub = [[inst.rows[i][j] for j in keep] for i in keep]
    den = bareiss_det(sub)
    if den == 0:
        raise DegenerateMinor("det(M') = 0")
    num = bareiss_det(inst.rows)
    scale_all = prod(inst.row_scale)
    scale_minor = prod(inst.row_scale[i] for i in keep)
    return Fraction(num, den) * Fraction(scale_minor, scale_all)


def permute_system(polys: Sequence[LamPoly], perm: Sequence[int]) -> list[LamPoly]:
    """Reorder polynomials and variables together: new slot ``j`` holds old ``perm[j]``."""
    def re(terms):
        return {tuple(m[perm[j]] for j in range(len(perm))): c for m, c in terms.items()}

    return [LamPoly(p.nvars, re(p.const), re(p.lam)) for p in (polys[i] for i in perm)]


def _blocks(polys: Sequence[LamPoly]) -> list[list[int]]:
    """Groups of indices whose polynomials share variables (index i <-> variable i)."""
    n = len(polys)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, p in enumerate(polys):
        for m in p.monomials():
            for v, e in enumerate(m):
                if e:
                    parent[find(v)] = find(i)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _restrict(polys, idx):
    def re(terms):
        return {tuple(m[j] for j in idx): c for m, c in terms.items()}

    return [LamPoly(len(idx), re(polys[i].const), re(polys[i].lam)) for i in idx]


def macaulay_resultant(polys: Sequence[LamPoly], max_orderings: int = 24) -> Fraction:
    """Exact resultant of ``n`` homogeneous forms in ``n`` variables.

    Falls back to other variable orderings when ``det(M') = 0``, and then to
    splitting a block-decoupled system into independent blocks.
    """
    polys = list(polys)
    n = len(polys)
    if n == 1:
        # Res(c x^d) = c
        p = polys[0]
        if p.is_symbolic() or len(p.const) != 1:
            raise ValueError("a single form in one variable must be a numeric monomial")
        (c,) = p.const.values()
        return Fraction(c)
    tried = 0
    for perm in itertools.permutations(range(n)):
        try:
            return _resultant_fixed_order(permute_system(polys, perm))
        except DegenerateMinor:
            tried += 1
            if tried >= max_orderings:
                break
    blocks = _blocks(polys)
    if len(blocks) > 1:
        degrees = [p.total_degree for p in polys]
        value = Fraction(1)
        for blk in blocks:
            others = prod(degrees[i] for i in range(n) if i not in blk)
            value *= macaulay_resultant(_restrict(polys, blk), max_orderings) ** others
        return value
    raise DegenerateMinor(f"det(M') = 0 under {tried} variable orderings")


def charpoly_eval_oracle(H: UniformHypergraph, lambda0) -> Fraction:
    """Characteristic polynomial of ``H`` at ``lambda0`` straight from the resultant."""
    return macaulay_resultant(list(eigen_system(H, Fraction(lambda0)).polys))


@dataclass
class VerificationRow:
    lambda0: Fraction
    formula: Fraction
    oracle: Fraction | None
    error: str = ""

    @property
    def equal(self) -> bool:
        return self.oracle is not None and self.formula == self.oracle


@dataclass
class VerificationReport:
    hypergraph: UniformHypergraph
    rows: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return bool(self.rows) and all(r.equal for r in self.rows)

    def __str__(self):
        lines = [f"oracle check for {self.hypergraph.name or self.hypergraph}:"]
        for r in self.rows:
            status = "equal" if r.equal else "MISMATCH"
            oracle = r.error if r.oracle is None else r.oracle
            lines.append(f"  λ={r.lambda0}: formula={r.formula} oracle={oracle} [{status}]")
        return "\n".join(lines)


def verify_formula(H: UniformHypergraph, F: FactoredCharPoly, lambdas: Sequence) -> VerificationReport:
    """Compare ``F`` with the resultant of ``H``'s eigen system at each ``lambda0``."""
    size = macaulay_matrix_size(H.num_vertices, [H.k - 1] * H.num_vertices)
    if size > MAX_COLUMNS:
        raise OracleTooLarge(f"{H.name or 'hypergraph'} needs {size} columns (limit {MAX_COLUMNS})")
    rep = VerificationReport(H)
    for lam in lambdas:
        lam = Fraction(lam)
        formula = F.eval(lam)
        try:
            oracle = charpoly_eval_oracle(H, lam)
            rep.rows.append(VerificationRow(lam, formula, oracle))
        except DegenerateMinor as exc:
            rep.rows.append(VerificationRow(lam, formula, None, str(exc)))
    return rep
