"""k-uniform hypergraphs and their homogeneous eigenvalue systems.

Vertices are the integers ``0..r-1``.  The named families use fixed labels:
the hyperpath ``P_n^k`` is labelled left to right so that edge ``t`` (1-based)
is ``{(k-1)(t-1), ..., (k-1)t}``; a starlike hypergraph puts the shared vertex
at 0 and lays the arms out consecutively in input order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class UniformHypergraph:
    k: int
    num_vertices: int
    edges: tuple[frozenset, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"uniformity must be >= 2, got {self.k}")
        if self.num_vertices < 1:
            raise ValueError("a hypergraph needs at least one vertex")
        edges = tuple(frozenset(e) for e in self.edges)
        seen = set()
        for e in edges:
            if len(e) != self.k:
                raise ValueError(f"edge {sorted(e)} does not have {self.k} distinct vertices")
            if any(not (0 <= v < self.num_vertices) for v in e):
                raise ValueError(f"edge {sorted(e)} has a vertex outside 0..{self.num_vertices - 1}")
            if e in seen:
                raise ValueError(f"duplicate edge {sorted(e)}")
            seen.add(e)
        object.__setattr__(self, "edges", edges)

    @property
    def vertices(self) -> range:
        return range(self.num_vertices)

    def incident_edges(self, v: int) -> list[int]:
        """Indices of the edges containing ``v``."""
        return [i for i, e in enumerate(self.edges) if v in e]

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def is_connected(self) -> bool:
        return len(_components(self.vertices, self.edges)) == 1

    def relabel(self, perm: Mapping[int, int]) -> UniformHypergraph:
        """Apply the vertex bijection ``perm`` (old id -> new id)."""
        return UniformHypergraph(
            self.k, self.num_vertices, tuple(frozenset(perm[v] for v in e) for e in self.edges), self.name
        )

    def __str__(self):
        es = ", ".join("{" + ",".join(map(str, sorted(e))) + "}" for e in self.edges)
        label = self.name or f"H(k={self.k})"
        return f"{label} on {self.num_vertices} vertices: {es}"


def _components(vertices: Iterable[int], edges: Iterable[Iterable[int]]) -> list[set]:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        e = list(e)
        for u in e[1:]:
            ra, rb = find(e[0]), find(u)
            if ra != rb:
                parent[ra] = rb
    comps: dict[int, set] = {}
    for v in parent:
        comps.setdefault(find(v), set()).add(v)
    return list(comps.values())


def make_hyperpath(n: int, k: int) -> UniformHypergraph:
    if n < 1:
        raise ValueError(f"a hyperpath needs at least one edge, got n={n}")
    if k < 2:
        raise ValueError(f"uniformity must be >= 2, got k={k}")
    edges = tuple(frozenset(range((k - 1) * (t - 1), (k - 1) * t + 1)) for t in range(1, n + 1))
    return UniformHypergraph(k, n * (k - 1) + 1, edges, name=f"P_{n}^{k}")


def make_starlike(k: int, arm_lengths: Sequence[int]) -> UniformHypergraph:
    """Hyperpaths of the given lengths glued at vertex 0."""
    arm_lengths = list(arm_lengths)
    if not arm_lengths:
        raise ValueError("a starlike hypergraph needs at least one arm")
    if k < 2:
        raise ValueError(f"uniformity must be >= 2, got k={k}")
    if any(n < 1 for n in arm_lengths):
        raise ValueError(f"arm lengths must be >= 1, got {arm_lengths}")
    edges = []
    nxt = 1
    for n in arm_lengths:
        joint = 0
        for _ in range(n):
            fresh = list(range(nxt, nxt + k - 1))
            edges.append(frozenset([joint] + fresh))
            joint = fresh[-1]
            nxt += k - 1
    name = "S^%d_{%s}" % (k, ",".join(map(str, arm_lengths)))
    return UniformHypergraph(k, nxt, tuple(edges), name=name)


def make_hyperstar(m: int, k: int) -> UniformHypergraph:
    H = make_starlike(k, [1] * m)
    return UniformHypergraph(H.k, H.num_vertices, H.edges, name=f"S_{m}^{k}")


def make_single_edge(k: int) -> UniformHypergraph:
    return UniformHypergraph(k, k, (frozenset(range(k)),), name=f"E^{k}")


def cored_vertices(H: UniformHypergraph) -> set[int]:
    """Vertices lying in exactly one edge."""
    return {v for v in H.vertices if H.degree(v) == 1}


def is_cut_vertex(H: UniformHypergraph, v: int) -> bool:
    """Whether removing ``v`` (shrinking its edges) disconnects the rest."""
    if not H.is_connected():
        raise ValueError("is_cut_vertex needs a connected hypergraph")
    rest = [u for u in H.vertices if u != v]
    if not rest:
        return False
    shrunk = [e - {v} for e in H.edges]
    return len(_components(rest, shrunk)) > 1


def delete_vertex(H: UniformHypergraph, w: int) -> tuple[UniformHypergraph, dict[int, int]]:
    """Drop ``w`` and every edge through it; returns the relabelled hypergraph
    together with the map old id -> new id."""
    mapping = {}
    for v in H.vertices:
        if v != w:
            mapping[v] = len(mapping)
    edges = tuple(frozenset(mapping[u] for u in e) for e in H.edges if w not in e)
    return UniformHypergraph(H.k, len(mapping), edges), mapping


# ---------------------------------------------------------------------------
# polynomial systems


Monomial = tuple  # exponent vector aligned with the system's variables


@dataclass(frozen=True)
class LamPoly:
    """Multivariate polynomial whose coefficients are affine in lambda.

    The coefficient of monomial ``m`` is ``const[m] + lam[m] * lambda``;
    both maps are sparse and hold ``Fraction`` values.  Substituting a
    number for lambda gives a polynomial with an empty ``lam`` map.
    """

    nvars: int
    const: Mapping[Monomial, Fraction]
    lam: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "const", {m: Fraction(c) for m, c in self.const.items() if c})
        object.__setattr__(self, "lam", {m: Fraction(c) for m, c in self.lam.items() if c})

    def monomials(self) -> set:
        return set(self.const) | set(self.lam)

    def coefficient(self, m: Monomial, lam=None):
        """Coefficient of ``m``: a number if ``lam`` is given, else the pair (const, lam)."""
        c, l = self.const.get(m, Fraction(0)), self.lam.get(m, Fraction(0))
        if lam is None:
            return (c, l)
        return c + l * Fraction(lam)

    def is_symbolic(self) -> bool:
        return bool(self.lam)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.monomials()}
        return len(degs) <= 1

    @property
    def total_degree(self) -> int:
        return max((sum(m) for m in self.monomials()), default=0)

    def substitute_lambda(self, value) -> LamPoly:
        value = Fraction(value)
        out = dict(self.const)
        for m, c in self.lam.items():
            out[m] = out.get(m, Fraction(0)) + c * value
        return LamPoly(self.nvars, out)

    def set_variable(self, index: int, value: int) -> LamPoly:
        """Substitute ``x_index := value`` (0 or 1) and drop that variable."""
        if value not in (0, 1):
            raise ValueError("only 0 and 1 substitutions are supported")

        def sub(terms):
            out: dict = {}
            for m, c in terms.items():
                if value == 0 and m[index]:
                    continue
                mm = m[:index] + m[index + 1:]
                out[mm] = out.get(mm, Fraction(0)) + c
            return out

        return LamPoly(self.nvars - 1, sub(self.const), sub(self.lam))

    def evaluate(self, point: Sequence, lam=0) -> Fraction:
        total = Fraction(0)
        for m in self.monomials():
            v = self.coefficient(m, lam)
            for x, e in zip(point, m):
                v *= Fraction(x) ** e
            total += v
        return total

    def __eq__(self, other):
        if not isinstance(other, LamPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.const == other.const and self.lam == other.lam

    def __hash__(self):
        return hash((self.nvars, frozenset(self.const.items()), frozenset(self.lam.items())))

    def to_string(self, names: Sequence[str] | None = None) -> str:
        names = list(names or [f"x{i}" for i in range(self.nvars)])
        terms = []
        for m in sorted(self.monomials(), reverse=True):
            c, l = self.coefficient(m)
            mono = "".join(
                names[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e
            )
            for coef, sym in ((l, "λ"), (c, "")):
                if not coef:
                    continue
                mag = abs(coef)
                body = ("" if mag == 1 and (sym or mono) else str(mag)) + sym + mono
                terms.append(("-" if coef < 0 else "+", body or "1"))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return " ".join([head] + [f"{s} {b}" for s, b in terms[1:]])

    def __str__(self):
        return self.to_string()


@dataclass(frozen=True)
class EigenSystem:
    """One polynomial per vertex, ``F_v = λ x_v^{k-1} - Σ_{v∈e} x_{e∖v}``."""

    variables: tuple[int, ...]
    polys: tuple[LamPoly, ...]
    k: int

    def poly(self, v: int) -> LamPoly:
        return self.polys[self.variables.index(v)]

    def at(self, lam) -> EigenSystem:
        return EigenSystem(self.variables, tuple(p.substitute_lambda(lam) for p in self.polys), self.k)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)


def _unit(n: int, i: int, e: int = 1) -> list[int]:
    m = [0] * n
    m[i] = e
    return m


def eigen_system(H: UniformHypergraph, lambda_value=None) -> EigenSystem:
    """Build the eigenvalue system of ``H``.

    With ``lambda_value=None`` lambda stays symbolic; otherwise it is
    replaced by the given rational.
    """
    r, k = H.num_vertices, H.k
    polys = []
    for v in H.vertices:
        lam = {tuple(_unit(r, v, k - 1)): Fraction(1)}
        const: dict = {}
        for e in H.edges:
            if v in e:
                m = [0] * r
                for u in e:
                    if u != v:
                        m[u] = 1
                const[tuple(m)] = const.get(tuple(m), Fraction(0)) - 1
        p = LamPoly(r, const, lam)
        if lambda_value is not None:
            p = p.substitute_lambda(lambda_value)
        polys.append(p)
    return EigenSystem(tuple(H.vertices), tuple(polys), k)


@dataclass(frozen=True)
class PoissonSplit:
    """Pieces of the eigen system after singling out vertex ``w``.

    ``f_w`` and ``f[v]`` are the dehomogenised polynomials (``x_w := 1``),
    ``Fbar[v]`` the restrictions to the hyperplane ``x_w = 0``; all three
    live on the variables ``variables`` (every vertex except ``w``).
    """

    w: int
    variables: tuple[int, ...]
    f_w: LamPoly
    f: dict
    Fbar: dict


def poisson_split(H: UniformHypergraph, w: int, lambda_value=None) -> PoissonSplit:
    if not (0 <= w < H.num_vertices):
        raise ValueError(f"vertex {w} not in hypergraph")
    system = eigen_system(H, lambda_value)
    rest = tuple(v for v in H.vertices if v != w)
    f = {}
    Fbar = {}
    f_w = None
    for v, p in zip(system.variables, system.polys):
        if v == w:
            f_w = p.set_variable(w, 1)
        else:
            f[v] = p.set_variable(w, 1)
            Fbar[v] = p.set_variable(w, 0)
    return PoissonSplit(w, rest, f_w, f, Fbar)
