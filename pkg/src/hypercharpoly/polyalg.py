"""Exact univariate arithmetic in t = lambda**k.

Three value types live here:

* :class:`TPoly` -- an integer polynomial in ``t``;
* :class:`TRat` -- a reduced ratio of two ``TPoly``;
* :class:`FactoredCharPoly` -- ``lambda**e * prod f(lambda**k)**m_f``, the
  shape in which every characteristic polynomial of this package is produced.

Everything is exact (Python ints and ``fractions.Fraction``); exponents are
unbounded integers.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping


class NotPolynomial(ArithmeticError):
    """A factored product did not collapse to a polynomial.

    Raised by :meth:`FactoredCharPoly.finalize` when some factor keeps a
    negative exponent, the power of lambda is negative or the integer content
    is not 1.
    """

    def __init__(self, message, factor=None, exponent=None):
        super().__init__(message)
        self.factor = factor
        self.exponent = exponent


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class TPoly:
    """Integer polynomial in ``t``; coefficients stored low -> high.

    >>> (TPoly([-1, 1]) * TPoly([-2, 1])).coeffs
    (2, -3, 1)
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = _trim(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"TPoly coefficients must be int, got {type(c).__name__}")
        self.coeffs = cs
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c: int) -> TPoly:
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> TPoly:
        return cls([0] * degree + [c])

    @classmethod
    def from_mapping(cls, terms: Mapping[int, int]) -> TPoly:
        """Build from a sparse ``{degree: coefficient}`` map."""
        if not terms:
            return cls()
        top = max(terms)
        return cls([terms.get(i, 0) for i in range(top + 1)])

    def to_mapping(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    # basic queries
    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def content(self) -> int:
        """Non-negative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> TPoly:
        """Content-free associate with positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return TPoly(c // g for c in self.coeffs)

    def trailing_power(self) -> int:
        """Largest ``j`` with ``t**j`` dividing self."""
        for j, c in enumerate(self.coeffs):
            if c:
                return j
        return 0

    def shift_down(self, j: int) -> TPoly:
        if any(self.coeffs[:j]):
            raise ArithmeticError("t**%d does not divide %r" % (j, self))
        return TPoly(self.coeffs[j:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # arithmetic
    def __add__(self, other):
        other = _as_tpoly(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return TPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return TPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _as_tpoly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_tpoly(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return TPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = TPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod_q(self, other: TPoly):
        """Division over the rationals; returns Fraction coefficient lists."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dq = other.degree
        lc = Fraction(other.lc)
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            q = rem[i] / lc
            if q:
                quot[i - dq] = q
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= q * b
        while rem and rem[-1] == 0:
            rem.pop()
        return quot, rem

    def divexact(self, other: TPoly) -> TPoly:
        """Exact quotient in Z[t]; raises ``ArithmeticError`` otherwise."""
        quot, rem = self.divmod_q(other)
        if rem or any(q.denominator != 1 for q in quot):
            raise ArithmeticError(f"{other} does not divide {self} exactly")
        return TPoly(int(q) for q in quot)

    def divides(self, other: TPoly) -> bool:
        quot, rem = other.divmod_q(self)
        return not rem and all(q.denominator == 1 for q in quot)

    # comparison / hashing
    def __eq__(self, other):
        other = _as_tpoly(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("TPoly", self.coeffs))
        return self._hash

    def sort_key(self):
        """Degree, then coefficient magnitudes high -> low, then signs."""
        rev = tuple(reversed(self.coeffs))
        return (self.degree, tuple(abs(c) for c in rev), rev)

    def __repr__(self):
        return f"TPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self, "t")


def _as_tpoly(x):
    if isinstance(x, TPoly):
        return x
    if isinstance(x, int):
        return TPoly([x])
    return NotImplemented


T = TPoly([0, 1])


def format_poly(p: TPoly, var: str = "t", power: int = 1) -> str:
    """Render ``p(var**power)`` high degree first, e.g. ``t^2 - 3t + 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        e = i * power
        if e == 0:
            mono = ""
        elif e == 1:
            mono = var
        else:
            mono = f"{var}^{e}"
        mag = abs(c)
        body = (str(mag) if mag != 1 or not mono else "") + mono
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def poly_gcd(a: TPoly, b: TPoly) -> TPoly:
    """Primitive, positive-leading gcd in Z[t]; gcd(0, 0) = 0."""
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    # primitive Euclid: remainders are scaled back to Z[t] at every step
    x, y = a.primitive(), b.primitive()
    if x.degree < y.degree:
        x, y = y, x
    while not y.is_zero():
        _, rem = x.divmod_q(y)
        if not rem:
            x, y = y, TPoly()
            break
        den = 1
        for c in rem:
            den = den * c.denominator // gcd(den, c.denominator)
        r = TPoly(int(c * den) for c in rem).primitive()
        x, y = y, r
    return x.primitive()


class TRat:
    """Reduced ratio ``num/den`` of integer polynomials in ``t``.

    The pair is kept with ``gcd(num, den) = 1`` (as polynomials and as
    integer contents) and a positive leading coefficient on ``den``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _as_tpoly(num)
        den = _as_tpoly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("TRat needs TPoly or int parts")
        if den.is_zero():
            raise ZeroDivisionError("TRat with zero denominator")
        if num.is_zero():
            self.num, self.den = TPoly(), TPoly([1])
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.divexact(g), den.divexact(g)
        c = gcd(num.content(), den.content())
        if den.lc < 0:
            c = -c
        self.num = TPoly(x // c for x in num.coeffs)
        self.den = TPoly(x // c for x in den.coeffs)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = _as_trat(other)
        return TRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return TRat(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_trat(other))

    def __rsub__(self, other):
        return _as_trat(other) - self

    def __mul__(self, other):
        other = _as_trat(other)
        return TRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_trat(other)
        if other.is_zero():
            raise ZeroDivisionError("TRat division by zero")
        return TRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_trat(other) / self

    def __call__(self, x):
        return Fraction(self.num(x)) / self.den(x)

    def __eq__(self, other):
        try:
            other = _as_trat(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("TRat", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"TRat({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == TPoly([1]):
            return str(self.num)
        return f"({self.num})/({self.den})"


def _as_trat(x):
    if isinstance(x, TRat):
        return x
    if isinstance(x, (int, TPoly)):
        return TRat(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to TRat")


def trat_reduce(num, den) -> TRat:
    return TRat(num, den)


def _split(p: TPoly):
    """Return ``(content, j, primitive)`` with ``p = content * t**j * primitive``."""
    j = p.trailing_power()
    q = p.shift_down(j)
    prim = q.primitive()
    c = q.lc // prim.lc
    return c, j, prim


class FactoredCharPoly:
    """``lambda**lambda_exponent * prod f(lambda**k)**e_f`` with exact bookkeeping.

    Factor keys are primitive polynomials in ``t`` with positive leading
    coefficient and no ``t`` factor; they are kept pairwise coprime by gcd
    refinement whenever a new factor arrives, so cancellations between
    numerators and denominators are found without full factorisation.
    Integer content is tracked separately in :attr:`content`.

    Instances are treated as immutable: every operation returns a new one.
    """

    __slots__ = ("k", "lambda_exponent", "factors", "content")

    def __init__(self, k: int, lambda_exponent: int = 0, factors=None, content=Fraction(1)):
        if k < 1:
            raise ValueError("k must be positive")
        self.k = k
        self.lambda_exponent = lambda_exponent
        self.factors = dict(factors or {})
        self.content = Fraction(content)

    @classmethod
    def one(cls, k: int) -> FactoredCharPoly:
        return cls(k)

    def copy(self) -> FactoredCharPoly:
        return FactoredCharPoly(self.k, self.lambda_exponent, self.factors, self.content)

    # accumulation
    def _absorb(self, p: TPoly, e: int) -> None:
        """In-place: multiply by ``p**e`` for primitive non-constant ``p``."""
        if e == 0 or p.degree <= 0:
            return
        for q in list(self.factors):
            g = poly_gcd(p, q)
            if g.degree <= 0:
                continue
            eq = self.factors.pop(q)
            # p^e q^eq = g^(e+eq) (p/g)^e (q/g)^eq
            self._absorb(g, e + eq)
            self._absorb(q.divexact(g), eq)
            self._absorb(p.divexact(g), e)
            return
        self.factors[p] = self.factors.get(p, 0) + e
        if self.factors[p] == 0:
            del self.factors[p]

    def _absorb_poly(self, p: TPoly, e: int) -> None:
        if p.is_zero():
            raise ZeroDivisionError("factor is zero")
        c, j, prim = _split(p)
        self.lambda_exponent += self.k * j * e
        self.content *= Fraction(c) ** e
        self._absorb(prim, e)

    def mul_factor(self, factor, exponent: int = 1, lambda_shift: int = 0) -> FactoredCharPoly:
        """Return ``self * (factor * lambda**lambda_shift)**exponent``.

        ``factor`` is a :class:`TRat`, :class:`TPoly` or int in ``t``.
        """
        factor = _as_trat(factor)
        if factor.is_zero():
            raise ZeroDivisionError("cannot multiply by a zero factor")
        out = self.copy()
        if exponent == 0:
            return out
        out._absorb_poly(factor.num, exponent)
        out._absorb_poly(factor.den, -exponent)
        out.lambda_exponent += lambda_shift * exponent
        return out

    def mul_lambda(self, e: int) -> FactoredCharPoly:
        out = self.copy()
        out.lambda_exponent += e
        return out

    def __mul__(self, other: FactoredCharPoly) -> FactoredCharPoly:
        if not isinstance(other, FactoredCharPoly):
            return NotImplemented
        if other.k != self.k:
            raise ValueError("cannot multiply factored polynomials with different k")
        out = self.copy()
        out.lambda_exponent += other.lambda_exponent
        out.content *= other.content
        for p, e in other.factors.items():
            out._absorb(p, e)
        return out

    def __pow__(self, e: int) -> FactoredCharPoly:
        if e < 0:
            raise ValueError("negative power")
        if e == 0:
            return FactoredCharPoly(self.k)
        return FactoredCharPoly(
            self.k,
            self.lambda_exponent * e,
            {p: m * e for p, m in self.factors.items()},
            self.content ** e,
        )

    # finishing
    def finalize(self) -> FactoredCharPoly:
        """Check the accumulated product is a monic polynomial in lambda."""
        for p, e in self.sorted_factors():
            if e < 0:
                raise NotPolynomial(f"factor ({p}) has exponent {e}", p, e)
        if self.lambda_exponent < 0:
            raise NotPolynomial(f"lambda exponent {self.lambda_exponent} is negative")
        if self.content != 1:
            raise NotPolynomial(f"integer content {self.content} is not 1")
        return FactoredCharPoly(
            self.k, self.lambda_exponent, {p: e for p, e in self.factors.items() if e}
        )

    def sorted_factors(self) -> list[tuple[TPoly, int]]:
        """Factors in display order (see :meth:`TPoly.sort_key`)."""
        return sorted(self.factors.items(), key=lambda kv: kv[0].sort_key())

    def degree(self) -> int:
        return self.lambda_exponent + self.k * sum(p.degree * e for p, e in self.factors.items())

    def eval(self, lam) -> Fraction:
        """Exact value at the rational point ``lam``."""
        lam = Fraction(lam)
        t = lam ** self.k
        value = self.content
        if lam == 0 and self.lambda_exponent > 0:
            return Fraction(0)
        value *= lam ** self.lambda_exponent
        for p, e in self.factors.items():
            v = Fraction(p(t))
            if v == 0:
                if e > 0:
                    return Fraction(0)
                raise ZeroDivisionError("pole at lambda = %s" % lam)
            value *= v ** e
        return value

    def expand(self) -> list[int]:
        """Dense lambda-coefficients low -> high; only for small degrees."""
        poly = TPoly([1])
        for p, e in self.factors.items():
            if e < 0:
                raise NotPolynomial("cannot expand a negative exponent", p, e)
            lifted = TPoly.from_mapping({i * self.k: c for i, c in p.to_mapping().items()})
            poly = poly * lifted ** e
        if self.content.denominator != 1:
            raise NotPolynomial("non-integral content")
        poly = poly * int(self.content)
        return [0] * self.lambda_exponent + list(poly.coeffs)

    def __eq__(self, other):
        if not isinstance(other, FactoredCharPoly):
            return NotImplemented
        return (
            self.k == other.k
            and self.lambda_exponent == other.lambda_exponent
            and self.content == other.content
            and {p: e for p, e in self.factors.items() if e}
            == {p: e for p, e in other.factors.items() if e}
        )

    def __hash__(self):
        return hash((self.k, self.lambda_exponent, frozenset(self.factors.items())))

    def __repr__(self):
        facs = ", ".join(f"({p})^{e}" for p, e in self.sorted_factors())
        return f"FactoredCharPoly(k={self.k}, lambda^{self.lambda_exponent}, [{facs}])"

    def __str__(self):
        return format_factored(self)


def format_factored(F: FactoredCharPoly, style: str = "text") -> str:
    """Render with t expanded back to lambda**k.

    ``style='text'`` gives ``λ^35 · (λ^3 - 1)^6 · (λ^3 - 2)^9``;
    ``style='latex'`` gives ``\\lambda^{35}(\\lambda^{3}-1)^{6}...``.
    """
    if style == "text":
        parts = []
        if F.content != 1:
            parts.append(str(F.content))
        if F.lambda_exponent:
            parts.append("λ" if F.lambda_exponent == 1 else f"λ^{F.lambda_exponent}")
        for p, e in F.sorted_factors():
            body = f"({format_poly(p, 'λ', F.k)})"
            parts.append(body if e == 1 else f"{body}^{e}")
        return " · ".join(parts) if parts else "1"
    if style == "latex":
        out = []
        if F.content != 1:
            out.append(str(F.content))
        if F.lambda_exponent:
            out.append("\\lambda" if F.lambda_exponent == 1 else f"\\lambda^{{{F.lambda_exponent}}}")
        for p, e in F.sorted_factors():
            body = format_poly(p, "\\lambda", F.k)
            body = body.replace(" ", "")
            body = _latex_braces(body)
            out.append(f"({body})" if e == 1 else f"({body})^{{{e}}}")
        return "".join(out) if out else "1"
    raise ValueError(f"unknown style {style!r}")


def _latex_braces(s: str) -> str:
    # lambda^12 -> lambda^{12}
    out, i = [], 0
    while i < len(s):
        if s[i] == "^":
            j = i + 1
            while j < len(s) and s[j].isdigit():
                j += 1
            out.append("^{" + s[i + 1:j] + "}")
            i = j
        else:
            out.append(s[i])
            i += 1
    return "".join(out)
