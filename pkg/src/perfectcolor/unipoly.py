"""Univariate integer polynomials.

``UniPoly`` holds coefficients ``c_0 .. c_n`` (lowest degree first) with a
nonzero leading coefficient; the zero polynomial has no coefficients.  All
arithmetic is exact over the integers.  Rational numbers only appear as roots
and evaluation points, via :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Sequence


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: int) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "UniPoly":
        return cls([0] * k + [c])

    @classmethod
    def t(cls) -> "UniPoly":
        return cls((0, 1))

    # basic queries

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_normal_form(self) -> bool:
        return bool(self.coeffs) and self.coeffs[0] != 0

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive_part(self) -> "UniPoly":
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc() < 0:
            c = -c
        return UniPoly(a // c for a in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, int):
            return UniPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return NotImplemented
        result, base = UniPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = UniPoly.const(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self, "t")

    # division

    def pseudo_divmod(self, d: "UniPoly") -> tuple:
        """Return ``(q, r)`` with ``lc(d)**k * self = q*d + r``, ``k = deg self - deg d + 1``."""
        if d.is_zero():
            raise ZeroDivisionError("pseudo-division by the zero polynomial")
        n, m = self.degree(), d.degree()
        if n < m:
            return UniPoly(), self
        r = list(self.coeffs)
        q = [0] * (n - m + 1)
        b = d.lc()
        for k in range(n - m, -1, -1):
            lead = r[k + m]
            q = [b * x for x in q]
            r = [b * x for x in r]
            q[k] += lead
            for i, c in enumerate(d.coeffs):
                r[k + i] -= lead * c
        return UniPoly(q), UniPoly(r[:m])

    def exact_div(self, d: "UniPoly") -> "UniPoly":
        """Quotient in Z[t]; raises ``ArithmeticError`` unless ``d`` divides exactly."""
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        m = d.degree()
        if len(r) - 1 < m:
            if any(r):
                raise ArithmeticError(f"{self} is not divisible by {d}")
            return UniPoly()
        q = [0] * (len(r) - m)
        b = d.lc()
        for k in range(len(r) - 1 - m, -1, -1):
            lead = r[k + m]
            if lead % b:
                raise ArithmeticError(f"{self} is not divisible by {d}")
            c = lead // b
            q[k] = c
            if c:
                for i, dc in enumerate(d.coeffs):
                    r[k + i] -= c * dc
        if any(r[:m]):
            raise ArithmeticError(f"{self} is not divisible by {d}")
        return UniPoly(q)

    def divides(self, other: "UniPoly") -> bool:
        """True iff ``self`` divides ``other`` over the rationals."""
        if self.is_zero():
            return other.is_zero()
        return other.pseudo_divmod(self)[1].is_zero()


def format_poly(p: UniPoly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def gcd_primitive(p: UniPoly, q: UniPoly) -> UniPoly:
    """Greatest common divisor over Q, as a primitive polynomial with positive lc.

    Uses the primitive polynomial remainder sequence so every intermediate
    stays in Z[t].  Coprime inputs give the constant ``1``.
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = p.primitive_part(), q.primitive_part()
    if a.degree() < b.degree():
        a, b = b, a
    while not b.is_zero():
        _, r = a.pseudo_divmod(b)
        a, b = b, r.primitive_part()
    if a.degree() == 0:
        return UniPoly.const(1)
    return a.primitive_part()


def gcd_many(polys: Iterable[UniPoly]) -> UniPoly:
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise ValueError("gcd of no nonzero polynomials")
    g = polys[0].primitive_part()
    if g.degree() == 0:
        return UniPoly.const(1)
    for p in polys[1:]:
        g = gcd_primitive(g, p)
        if g.degree() == 0:
            break
    return g


def phi(n: int) -> UniPoly:
    """``1 + t + ... + t**(n-1)``."""
    if n < 1:
        raise ValueError(f"phi needs n >= 1, got {n}")
    return UniPoly([1] * n)


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> UniPoly:
    """The d-th cyclotomic polynomial, by exact division of ``t**d - 1``."""
    if d < 1:
        raise ValueError(f"cyclotomic polynomial index must be >= 1, got {d}")
    num = UniPoly.monomial(d) - 1
    for e in range(1, d):
        if d % e == 0:
            num = num.exact_div(cyclotomic(e))
    return num


def _divisors(n: int) -> list:
    from sympy import divisors

    return [int(x) for x in divisors(abs(n))]


def rational_roots(p: UniPoly) -> tuple:
    """Rational roots of ``p`` (as a frozenset of Fractions) and the residual.

    The residual is ``p`` with every found linear factor divided out as often
    as it divides, made primitive with positive leading coefficient.
    """
    if p.is_zero():
        raise ValueError("rational roots of the zero polynomial are undefined")
    roots = set()
    r = p.primitive_part()
    lead0 = 0
    while r.coeffs[lead0] == 0:
        lead0 += 1
    if lead0:
        roots.add(Fraction(0))
        r = UniPoly(r.coeffs[lead0:])
    if r.degree() >= 1:
        a0, an = r.coeffs[0], r.lc()
        cands = set()
        for num in _divisors(a0):
            for den in _divisors(an):
                if gcd(num, den) == 1:
                    cands.add(Fraction(num, den))
                    cands.add(Fraction(-num, den))
        for x in sorted(cands):
            if r.degree() < 1:
                break
            lin = UniPoly((-x.numerator, x.denominator))
            hit = False
            while r.degree() >= 1 and r(x) == 0:
                r = r.exact_div(lin)
                hit = True
            if hit:
                roots.add(x)
    return frozenset(roots), r.primitive_part()


def is_power_of_linear(p: UniPoly, t0) -> tuple:
    """Return ``(True, e)`` iff ``p == c * (t - t0)**e`` for a nonzero constant ``c``.

    On failure returns ``(False, e)`` where ``e`` is the multiplicity of ``t0``.
    """
    if p.is_zero():
        return False, 0
    t0 = Fraction(t0)
    lin = UniPoly((-t0.numerator, t0.denominator))
    r = p.primitive_part()
    e = 0
    while r.degree() >= 1 and r(t0) == 0:
        r = r.exact_div(lin)
        e += 1
    return r.degree() == 0, e


def bareiss_det(matrix: Sequence[Sequence]) -> UniPoly:
    """Determinant of a square matrix of UniPoly (or int) entries.

    Fraction-free Gaussian elimination: each step divides exactly by the
    previous pivot, so all entries stay in Z[t].
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return UniPoly.const(1)
    m = [[UniPoly._coerce(e) for e in row] for row in matrix]
    sign = 1
    prev = UniPoly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return UniPoly()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                try:
                    m[i][j] = num.exact_div(prev)
                except ArithmeticError as exc:
                    raise ArithmeticError("Bareiss elimination hit an inexact division") from exc
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def int_det(matrix: Sequence[Sequence[int]]) -> int:
    d = bareiss_det([[UniPoly.const(v) for v in row] for row in matrix])
    return d.coeffs[0] if d.coeffs else 0


def sylvester_matrix(f: Sequence, g: Sequence) -> list:
    """Sylvester matrix of two coefficient lists (lowest degree first).

    Entries are whatever the lists hold; missing cells are ``0``.
    """
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for k, c in enumerate(reversed(f)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for k, c in enumerate(reversed(g)):
            row[i + k] = c
        rows.append(row)
    return rows


class ParamUniPoly:
    """Polynomial in ``s`` whose coefficients are UniPoly in ``t``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[UniPoly]):
        cs = [UniPoly._coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def at(self, t0) -> list:
        """Coefficients in ``s`` after substituting ``t = t0``."""
        return [c(t0) for c in self.coeffs]

    def __repr__(self):
        return f"ParamUniPoly({[list(c.coeffs) for c in self.coeffs]})"


def resultant_param(g: UniPoly, h: ParamUniPoly) -> UniPoly:
    """``Res_s(g, h)`` as a polynomial in ``t``.

    ``g`` has integer coefficients in ``s``; ``h`` has coefficients in Z[t].
    The result vanishes at ``t0`` iff ``g`` and ``h(s, t0)`` share a root,
    because the leading coefficient of ``g`` is a nonzero integer.
    """
    if g.degree() < 1:
        raise ValueError("resultant undefined for constant g")
    if h.is_zero():
        return UniPoly()
    if h.degree() == 0:
        return h.coeffs[0] ** g.degree()
    gc = [UniPoly.const(c) for c in g.coeffs]
    return bareiss_det(sylvester_matrix(gc, list(h.coeffs)))
