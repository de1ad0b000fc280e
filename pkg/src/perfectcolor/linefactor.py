"""Line polynomial factors of bivariate Laurent polynomials.

A nonzero polynomial ``f`` splits along a primitive direction ``v`` into
fibers: the terms lying on one line ``u + Z v``.  Each fiber, read as a
polynomial in ``s = X**v`` and divided by its lowest power of ``s``, gives a
univariate *normal form*.  ``f`` has a line polynomial factor in direction
``v`` exactly when these normal forms share a nonconstant factor, and only
directions in which the support has outer edges on both sides can qualify.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .geometry import Direction, edge_pair_directions, is_primitive
from .poly2 import LaurentPoly2, characteristic_poly
from .unipoly import (
    ParamUniPoly,
    UniPoly,
    gcd_many,
    rational_roots,
    resultant_param,
)


def _bezout(p: int, q: int) -> tuple:
    """Integers ``(a, b)`` with ``a*p + b*q == 1`` for primitive ``(p, q)``."""
    old_r, r = p, q
    old_a, a = 1, 0
    old_b, b = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_a, a = a, old_a - k * a
        old_b, b = b, old_b - k * b
    if old_r < 0:
        old_a, old_b = -old_a, -old_b
    return old_a, old_b


@dataclass(frozen=True)
class Fiber:
    """One nonzero fiber: ``f restricted to the line = X**anchor * normal(X**v)``.

    ``line`` identifies the line (``cross(u, v)``, zero through the origin)
    and ``low`` is the position of ``anchor`` along it.
    """

    line: int
    anchor: tuple
    low: int
    normal: UniPoly


@dataclass(frozen=True)
class FiberSet:
    direction: Direction
    fibers: frozenset
    origin_fiber: Optional[tuple] = None  # (normal form, m0)
    parts: tuple = field(default=(), compare=False, repr=False)

    @property
    def non_origin(self) -> frozenset:
        """Normal forms of the fibers that miss the lattice origin."""
        return frozenset(fb.normal for fb in self.parts if fb.line != 0)


@dataclass(frozen=True)
class LineFactorReport:
    direction: Direction
    gcd_normal_form: UniPoly


def _check_direction(v) -> Direction:
    if not is_primitive(v):
        raise ValueError(f"direction {tuple(v)} is not a primitive vector")
    return Direction(*v)


def fiber_parts(f: LaurentPoly2, v) -> tuple:
    """All nonzero ``v``-fibers of ``f`` as :class:`Fiber` records, ordered by line."""
    if f.is_zero():
        raise ValueError("fibers of the zero polynomial are undefined")
    v = _check_direction(v)
    a, b = _bezout(v.p, v.q)
    lines: dict = {}
    for (i, j), c in f.items():
        line = i * v.q - j * v.p
        pos = a * i + b * j
        lines.setdefault(line, {})[pos] = c
    parts = []
    for line in sorted(lines):
        cells = lines[line]
        lo, hi = min(cells), max(cells)
        normal = UniPoly(cells.get(k, 0) for k in range(lo, hi + 1))
        # the point at position lo: pos(u) = lo and cross(u, v) = line
        anchor = (lo * v.p + line * b, lo * v.q - line * a)
        parts.append(Fiber(line, anchor, lo, normal))
    return tuple(parts)


def fiber_set(f: LaurentPoly2, v) -> FiberSet:
    """Deduplicated normal forms of the nonzero ``v``-fibers of ``f``."""
    parts = fiber_parts(f, v)
    origin = None
    for fb in parts:
        if fb.line == 0:
            origin = (fb.normal, -fb.low)
    return FiberSet(
        direction=Direction(*v),
        fibers=frozenset(fb.normal for fb in parts),
        origin_fiber=origin,
        parts=parts,
    )


def line_polynomial(v, normal: UniPoly) -> LaurentPoly2:
    """The line polynomial ``normal(X**v)`` anchored at exponent 0."""
    p, q = v
    return LaurentPoly2({(k * p, k * q): c for k, c in enumerate(normal.coeffs)})


def has_line_factor(f: LaurentPoly2, v) -> Optional[LineFactorReport]:
    fs = fiber_set(f, v)
    g = gcd_many(fs.fibers)
    if g.degree() >= 1:
        return LineFactorReport(fs.direction, g)
    return None


def line_factor_directions(f: LaurentPoly2) -> list:
    """Line polynomial factors of ``f``, one report per direction.

    An empty list means ``f`` has no line polynomial factors at all.
    """
    if f.is_zero():
        raise ValueError("line factors of the zero polynomial are undefined")
    reports = []
    for v in sorted(edge_pair_directions(f.support())):
        rep = has_line_factor(f, v)
        if rep is not None:
            reports.append(rep)
    return reports


def divide_line_factor(f: LaurentPoly2, v, normal: UniPoly) -> LaurentPoly2:
    """Cofactor ``q`` with ``f == line_polynomial(v, normal) * q``.

    Raises ``ArithmeticError`` if some fiber is not divisible by ``normal``
    over the integers.
    """
    v = _check_direction(v)
    q = LaurentPoly2()
    for fb in fiber_parts(f, v):
        quot = fb.normal.exact_div(normal)
        q = q + line_polynomial(v, quot).shift(*fb.anchor)
    return q


def covering_factor_directions(D, delta: int) -> list:
    return line_factor_directions(characteristic_poly(D) - delta)


# critical values of t for f_D - t


@dataclass(frozen=True)
class DirectionAnalysis:
    """Per-direction outcome of the critical-t analysis.

    ``kind`` is ``"none"`` (no t gives a factor), ``"set"`` (factors exactly at
    ``critical`` plus any irrational roots of ``residual``) or ``"all_t"`` (the
    shape lies on the line through the origin, so ``f_D - t`` is itself a line
    polynomial except at the values in ``critical``).
    """

    kind: str
    critical: frozenset = frozenset()
    residual: UniPoly = UniPoly((1,))
    resultant: Optional[UniPoly] = None

    @property
    def residual_degree(self) -> int:
        return max(self.residual.degree(), 0)


@dataclass(frozen=True)
class CriticalTReport:
    per_direction: dict
    kind: str  # NoneForAnyT | OnlyAt | Finite | Unresolved | AllT
    values: frozenset = frozenset()

    @property
    def t0(self) -> Optional[Fraction]:
        if self.kind == "OnlyAt":
            return next(iter(self.values))
        return None

    def describe(self) -> str:
        vals = ", ".join(_fmt_q(x) for x in sorted(self.values))
        if self.kind == "NoneForAnyT":
            return "no line polynomial factors for any t"
        if self.kind == "OnlyAt":
            return f"line polynomial factors only at t = {vals}"
        if self.kind == "Finite":
            return f"line polynomial factors only at t in {{{vals}}}"
        if self.kind == "AllT":
            return "line polynomial factors for all but finitely many t"
        return f"rational critical values {{{vals}}}; irrational critical values not excluded"


def _fmt_q(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _analyze_direction(f_D: LaurentPoly2, v: Direction) -> DirectionAnalysis:
    parts = fiber_parts(f_D, v)
    others = [fb.normal for fb in parts if fb.line != 0]
    origin = next((fb for fb in parts if fb.line == 0), None)
    c0 = f_D.coeff(0, 0)

    if not others:
        # f_D - t lives on one line: a line polynomial unless it is a monomial
        exceptional = {Fraction(t) for t in {0, c0} if len(f_D - t) == 1}
        return DirectionAnalysis("all_t", frozenset(exceptional))

    g = gcd_many(others)
    if g.degree() < 1:
        return DirectionAnalysis("none")

    if origin is None or (origin.normal.degree() == 0 and origin.low == 0):
        return DirectionAnalysis("set", frozenset({Fraction(c0)}))

    # origin fiber as a Laurent polynomial in s, minus t at s**0
    cells = {origin.low + k: c for k, c in enumerate(origin.normal.coeffs) if c}
    shift = max(0, -min(min(cells), 0))
    top = max(max(cells), 0) + shift
    coeffs = [UniPoly.const(cells.get(k - shift, 0)) for k in range(top + 1)]
    coeffs[shift] = coeffs[shift] - UniPoly.t()
    h = ParamUniPoly(coeffs)
    res = resultant_param(g, h)
    roots, residual = rational_roots(res)
    return DirectionAnalysis("set", roots, residual, res)


def critical_t(D) -> CriticalTReport:
    """Values of ``t`` for which ``f_D - t`` has a line polynomial factor."""
    f_D = characteristic_poly(D)
    supp = set(f_D.support())
    cands = edge_pair_directions(supp | {(0, 0)})
    rest = supp - {(0, 0)}
    if rest:
        cands |= edge_pair_directions(rest)
    per = {v: _analyze_direction(f_D, v) for v in sorted(cands)}

    if any(a.kind == "all_t" for a in per.values()):
        return CriticalTReport(per, "AllT")
    values = frozenset().union(*(a.critical for a in per.values()))
    unresolved = any(a.residual_degree > 0 for a in per.values())
    if unresolved:
        kind = "Unresolved"
    elif not values:
        kind = "NoneForAnyT"
    elif len(values) == 1:
        kind = "OnlyAt"
    else:
        kind = "Finite"
    return CriticalTReport(per, kind, values)
