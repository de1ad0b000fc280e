"""Forced-periodicity verdicts for coverings, perfect colorings and abelian complexity."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from ..geometry import Direction, edge_pair_directions, is_convex, normalize
from ..linefactor import critical_t, fiber_parts, line_factor_directions
from ..poly2 import characteristic_poly
from ..unipoly import cyclotomic, gcd_primitive, int_det


class VerdictKind(enum.Enum):
    FORCED_TWO_PERIODIC = "forced-two-periodic"
    FORCED_DIRECTION = "forced-direction"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    direction: Optional[Direction] = None
    reason: str = ""
    evidence: dict = field(default_factory=dict, compare=False)

    @property
    def label(self) -> str:
        return self.kind.value


def _from_factor_directions(reports, evidence: dict) -> Verdict:
    dirs = sorted({normalize(r.direction) for r in reports})
    evidence = dict(evidence, factors=list(reports))
    if not dirs:
        return Verdict(VerdictKind.FORCED_TWO_PERIODIC, reason="no line polynomial factors", evidence=evidence)
    if len(dirs) == 1:
        return Verdict(
            VerdictKind.FORCED_DIRECTION,
            dirs[0],
            reason=f"line polynomial factors only in direction {tuple(dirs[0])}",
            evidence=evidence,
        )
    listed = ", ".join(str(tuple(d)) for d in dirs)
    return Verdict(
        VerdictKind.INCONCLUSIVE,
        reason=f"line polynomial factors in directions {listed}",
        evidence=evidence,
    )


def verdict_covering(D, b: int, a: int) -> Verdict:
    """Periodicity forced on every ``(D, b, a)``-covering by ``f_D - (b - a)``."""
    g = characteristic_poly(D) - (b - a)
    if g.is_zero():
        return Verdict(VerdictKind.INCONCLUSIVE, reason="the periodizer f_D - (b-a) is zero")
    return _from_factor_directions(line_factor_directions(g), {"delta": b - a})


def _divisors(n: int) -> list:
    return [e for e in range(1, n + 1) if n % e == 0]


def verdict_covering_convex(D, delta: int) -> Verdict:
    """Cyclotomic criterion for convex shapes.

    Along each candidate direction every fiber of ``f_D`` is ``1 + ... + s**(n-1)``.
    With ``delta == 0`` a common factor exists iff the fiber lengths share a
    divisor ``d > 1``.  Otherwise the fibers off the origin share exactly the
    cyclotomic factors ``Phi_e`` with ``1 < e | d``, and the direction carries a
    factor iff one of them also divides the origin fiber of ``f_D - delta``.
    """
    if not is_convex(D):
        raise ValueError("convex criterion requires convex shape")
    g = characteristic_poly(D) - delta
    if g.is_zero():
        return Verdict(VerdictKind.INCONCLUSIVE, reason="the periodizer f_D - delta is zero")
    failing = []
    census = {}
    for v in sorted(edge_pair_directions(g.support())):
        parts = fiber_parts(g, v)
        if delta == 0:
            lengths = [len(fb.normal.coeffs) for fb in parts]
            d_v = 0
            for n in lengths:
                d_v = gcd(d_v, n)
            bad = d_v > 1
            census[v] = {"d": d_v}
        else:
            lengths = [len(fb.normal.coeffs) for fb in parts if fb.line != 0]
            origin = next((fb.normal for fb in parts if fb.line == 0), None)
            d_v = 0
            for n in lengths:
                d_v = gcd(d_v, n)
            if d_v == 0:
                # no fibers off the origin line: g is a line polynomial or a monomial
                bad = origin is not None and origin.degree() >= 1
                shared = []
            elif origin is None:
                bad = d_v > 1
                shared = [e for e in _divisors(d_v) if e > 1]
            else:
                shared = [
                    e for e in _divisors(d_v)
                    if e > 1 and gcd_primitive(cyclotomic(e), origin).degree() >= 1
                ]
                bad = bool(shared)
            census[v] = {"d": d_v, "shared_cyclotomic": shared}
        if bad:
            failing.append(v)
    evidence = {"delta": delta, "census": census}
    if not failing:
        return Verdict(VerdictKind.FORCED_TWO_PERIODIC, reason="cyclotomic criterion holds in every direction", evidence=evidence)
    if len(failing) == 1:
        return Verdict(
            VerdictKind.FORCED_DIRECTION,
            failing[0],
            reason=f"cyclotomic criterion fails only in direction {tuple(failing[0])}",
            evidence=evidence,
        )
    listed = ", ".join(str(tuple(d)) for d in failing)
    return Verdict(VerdictKind.INCONCLUSIVE, reason=f"cyclotomic criterion fails in directions {listed}", evidence=evidence)


def _matrix_rows(B) -> list:
    entries = getattr(B, "entries", B)
    return [list(r) for r in entries]


def det_shifted(B, t0) -> Fraction:
    """``det(B - t0*I)`` computed exactly with fraction-free elimination."""
    t0 = Fraction(t0)
    p, q = t0.numerator, t0.denominator
    rows = _matrix_rows(B)
    n = len(rows)
    scaled = [[q * rows[i][j] - (p if i == j else 0) for j in range(n)] for i in range(n)]
    return Fraction(int_det(scaled), q ** n)


def verdict_coloring(D, B) -> Verdict:
    """Periodicity forced on every ``D``-perfect coloring with matrix ``B``."""
    rows = _matrix_rows(B)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("coloring matrix must be square")
    if any(x is None or x < 0 for r in rows for x in r):
        raise ValueError("coloring matrix entries must be non-negative integers")
    size = len(set(D))
    if any(sum(rows[i][j] for i in range(n)) != size for j in range(n)):
        raise ValueError("matrix inconsistent with |D|")
    report = critical_t(D)
    evidence = {"critical_t": report}
    if report.kind == "NoneForAnyT":
        return Verdict(VerdictKind.FORCED_TWO_PERIODIC, reason="f_D - t has no line polynomial factors for any t", evidence=evidence)
    if report.kind == "OnlyAt":
        t0 = report.t0
        det = det_shifted(rows, t0)
        evidence["t0"] = t0
        evidence["det"] = det
        if det != 0:
            return Verdict(VerdictKind.FORCED_TWO_PERIODIC, reason=f"det(B - {t0}I) = {det} is nonzero", evidence=evidence)
        return Verdict(VerdictKind.INCONCLUSIVE, reason=f"det(B - {t0}I) = 0", evidence=evidence)
    return Verdict(VerdictKind.INCONCLUSIVE, reason=report.describe(), evidence=evidence)


def verdict_abelian(D) -> Verdict:
    """Periodicity forced on configurations of abelian complexity 1 for ``D``."""
    return _from_factor_directions(line_factor_directions(characteristic_poly(D)), {})
