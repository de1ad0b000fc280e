"""Acceptance gate: one test per criterion, each reported as a PASS/FAIL line.

Run under pytest (the lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import itertools
import json
import random
import subprocess
import sys
import time
from fractions import Fraction
from math import gcd
from pathlib import Path

import pytest

from perfectcolor.geometry import Direction, edge_pair_directions, normalize
from perfectcolor.linefactor import critical_t, fiber_set, line_factor_directions, line_polynomial
from perfectcolor.perfect import (
    Covering,
    GridKind,
    TorusConfig,
    VerdictKind,
    abelian_complexity,
    block,
    covering_identity_holds,
    extract_matrix,
    neighborhood,
    pattern_complexity,
    search,
    verdict_coloring,
    verdict_covering,
    verdict_covering_convex,
    verify_covering,
)
from perfectcolor.poly2 import LaurentPoly2, characteristic_poly
from perfectcolor.unipoly import UniPoly, cyclotomic, gcd_primitive, phi

CRITERIA = {
    1: "grid critical sets",
    2: "parametric analysis cross-validation",
    3: "worked fiber example",
    4: "planted and factor-free polynomials",
    5: "cyclotomic and phi identities",
    6: "convex criterion agreement",
    7: "matrix verdicts",
    8: "search vs exhaustive oracle",
    9: "verification consistency",
    10: "abelian complexity",
    11: "parallel determinism",
}

X, Y = LaurentPoly2.x(), LaurentPoly2.y()
T = UniPoly.t()
SQ1 = neighborhood(GridKind.SQUARE, 1)
GRIDS = [(k, r) for k in GridKind for r in (1, 2, 3)]


def checkerboard(w=4, h=4):
    return TorusConfig.from_function(w, h, lambda x, y: (x + y) % 2)


def test_criterion_01_grid_critical_sets():
    start = time.perf_counter()
    got = {(k, r): critical_t(neighborhood(k, r)) for k, r in GRIDS}
    elapsed = time.perf_counter() - start
    expect = {
        (GridKind.SQUARE, 1): ("OnlyAt", {1}),
        (GridKind.TRIANGULAR, 1): ("OnlyAt", {-1}),
        (GridKind.KING, 1): ("OnlyAt", {0}),
        (GridKind.KING, 2): ("OnlyAt", {0}),
        (GridKind.KING, 3): ("OnlyAt", {0}),
        (GridKind.SQUARE, 2): ("NoneForAnyT", set()),
        (GridKind.SQUARE, 3): ("NoneForAnyT", set()),
        (GridKind.TRIANGULAR, 2): ("NoneForAnyT", set()),
        (GridKind.TRIANGULAR, 3): ("NoneForAnyT", set()),
    }
    for key, (kind, values) in expect.items():
        assert got[key].kind == kind, key
        assert got[key].values == {Fraction(v) for v in values}, key
    assert elapsed < 5.0


def test_criterion_02_parametric_cross_validation():
    for k, r in GRIDS:
        D = neighborhood(k, r)
        f = characteristic_poly(D)
        crit = critical_t(D).values
        for t in range(-6, 7):
            assert bool(line_factor_directions(f - t)) == (Fraction(t) in crit), (k, r, t)


def test_criterion_03_worked_fiber_example():
    f = 3 * X + Y + X * Y**2 + X * Y + X**3 * Y**3 + X**4 * Y**4
    assert fiber_set(f, (1, 1)).fibers == {UniPoly([3]), T + 1, T**3 + T**2 + 1}


def _random_direction(rng):
    while True:
        p, q = rng.randint(-3, 3), rng.randint(-3, 3)
        if (p, q) != (0, 0) and gcd(p, q) == 1:
            return Direction(p, q)


def _lone_point_on_some_line(support, v):
    lines = {}
    for i, j in support:
        lines.setdefault(i * v[1] - j * v[0], []).append((i, j))
    return any(len(pts) == 1 for pts in lines.values())


def test_criterion_04_planted_and_factor_free():
    rng = random.Random(4)
    for _ in range(200):
        v = _random_direction(rng)
        deg = rng.randint(1, 4)
        normal = UniPoly(
            [rng.choice([-2, -1, 1, 2])] + [rng.randint(-2, 2) for _ in range(deg - 1)] + [rng.choice([-2, -1, 1, 2])]
        )
        ell = line_polynomial(v, normal)
        g = LaurentPoly2()
        while g.is_zero():
            g = LaurentPoly2({(rng.randint(0, 4), rng.randint(0, 4)): rng.randint(-3, 3) for _ in range(rng.randint(1, 8))})
        reports = {r.direction: r.gcd_normal_form for r in line_factor_directions(ell * g)}
        w = normalize(v)
        planted = normal if w == v else UniPoly(reversed(normal.coeffs))
        assert w in reports
        assert planted.primitive_part().divides(reports[w])

    made = 0
    while made < 100:
        f = LaurentPoly2({(rng.randint(-3, 3), rng.randint(-3, 3)): rng.randint(-3, 3) for _ in range(rng.randint(2, 8))})
        if f.is_zero():
            continue
        # a term far from the box sits alone on its line in every small direction
        f = f + LaurentPoly2.monomial(rng.choice([11, 13]), rng.choice([17, 19]), rng.choice([-1, 1]))
        if not all(_lone_point_on_some_line(f.support(), v) for v in edge_pair_directions(f.support())):
            continue
        made += 1
        assert line_factor_directions(f) == []


def test_criterion_05_cyclotomic_identities():
    for m in range(1, 13):
        for n in range(1, 13):
            assert (gcd_primitive(phi(m), phi(n)).degree() >= 1) == (gcd(m, n) > 1)
    for d in range(1, 31):
        prod = UniPoly.const(1)
        for e in range(1, d + 1):
            if d % e == 0:
                prod = prod * cyclotomic(e)
        assert prod == T**d - 1


def test_criterion_06_convex_criterion_agreement():
    for k in GridKind:
        for r in range(0, 4):
            D = neighborhood(k, r)
            for delta in range(-5, 6):
                a = verdict_covering(D, delta, 0)
                b = verdict_covering_convex(D, delta)
                assert (a.kind, a.direction) == (b.kind, b.direction), (k, r, delta)


def test_criterion_07_matrix_verdicts():
    v = verdict_coloring(SQ1, [[1, 4], [4, 1]])
    assert v.kind is VerdictKind.FORCED_TWO_PERIODIC
    assert v.evidence["det"] == -16
    # counting oracle for the checkerboard
    c = checkerboard()
    counts = {}
    for x in range(4):
        for y in range(4):
            ones = sum((x + dx + y + dy) % 2 for dx, dy in SQ1)
            counts.setdefault((x + y) % 2, set()).add((5 - ones, ones))
    assert counts == {0: {(1, 4)}, 1: {(4, 1)}}
    assert extract_matrix(c, SQ1).as_lists() == [[1, 4], [4, 1]]


def _oracle(D, w, h, b, a):
    return [
        TorusConfig(w, h, cs)
        for cs in itertools.product((0, 1), repeat=w * h)
        if verify_covering(TorusConfig(w, h, cs), D, b, a)
    ]


def test_criterion_08_search_vs_oracle():
    assert set(search(SQ1, 2, 3, 3, Covering(1, 2))) == set(_oracle(SQ1, 3, 3, 1, 2))
    B2 = block(2, 2)
    assert set(search(B2, 2, 4, 4, Covering(1, 1))) == set(_oracle(B2, 4, 4, 1, 1))


def _direct(c, D, b, a):
    for y in range(c.height):
        for x in range(c.width):
            ones = sum(c[x + dx, y + dy] for dx, dy in D)
            if ones != (b if c[x, y] else a):
                return False
    return True


def test_criterion_09_verification_consistency():
    rng = random.Random(9)
    for _ in range(500):
        D = neighborhood(rng.choice(list(GridKind)), 1)
        w, h = rng.randint(3, 6), rng.randint(3, 6)
        c = TorusConfig(w, h, [rng.randint(0, 1) for _ in range(w * h)])
        b, a = rng.randint(0, len(D)), rng.randint(0, len(D))
        assert _direct(c, D, b, a) == covering_identity_holds(c, D, b, a)
    outputs = [(SQ1, 1, 2, c) for c in search(SQ1, 2, 3, 3, Covering(1, 2))]
    outputs += [(block(2, 2), 1, 1, c) for c in search(block(2, 2), 2, 4, 4, Covering(1, 1))]
    for D, b, a, c in outputs:
        assert _direct(c, D, b, a) and covering_identity_holds(c, D, b, a)


def test_criterion_10_abelian_complexity():
    c = checkerboard()
    assert abelian_complexity(c, block(2, 2)) == 1
    assert abelian_complexity(c, block(3, 3)) == 2
    rng = random.Random(10)
    for _ in range(100):
        w, h = rng.randint(3, 6), rng.randint(3, 6)
        c = TorusConfig(w, h, [rng.randint(0, 2) for _ in range(w * h)], 3)
        D = block(rng.randint(1, 3), rng.randint(1, 3))
        assert abelian_complexity(c, D) <= pattern_complexity(c, D)


def _cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "perfectcolor", *argv], capture_output=True)
    return proc.returncode, proc.stdout


def test_criterion_11_parallel_determinism(tmp_path):
    shape = tmp_path / "block.json"
    shape.write_text(json.dumps([[0, 0], [1, 0], [0, 1], [1, 1]]))
    instances = [
        ["search", "--grid", "square", "--radius", "1", "--covering", "1", "2", "--torus", "3x3"],
        ["search", "--shape", str(shape), "--covering", "1", "1", "--torus", "4x4"],
    ]
    for args in instances:
        for extra in ([], ["--json"]):
            serial = _cli(*extra, *args)
            threaded = _cli(*extra, "--threads", "4", *args)
            assert serial[0] == 0
            assert serial == threaded


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
