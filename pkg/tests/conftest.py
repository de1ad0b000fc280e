import random

import pytest

from perfectcolor.poly2 import LaurentPoly2


def random_poly(rng: random.Random, terms: int = 4, box: int = 3, coeff: int = 3) -> LaurentPoly2:
    return LaurentPoly2(
        {(rng.randint(-box, box), rng.randint(-box, box)): rng.randint(-coeff, coeff) for _ in range(terms)}
    )


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    from test_acceptance import CRITERIA

    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            name = rep.nodeid.rsplit("::", 1)[-1]
            if "test_acceptance" not in rep.nodeid or not name.startswith("test_criterion_"):
                continue
            n = int(name.split("_")[2])
            ok = outcome == "passed" and results.get(n, True)
            results[n] = ok
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if results[n] else 'FAIL'}  {CRITERIA[n]}")
