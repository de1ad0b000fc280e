import itertools

import pytest

from perfectcolor.perfect import (
    AnyPerfect,
    Covering,
    GridKind,
    MatrixConstraint,
    TorusConfig,
    TorusTooSmall,
    block,
    extract_matrix,
    neighborhood,
    search,
    verify_covering,
)

SQ1 = neighborhood(GridKind.SQUARE, 1)


def _all_configs(w, h, n=2):
    for cs in itertools.product(range(n), repeat=w * h):
        yield TorusConfig(w, h, cs, n)


def test_stripes_on_3x3_match_oracle():
    found = search(SQ1, 2, 3, 3, Covering(1, 2))
    oracle = [c for c in _all_configs(3, 3) if verify_covering(c, SQ1, 1, 2)]
    assert found == oracle
    assert len(found) == 6


def test_results_are_lexicographic():
    found = search(block(2, 1), 2, 4, 2, Covering(1, 1))
    assert [c.colors for c in found] == sorted(c.colors for c in found)


@pytest.mark.parametrize("b,a", [(0, 1), (1, 1), (2, 1), (1, 3)])
def test_domino_coverings_match_oracle(b, a):
    D = {(0, 0), (1, 0), (0, 1)}
    found = search(D, 2, 3, 4, Covering(b, a))
    oracle = [c for c in _all_configs(3, 4) if verify_covering(c, D, b, a)]
    assert found == oracle


def test_any_perfect_matches_oracle():
    found = search(SQ1, 2, 3, 3, AnyPerfect())
    oracle = [c for c in _all_configs(3, 3) if extract_matrix(c, SQ1) is not None]
    assert found == oracle


def test_matrix_constraint_matches_oracle():
    B = [[3, 4], [2, 1]]
    found = search(SQ1, 2, 3, 3, MatrixConstraint(B))
    oracle = []
    for c in _all_configs(3, 3):
        m = extract_matrix(c, SQ1)
        if m is not None and all(j in m.absent or m.column(j) == (B[0][j], B[1][j]) for j in range(2)):
            oracle.append(c)
    assert found == oracle


def test_three_colors():
    D = block(2, 1)
    # each cell sees itself and the next color mod 3 on its right
    B = [[1, 0, 1], [1, 1, 0], [0, 1, 1]]
    found = search(D, 3, 6, 1, MatrixConstraint(B))
    assert [c.colors for c in found] == [(0, 1, 2, 0, 1, 2), (1, 2, 0, 1, 2, 0), (2, 0, 1, 2, 0, 1)]


def test_limit_truncates_prefix():
    full = search(SQ1, 2, 3, 3, AnyPerfect())
    assert search(SQ1, 2, 3, 3, AnyPerfect(), limit=3) == full[:3]


@pytest.mark.parametrize("threads", [2, 4])
def test_threads_match_serial(threads):
    for D, w, h, con, limit in [
        (SQ1, 3, 3, Covering(1, 2), None),
        (block(2, 2), 4, 4, Covering(1, 1), None),
        (SQ1, 3, 3, AnyPerfect(), 5),
    ]:
        assert search(D, 2, w, h, con, limit=limit, threads=threads) == search(D, 2, w, h, con, limit=limit)


def test_errors():
    with pytest.raises(ValueError, match="inconsistent"):
        search(SQ1, 2, 3, 3, MatrixConstraint([[1, 4], [4, 2]]))
    with pytest.raises(ValueError):
        search(SQ1, 3, 3, 3, Covering(1, 2))
    with pytest.raises(TorusTooSmall):
        search(SQ1, 2, 2, 2, Covering(5, 5))


def test_allow_wrap_counts_with_multiplicity():
    found = search(SQ1, 2, 2, 2, Covering(5, 5), allow_wrap=True)
    assert [c.colors for c in found] == [(1, 1, 1, 1)]
