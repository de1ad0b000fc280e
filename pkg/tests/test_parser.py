import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perfectcolor.cli.formats import (
    FormatError,
    dump_config,
    dump_shape,
    parse_config,
    parse_matrix,
    parse_shape,
)
from perfectcolor.cli.parser import PolySyntaxError, parse_poly, tokenize
from perfectcolor.perfect import GridKind, TorusConfig, neighborhood
from perfectcolor.poly2 import LaurentPoly2, characteristic_poly

from conftest import random_poly

X, Y = LaurentPoly2.x(), LaurentPoly2.y()


def test_square_neighborhood_expression():
    assert parse_poly("x + y + x^-1 + y^-1 + 1") == characteristic_poly(neighborhood(GridKind.SQUARE, 1))


def test_product_expansion():
    assert parse_poly("(x+y)*(1+x*y)") == X + Y + X**2 * Y + X * Y**2


@pytest.mark.parametrize(
    "text,expected",
    [
        ("-x^2", -(X**2)),
        ("2x y", 2 * X * Y),
        ("3(x - 1)", 3 * X - 3),
        ("x^(-2)", X**-2),
        ("(x*y)^3", X**3 * Y**3),
        ("(2x)^2", 4 * X**2),
        ("x - -y", X + Y),
        ("  7  ", LaurentPoly2.constant(7)),
        ("x*y^-1*y", X),
        ("0", LaurentPoly2()),
    ],
)
def test_precedence_and_juxtaposition(text, expected):
    assert parse_poly(text) == expected


@pytest.mark.parametrize(
    "text,column",
    [
        ("x^(1,2)", 5),
        ("", 1),
        ("x +", 4),
        ("x ^ y", 5),
        ("(x + 1", 7),
        ("x $ y", 3),
        ("(x+1)^2", 1),
        ("(2x)^-1", 1),
        ("x^1.5", 4),
        ("x)", 2),
    ],
)
def test_syntax_errors_report_column(text, column):
    with pytest.raises(PolySyntaxError) as err:
        parse_poly(text)
    assert err.value.column == column


def test_non_monomial_power_message():
    with pytest.raises(PolySyntaxError, match="non-monomial"):
        parse_poly("(x+1)^2")


def test_tokens():
    kinds = [t.kind for t in tokenize("3x^-1")]
    assert kinds == ["INT", "VAR", "OP", "OP", "INT", "END"]


def test_round_trip_random():
    rng = random.Random(123)
    for _ in range(200):
        f = random_poly(rng, terms=rng.randint(0, 7), box=4, coeff=20)
        assert parse_poly(str(f)) == f


@settings(max_examples=200, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), st.integers(-99, 99), max_size=8))
def test_round_trip_property(terms):
    f = LaurentPoly2(terms)
    assert parse_poly(str(f)) == f


def test_shape_format():
    D = parse_shape("[[0, 0], [1, -2]]")
    assert D == {(0, 0), (1, -2)}
    assert parse_shape(dump_shape(D)) == D
    for bad in ["", "[]", "[[1]]", "[[1, 2.5]]", "[[0,0],[0,0]]", "{}"]:
        with pytest.raises(FormatError):
            parse_shape(bad)


def test_config_format_top_row_first():
    c = parse_config("# comment\n012\n\n210\n")
    assert c.n == 3 and c.height == 2
    assert c[0, 0] == 2 and c[0, 1] == 0
    assert dump_config(c) == "012\n210"
    assert parse_config("00\n00").n == 2
    assert parse_config("1a", 11)[1, 0] == 10
    for bad in ["", "01\n0", "0!", "#x"]:
        with pytest.raises(FormatError):
            parse_config(bad)
    with pytest.raises(FormatError):
        parse_config("012", 2)


def test_config_round_trip():
    rng = random.Random(2)
    for _ in range(50):
        n = rng.randint(1, 36)
        w, h = rng.randint(1, 5), rng.randint(1, 5)
        c = TorusConfig(w, h, [rng.randrange(n) for _ in range(w * h)], n)
        assert parse_config(dump_config(c), n) == c


def test_matrix_format():
    assert parse_matrix("[[1,4],[4,1]]") == [[1, 4], [4, 1]]
    for bad in ["[[1,2]]", "[]", "[[1,-1],[0,0]]", "[[1,2],[3]]", "nope"]:
        with pytest.raises(FormatError):
            parse_matrix(bad)
