from __future__ import annotations

import pytest

from monolc.combinat import minimalize
from monolc.linalg import QQ, Field
from monolc.parse import (
    ParseError,
    parse_box,
    parse_degree,
    parse_ideal_file,
    parse_ideal_text,
    parse_monomial,
)


def test_parse_basic_file():
    spec = parse_ideal_text("# two edges\nvars a b c d\nab, cd\n")
    assert spec.vars == ("a", "b", "c", "d")
    assert spec.ideal() == minimalize([(1, 1, 0, 0), (0, 0, 1, 1)])
    assert spec.field == QQ


def test_parse_field_and_gens_keyword():
    spec = parse_ideal_text("vars x1 x2 x3\nfield gf 7\ngens x1^2*x3, x2\nx1 x3\n")
    assert spec.field == Field(7)
    assert spec.gens == ((2, 0, 1), (0, 1, 0), (1, 0, 1))
    assert spec.ideal().gens == ((1, 0, 1), (0, 1, 0))


def test_monomial_forms():
    names = ["a", "b", "ab"]
    # names are matched greedily, longest first
    assert parse_monomial("ab", names) == (0, 0, 1)
    assert parse_monomial("a*b", names) == (1, 1, 0)
    assert parse_monomial("a^3 b", names) == (3, 1, 0)
    assert parse_monomial("aa", names) == (2, 0, 0)
    assert parse_monomial("1", names) == (0, 0, 0)


@pytest.mark.parametrize(
    "text, line, col, fragment",
    [
        ("vars a b\nab, ac\n", 2, 6, "unknown variable"),
        ("vars a b\na^0\n", 2, 3, "exponent must be at least 1"),
        ("vars a b\na^\n", 2, 2, "missing exponent"),
        ("vars a b\n*a\n", 2, 1, "unexpected '*'"),
        ("vars a b\na*\n", 2, 3, "ends with '*'"),
        ("vars a b\na,,b\n", 2, 3, "empty generator"),
        ("vars a a\na\n", 1, 8, "declared twice"),
        ("vars a 1b\na\n", 1, 8, "bad variable name"),
        ("ab\n", 1, 1, "must declare variables"),
        ("vars a\nvars b\n", 2, 1, "duplicate"),
        ("vars a\nfield gf 4\na\n", 2, 1, "not prime"),
    ],
)
def test_parse_errors_have_positions(text, line, col, fragment):
    with pytest.raises(ParseError) as exc:
        parse_ideal_text(text, "f.ideal")
    err = exc.value
    assert (err.line, err.col) == (line, col)
    assert fragment in err.message
    assert str(err).startswith(f"f.ideal:{line}:{col}: ")


def test_parse_errors_without_position():
    with pytest.raises(ParseError, match="no generators"):
        parse_ideal_text("vars a b\n")
    with pytest.raises(ParseError, match="missing 'vars'"):
        parse_ideal_text("# nothing\n")
    with pytest.raises(ParseError, match="cannot read"):
        parse_ideal_file("/nonexistent/file.ideal")


def test_canonical_text_and_digest():
    a = parse_ideal_text("vars a b c\nbc, a\n")
    b = parse_ideal_text("# same ideal\nvars a b c\ngens a\na*b\nb*c\n")
    assert a.canonical_text() == "vars a b c\nfield rational\na, bc\n"
    assert a.digest() == b.digest()
    c = parse_ideal_text("vars a b c\nfield gf 2\nbc, a\n")
    assert c.digest() != a.digest()


def test_degrees_and_boxes():
    assert parse_degree("-1, 0,2", 3) == (-1, 0, 2)
    with pytest.raises(ParseError):
        parse_degree("1,2", 3)
    with pytest.raises(ParseError):
        parse_degree("1,x,2", 3)
    assert parse_box("-1..2", 2) == ((-1, -1), (2, 2))
    assert parse_box("-1,0..1,1", 2) == ((-1, 0), (1, 1))
    with pytest.raises(ParseError):
        parse_box("-1:2", 2)
    with pytest.raises(ParseError):
        parse_box("a..2", 2)
