"""Parser round trips and error reporting."""

import pytest

from redbounds.errors import ParseError
from redbounds.field import QQ
from redbounds.poly import PolyRing


@pytest.fixture
def ring():
    return PolyRing(QQ, ("x", "y", "z"))


def test_simple_terms(ring):
    p = ring.parse("x^2*y + 3*z - 1")
    assert str(p) == "x^2*y + 3*z - 1"


def test_explicit_multiplication_required(ring):
    with pytest.raises(ParseError):
        ring.parse("2x")


def test_rational_coefficients(ring):
    p = ring.parse("1/2*x - 2/3")
    q = p + p
    assert str(q) == "x - 4/3"


def test_parentheses_and_signs(ring):
    p = ring.parse("-(x - y)^2")
    q = ring.parse("-x^2 + 2*x*y - y^2")
    assert p == q


def test_unknown_variable(ring):
    with pytest.raises(ParseError):
        ring.parse("x + w")


def test_negative_exponent_rejected(ring):
    with pytest.raises(ParseError):
        ring.parse("x^-2")


def test_error_carries_position(ring):
    try:
        ring.parse("x + + y")
    except ParseError as exc:
        assert exc.position is not None
    else:
        raise AssertionError("expected a ParseError")


def test_roundtrip_through_str(ring):
    for text in ("x^4 + y^4", "x*y^3 - 7/5*z", "x^2*y^3*z^3 + x*z^2 - 1/2"):
        p = ring.parse(text)
        assert ring.parse(str(p)) == p
