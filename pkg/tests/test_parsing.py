from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wstrass.exact import UniPoly
from wstrass.parsing import ParseError, format_poly, parse_form, parse_poly, parse_univariate
from wstrass.quartic import Form

coeffs = st.fractions(min_value=-50, max_value=50, max_denominator=9)


def test_examples():
    assert parse_univariate("x^4-1") == UniPoly([-1, 0, 0, 0, 1])
    x, y, z = (Form.var(i) for i in range(3))
    assert parse_form("x^3*y + y^3*z + z^3*x") == x**3 * y + y**3 * z + z**3 * x
    assert parse_univariate(" 3/4 * ( x + 1 ) ^ 2 ") == UniPoly([Fraction(3, 4), Fraction(3, 2), Fraction(3, 4)])
    assert parse_univariate("-x^2") == UniPoly([0, 0, -1])
    assert parse_univariate("x - -x") == UniPoly([0, 2])
    assert parse_univariate("(x^2)^3/2") == UniPoly([0, 0, 0, 0, 0, 0, Fraction(1, 2)])
    assert parse_univariate("x^0") == UniPoly([1])
    assert parse_poly("0", ["x"]) == {}


@pytest.mark.parametrize(
    "source, position",
    [("x^-1", 2), ("1/x", 1), ("x+", 2), ("2x", 1), ("w", 0), ("x^y", 2), ("(x", 2), ("", 0), ("x $ 1", 2), ("1/0", 1)],
)
def test_errors_report_position(source, position):
    with pytest.raises(ParseError) as err:
        parse_univariate(source)
    assert err.value.position == position


def test_wrong_variable_set():
    with pytest.raises(ParseError, match="unknown variable"):
        parse_form("x^4 + t^4")


@settings(max_examples=100, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 6)), coeffs, max_size=7))
def test_univariate_round_trip(p):
    p = {m: c for m, c in p.items() if c}
    assert parse_poly(format_poly(p, ["x"]), ["x"]) == p


@settings(max_examples=100, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)), coeffs, max_size=8))
def test_trivariate_round_trip(p):
    p = {m: c for m, c in p.items() if c}
    names = ["x", "y", "z"]
    assert parse_poly(format_poly(p, names), names) == p


def test_poly_and_form_printers_parse_back():
    f = UniPoly([Fraction(-1, 3), 0, 5, -1])
    assert parse_univariate(str(f)) == f
    F = parse_form("x^4 - 2/3*x*y^2*z + 7*z^4")
    assert parse_form(str(F)) == F
