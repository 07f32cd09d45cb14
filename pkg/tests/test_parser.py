from fractions import Fraction

import pytest

from k3pencil.geometry import HomForm
from k3pencil.parser import ParseError, parse_polynomial


def test_two_term_cubic():
    deg, terms = parse_polynomial("x^2*y + 3*z^3", 3)
    assert deg == 3
    assert terms == {(2, 1, 0): 1, (0, 0, 3): 3}


def test_example_sextic_has_fourteen_terms(F1):
    assert F1.degree == 6 and len(F1.terms) == 14


def test_homogeneity_error_points_at_second_term():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x^2 + y^3")
    assert err.value.position == 6
    assert "degree 3" in str(err.value)


def test_declared_degree_mismatch():
    with pytest.raises(ParseError):
        parse_polynomial("x^2*y", 2)


@pytest.mark.parametrize(
    "text, fragment",
    [("x^2 + w^2", "unknown symbol"), ("3/0*x", "division by zero"), ("x/(y)", "non-constant"), ("(x+y", "expected ')'"), ("x^y", "exponent"), ("", "empty"), ("x - x", "identically zero"), ("x $ y", "unexpected character")],
)
def test_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_polynomial(text)
    assert fragment in str(err.value)


def test_fractions_powers_and_implicit_products():
    _, terms = parse_polynomial("7/73*(2x^4y^2 - x**3*z^3) + (x+y)^2*z^4/2")
    assert terms[(4, 2, 0)] == Fraction(14, 73)
    assert terms[(3, 0, 3)] == Fraction(-7, 73)
    assert terms[(1, 1, 4)] == 1
    assert terms[(2, 0, 4)] == Fraction(1, 2)


def test_print_parse_round_trip(F1, F2, F3):
    for F in (F1, F2, F3, HomForm.parse("-x^6 + 1/3*y^3*z^3 - 5*z^6")):
        assert HomForm.parse(F.to_str()) == F


def test_canonical_order_is_graded_lex():
    assert HomForm.parse("z^2 + y*z + x^2 - 2*x*y").to_str() == "x^2 - 2*x*y + y*z + z^2"
