from fractions import Fraction

import pytest
import sympy

from k3pencil.algebra import (
    UniPoly,
    binary_discriminant,
    cyclotomic,
    discriminant,
    fraction_sqrt,
    interpolate,
    poly_from_power_sums,
    poly_gcd,
    power_sums_from_poly,
    rational_roots,
    resultant,
    squarefree_decompose,
    sylvester_resultant,
)

t = UniPoly.x()
T = sympy.Symbol("t")


def to_sympy(f: UniPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * T**i for i, c in enumerate(f.coeffs))


def test_gcd_examples():
    assert poly_gcd(t**2 - 1, t - 1) == t - 1
    assert poly_gcd(t**2 + 1, t - 3) == UniPoly([1])
    assert poly_gcd(UniPoly(), UniPoly()).is_zero()
    assert poly_gcd(UniPoly(), 3 * t + 6) == t + 2


def test_gcd_of_products():
    f = t**2 + t + 1
    g = t**3 - 2
    h = t - 7
    assert poly_gcd(f * g, f * h) == f


def test_gcd_matches_sympy_on_high_degree_gaps():
    a = (t**5 + 3 * t + 1) * (t**2 - 2) * (t - 5)
    b = (t**2 - 2) * (t**7 - t + 11)
    expected = sympy.Poly(sympy.gcd(to_sympy(a), to_sympy(b)), T).monic()
    assert to_sympy(poly_gcd(a, b)) == expected.as_expr()


def test_squarefree_examples():
    dec = squarefree_decompose(t**2 * (t - 1))
    assert [(f, m) for f, m in dec.parts] == [(t - 1, 1), (t, 2)]
    assert dec.unit == 1
    f = t**6 + t + 1
    assert [(g, m) for g, m in squarefree_decompose(f).parts] == [(f, 1)]


def test_squarefree_normalization_and_unit():
    f = (2 * t - 1) ** 3 * (t + Fraction(1, 3)) * Fraction(5, 7)
    dec = squarefree_decompose(f)
    assert dec.expand() == f
    for g, _ in dec.parts:
        assert all(c.denominator == 1 for c in g.coeffs) and g.lc > 0


def test_squarefree_rejects_zero():
    with pytest.raises(ValueError):
        squarefree_decompose(UniPoly())


def test_example1_tangent_line_restriction():
    # x(2x^3+x^2+x+1) at y = 1, with the double root sitting at infinity
    f = t * (2 * t**3 + t**2 + t + 1)
    dec = squarefree_decompose(f)
    assert dec.multiplicities == [1]
    assert sum(g.degree for g, _ in dec.parts) == 4
    assert binary_discriminant(f, 6) == 0


def test_resultant_examples():
    assert resultant(t - 2, t**2 - 4) == 0
    assert resultant(t, t - 1) == -1
    assert sylvester_resultant(t, t - 1) == -1


def test_resultant_sign_convention_against_sympy():
    a = 3 * t**3 - t + 2
    b = t**2 + 5 * t - 1
    assert resultant(a, b) == sympy.resultant(to_sympy(a), to_sympy(b), T)
    assert resultant(b, a) == sympy.resultant(to_sympy(b), to_sympy(a), T)


def test_resultant_rejects_zero():
    with pytest.raises(ValueError):
        resultant(UniPoly(), t)


def test_discriminant_examples():
    assert discriminant(t**2 + 1) == -4
    assert discriminant(t**2 - 2 * t + 1) == 0
    for A in range(-4, 5):
        for B in (-3, 1, 7):
            assert discriminant(t**3 + A * t + B) == -4 * A**3 - 27 * B**2
    with pytest.raises(ValueError):
        discriminant(UniPoly([5]))


def test_resultant_with_derivative_is_discriminant():
    for f in (2 * t**3 - t + 5, t**3 + 7 * t**2 - 1, -3 * t**3 + t**2 + t):
        n = f.degree
        assert resultant(f, f.derivative()) == (-1) ** (n * (n - 1) // 2) * f.lc * discriminant(f)


def test_binary_discriminant_counts_infinity():
    f = t**2 + 1
    assert binary_discriminant(f, 2) == discriminant(f)
    assert binary_discriminant(f, 3) == discriminant(f)
    assert binary_discriminant(f, 4) == 0


def test_rational_roots():
    assert sorted(rational_roots(2 * t**2 - t - 1)) == [Fraction(-1, 2), 1]
    assert rational_roots(t**2 + 1) == []
    assert rational_roots(2 * t**3 + t**2 + t + 1) == []
    assert rational_roots(t**3) == [0]


def test_cyclotomic():
    assert cyclotomic(1) == t - 1
    assert cyclotomic(4) == t**2 + 1
    assert cyclotomic(12) == t**4 - t**2 + 1
    for n in (9, 15, 20, 30):
        assert to_sympy(cyclotomic(n)) == sympy.cyclotomic_poly(n, T)


def test_power_sums():
    f = (t - 19) ** 2
    assert power_sums_from_poly(f, 3) == [38, 722, 13718]
    assert poly_from_power_sums([38, 722], 2) == f
    with pytest.raises(ValueError):
        power_sums_from_poly(2 * t - 1, 1)


def test_interpolate_and_sqrt():
    f = 3 * t**4 - t + Fraction(1, 2)
    xs = list(range(5))
    assert interpolate(xs, [f(x) for x in xs]) == f
    assert fraction_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert fraction_sqrt(Fraction(63, 73)) is None
    assert fraction_sqrt(Fraction(-1)) is None
