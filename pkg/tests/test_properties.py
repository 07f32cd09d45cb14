"""Property suites with randomly generated inputs; all comparisons are exact."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from k3pencil.algebra import (
    UniPoly,
    power_sums_from_poly,
    poly_from_power_sums,
    resultant,
    squarefree_decompose,
    sylvester_resultant,
)
from k3pencil.counting import count_points, count_points_naive
from k3pencil.elliptic import WeierstrassCurve, add, multiply
from k3pencil.fibration import build_fibration, certify_saliently_ramified
from k3pencil.geometry import HomForm, Line, certify_smooth, intersection_profile
from k3pencil.suites import load_example

FAST = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])

small = st.integers(-4, 4)
fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def forms(degree):
    n = (degree + 1) * (degree + 2) // 2
    return st.lists(small, min_size=n, max_size=n).map(lambda cs: _form(degree, cs))


def _form(degree, cs):
    exps = [(i, j, degree - i - j) for i in range(degree + 1) for j in range(degree + 1 - i)]
    terms = {e: c for e, c in zip(exps, cs) if c}
    return HomForm(degree, terms or {(degree, 0, 0): 1})


@st.composite
def sextics(draw):
    """Generic sextics mixed with products that force repeated intersections."""
    shape = draw(st.sampled_from(["generic", "square", "conic", "line"]))
    if shape == "generic":
        return draw(forms(6))
    if shape == "square":
        c = draw(forms(3))
        return c * c
    if shape == "conic":
        q = draw(forms(2))
        return q * q * draw(forms(2))
    lin = draw(forms(1))
    return lin * lin * draw(forms(4))


lines = st.tuples(small, small, small).filter(lambda v: v != (0, 0, 0)).map(Line)
polys = st.lists(fracs, min_size=1, max_size=6).map(UniPoly).filter(lambda p: not p.is_zero())


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(sextics(), lines)
def test_bezout_and_parity(F, line):
    prof = intersection_profile(F, line)
    prof.check_invariants()
    if not prof.line_in_B:
        assert sum(p.degree * p.multiplicity for p in prof.parts) == 6
        assert prof.odd_count % 2 == 0


@FAST
@given(st.lists(st.tuples(polys, st.integers(1, 3)), min_size=1, max_size=3))
def test_yun_reconstruction(factors):
    f = UniPoly([1])
    for g, m in factors:
        f = f * g**m
    dec = squarefree_decompose(f)
    assert dec.expand() == f
    for (a, _), (b, _) in zip(dec.parts, dec.parts[1:]):
        assert a.degree >= 1 and b.degree >= 1


@FAST
@given(st.lists(fracs, min_size=1, max_size=8))
def test_newton_round_trip(roots):
    f = UniPoly.from_roots(roots)
    d = len(roots)
    sums = power_sums_from_poly(f, d)
    assert sums[0] == sum(roots)
    assert poly_from_power_sums(sums, d) == f


@FAST
@given(polys, polys)
def test_resultant_matches_sylvester_determinant(a, b):
    if a.degree == 0 and b.degree == 0:
        return
    assert resultant(a, b) == sylvester_resultant(a, b)


@settings(max_examples=8, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(st.integers(0, 4), min_size=28, max_size=28))
def test_count_matches_naive_oracle(cs):
    F = _form(6, cs)
    assert count_points(F, 5, 1, check_reduction=False).N == count_points_naive(F, 5, 1)


def test_count_matches_naive_oracle_quadratic(F1):
    assert count_points(F1, 5, 2).N == count_points_naive(F1, 5, 2)


def test_extension_modulus_independence(F1):
    # x^2 - 2 and x^2 + x + 2 over F_5; x^3 + x + 1 and x^3 + 2x + 1 over F_5
    for k, mods in ((2, ([3, 0, 1], [2, 1, 1])), (3, ([1, 1, 0, 1], [1, 2, 0, 1]))):
        counts = {count_points(F1, 5, k, modulus=m).N for m in mods}
        counts.add(count_points(F1, 5, k).N)
        assert len(counts) == 1


@FAST
@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6))
def test_group_law_associativity(i, j, k):
    # y^2 = x^3 + 17 has independent points (-2, 3) and (-1, 4)
    E = WeierstrassCurve(0, 17)
    P, Q = E.point(-2, 3), E.point(-1, 4)
    A, B, C = multiply(E, i, P), multiply(E, j, Q), multiply(E, k, add(E, P, Q))
    assert add(E, add(E, A, B), C) == add(E, A, add(E, B, C))


@settings(max_examples=10, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.fractions(min_value=-50, max_value=50, max_denominator=30).filter(lambda c: c != 0))
def test_certificates_invariant_under_rescaling(c):
    F = load_example(1)
    G = F.scale(c)
    assert intersection_profile(G, Line(0, 0, 1)).multiplicities == [2, 1, 1, 1, 1]
    a = certify_saliently_ramified(build_fibration(F, (0, 1, 1)), Line(0, 0, 1))
    b = certify_saliently_ramified(build_fibration(G, (0, 1, 1)), Line(0, 0, 1))
    assert a.saliently_ramified == b.saliently_ramified
    assert a.profile.multiplicities == b.profile.multiplicities
    assert a.residual.poly.monic() == b.residual.poly.monic()
    assert certify_smooth(G, max_prime=7).status == "smooth"
