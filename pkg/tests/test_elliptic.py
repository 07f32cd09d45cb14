from fractions import Fraction

import pytest

from k3pencil.algebra import UniPoly
from k3pencil.elliptic import (
    INFINITY,
    CurveError,
    ECPoint,
    QuarticModel,
    WeierstrassCurve,
    add,
    count_points_mod_p,
    is_isomorphic,
    is_torsion,
    jacobian_of_quartic,
    multiply,
    negate,
    quartic_invariants,
    quartic_point_search,
    quartic_rank_certificate,
    quartic_to_weierstrass,
    rank_ge_one_certificate,
    torsion_order,
)
from k3pencil.geometry import HomForm
from k3pencil.suites import EXAMPLE3_QUARTIC


def test_curve_basics():
    E = WeierstrassCurve(-1, 3)
    assert E.discriminant == -16 * (4 * -1 + 27 * 9)
    assert E.on_curve(E.point(2, 3))
    with pytest.raises(CurveError):
        E.point(2, 4)
    with pytest.raises(CurveError):
        WeierstrassCurve(-3, 2)
    assert E.lift_x(2) in (ECPoint(Fraction(2), Fraction(3)), ECPoint(Fraction(2), Fraction(-3)))
    assert E.lift_x(0) is None


def test_group_law():
    E = WeierstrassCurve(-1, 3)
    P = E.point(2, 3)
    Q = multiply(E, 2, P)
    R = multiply(E, 3, P)
    assert E.on_curve(Q) and E.on_curve(R)
    assert add(E, P, Q) == R
    assert add(E, P, negate(E, P)) == INFINITY
    assert add(E, add(E, P, Q), R) == add(E, P, add(E, Q, R))
    assert multiply(E, -2, P) == negate(E, Q)
    assert multiply(E, 0, P) == INFINITY


def test_planted_point_is_non_torsion():
    E = WeierstrassCurve(-1, 3)
    P = E.point(2, 3)
    assert not is_torsion(E, P)
    found = rank_ge_one_certificate(E, 5)
    assert found is not None and E.on_curve(found) and not is_torsion(E, found)


def test_torsion_points():
    E = WeierstrassCurve(0, 1)
    P = E.point(2, 3)
    assert torsion_order(E, P) == 6
    assert torsion_order(E, E.point(-1, 0)) == 2
    assert rank_ge_one_certificate(E, 30) is None
    for p in (5, 7, 11, 13, 17, 19, 23):
        assert count_points_mod_p(E, p) % 6 == 0
    with pytest.raises(CurveError):
        count_points_mod_p(E, 3)


def test_example1_curve():
    E = WeierstrassCurve(864, 81216)
    P = rank_ge_one_certificate(E)
    assert P == ECPoint(Fraction(-24), Fraction(216)) or P == ECPoint(Fraction(-24), Fraction(-216))
    assert not is_torsion(E, P)


def test_quartic_invariants_and_jacobian():
    q = QuarticModel(2, 1, 1, 1, 0)
    I, J = quartic_invariants(q)
    assert I == 12 * 2 * 0 - 3 * 1 * 1 + 1
    assert J == 72 * 2 * 1 * 0 + 9 * 1 * 1 * 1 - 27 * 2 * 1 - 27 * 0 * 1 - 2
    E = jacobian_of_quartic(q)
    assert (E.A, E.B) == (-27 * I, -27 * J)


def test_quartic_maps_to_example_curve():
    q = QuarticModel(2, 1, 1, 1, 0)
    curve, origin, qmap = quartic_to_weierstrass(q, (0, 0))
    ok, u = is_isomorphic(curve, WeierstrassCurve(864, 81216))
    assert ok and origin == INFINITY
    assert is_isomorphic(curve, jacobian_of_quartic(q))[0]
    for uu, ww in quartic_point_search(q, 6):
        assert curve.on_curve(qmap.map_point(uu, ww))


@pytest.mark.parametrize(
    "coeffs, point",
    [((4, 0, 0, 1, 1), (0, 1)), ((4, 0, 0, 1, 1), None), ((1, 2, -3, 4, 9), (0, 3)), ((3, 0, 2, -1, 0), (0, 0))],
)
def test_quartic_map_lands_on_curve(coeffs, point):
    q = QuarticModel(*coeffs)
    curve, _, qmap = quartic_to_weierstrass(q, point)
    assert is_isomorphic(curve, jacobian_of_quartic(q))[0]
    for uu, ww in quartic_point_search(q, 8):
        try:
            img = qmap.map_point(uu, ww)
        except CurveError:
            continue
        assert curve.on_curve(img)


def test_quartic_errors():
    with pytest.raises(CurveError):
        QuarticModel(1, 0, -2, 0, 1)  # (u^2 - 1)^2
    q = QuarticModel(2, 0, 0, 0, 3)
    with pytest.raises(CurveError):
        quartic_to_weierstrass(q)
    with pytest.raises(CurveError):
        quartic_to_weierstrass(q, (0, 1))


def test_quartic_round_trip():
    f = UniPoly([1, 1, 0, 0, 4])
    q = QuarticModel.from_poly(f)
    assert q.poly == f
    assert q(1) == 6


def test_example3_quartic_rank():
    f = HomForm.parse(EXAMPLE3_QUARTIC).restrict((1, 0, 0), (0, 1, 0)).poly
    cert = quartic_rank_certificate(QuarticModel.from_poly(f))
    assert cert.certified and cert.quartic_points
    E = cert.qmap.curve
    assert E.on_curve(cert.point) and not is_torsion(E, cert.point)
