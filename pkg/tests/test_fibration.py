import random
from fractions import Fraction

import pytest

from k3pencil.fibration import (
    COMPONENT,
    GENUS1,
    GENUS2,
    INTEGRAL_GENUS1,
    SMOOTH_GENUS1,
    SMOOTH_GENUS2,
    SPLIT_EVEN,
    DegenerateFibration,
    PreconditionError,
    UnsupportedSingularity,
    build_fibration,
    certify_saliently_ramified,
    classify_fiber,
    classify_line_pullback,
    odd_intersection_parameters,
    tangent_multisection_search,
    two_singularity_multisections,
)
from k3pencil.geometry import HomForm, Line, ProjPoint, singularity_type

# node at (0:0:1), z=0 meets B with profile [2,2,1,1] and every odd point on a singular fiber
NOT_SALIENT = HomForm.parse("x*y*((x^2+x*y+2*y^2)^2 + z*(x^3+2*y^3+3*x*y*z+z^3))")
# nodes at (1:0:0) and (0:1:1); x=0 passes through the second and is not salient
EXCLUDED = HomForm.parse(
    "y*z*((y-z)^2*(z-2*y)^2 + x*(x^3+(y-z)*(y^2+3*z^2)+x*y*z))"
)


def two_node_sextic() -> HomForm:
    rng = random.Random(1)
    terms = {}
    for i in range(7):
        for j in range(7 - i):
            if i >= 5 or j >= 5:
                continue
            c = rng.randint(-5, 5)
            terms[(i, j, 6 - i - j)] = c or 1
    return HomForm(6, terms)


def test_genus2_fibration_example1(F1):
    fib = build_fibration(F1, (0, 1, 1))
    assert fib.kind == GENUS2 and fib.ns_increment == 2
    assert fib.discriminant_degree == 30
    disc = fib.discriminant
    assert disc.degree == 30
    # t = infinity is the tritangent fiber x = 0, of multiplicity four
    assert disc.infinity_multiplicity == 4 and disc.poly.degree == 26
    assert fib.section_radicand == 16
    assert classify_fiber(fib, None).tag == SPLIT_EVEN


def test_discriminant_matches_members(F1):
    fib = build_fibration(F1, (0, 1, 1))
    for t in (Fraction(0), Fraction(3), Fraction(-2, 7)):
        direct = fib.member_form(t).discriminant()
        assert fib.discriminant_at(t) == direct
        tag = classify_fiber(fib, t).tag
        assert (tag == SMOOTH_GENUS2) == (direct != 0)


def test_genus1_fibration_example2(F2):
    fib = build_fibration(F2, (1, 0, 0))
    assert fib.kind == GENUS1 and fib.ns_increment == 0
    assert fib.discriminant.degree == 24
    for t in (Fraction(1), Fraction(-3, 2), Fraction(5)):
        smooth = classify_fiber(fib, t).tag == SMOOTH_GENUS1
        assert smooth == (fib.discriminant_at(t) != 0)


def test_base_point_restrictions(F2):
    cusp = HomForm.parse("(y^2*z - x^3)*z^3 + y^6 + x^5*y")
    assert singularity_type(cusp, (0, 0, 1)) == "other"
    with pytest.raises(UnsupportedSingularity):
        build_fibration(cusp, (0, 0, 1))


def test_degenerate_fibration():
    # a doubled cubic: every member meets B in three double points
    with pytest.raises(DegenerateFibration):
        build_fibration(HomForm.parse("(x^3+y^3+z^3)^2"), (1, 2, 5)).discriminant


def test_line_pullback_classes(F1, F2):
    assert classify_line_pullback(F1, Line(0, 0, 1)).tag == INTEGRAL_GENUS1
    assert classify_line_pullback(F1, Line(0, 0, 1)).genus == 1
    assert classify_line_pullback(F2, Line(1, 0, 0)).tag == SPLIT_EVEN
    F = HomForm.parse("(x+y+z)*(x^5+y^5+z^5)")
    assert classify_line_pullback(F, Line(1, 1, 1)).tag == COMPONENT


def test_salient_bisections(F1, F2, F3):
    cert = certify_saliently_ramified(build_fibration(F1, (0, 1, 1)), Line(0, 0, 1))
    assert cert.saliently_ramified and cert.residual.effective_degree >= 1
    assert cert.genus == 1
    assert certify_saliently_ramified(build_fibration(F2, (0, 0, 1)), Line(0, 0, 1)).saliently_ramified
    cert = certify_saliently_ramified(build_fibration(F3, (0, 1, 0)), Line(0, 11, 7))
    assert cert.saliently_ramified and cert.genus == 1


def test_odd_points_on_tritangent_member(F1):
    # (0:1:0) is an odd point of z=0 lying on the singular member x=0
    fib = build_fibration(F1, (0, 1, 1))
    cert = certify_saliently_ramified(fib, Line(0, 0, 1))
    assert cert.shared_with_discriminant.effective_degree >= 1
    assert odd_intersection_parameters(fib, Line(0, 0, 1)).infinity_multiplicity >= 1


def test_not_salient_construction():
    assert singularity_type(NOT_SALIENT, (0, 0, 1)) == "node"
    fib = build_fibration(NOT_SALIENT, (0, 0, 1))
    assert fib.kind == GENUS1 and fib.discriminant.degree == 24
    cert = certify_saliently_ramified(fib, Line(0, 0, 1))
    assert cert.profile.multiplicities == [2, 2, 1, 1]
    assert not cert.saliently_ramified


def test_line_through_base_rejected(F1):
    fib = build_fibration(F1, (0, 1, 1))
    with pytest.raises(PreconditionError):
        certify_saliently_ramified(fib, Line(1, 0, 0))


def test_tangent_search(F1, F3):
    found = tangent_multisection_search(build_fibration(F1, (0, 1, 1)), 1)
    assert any(c.line == Line(0, 0, 1) for c in found)
    assert all(c.saliently_ramified for c in found)
    lines = {c.line for c in tangent_multisection_search(build_fibration(F3, (0, 1, 0)), 1)}
    assert Line(0, 11, 7) in lines


def test_two_singularity_multisections():
    F = two_node_sextic()
    assert singularity_type(F, (1, 0, 0)) == "node"
    assert singularity_type(F, (0, 1, 0)) == "node"
    params = [1, 2, -1, Fraction(1, 2), None]
    out = two_singularity_multisections(F, (1, 0, 0), (0, 1, 0), params)
    assert [s for s, _ in out] == [1, 2, -1, Fraction(1, 2), None]
    assert all(c.saliently_ramified for _, c in out)
    with pytest.raises(PreconditionError, match="both singular points"):
        two_singularity_multisections(F, (1, 0, 0), (0, 1, 0), [0])


def test_two_singularity_excluded_line():
    Q, Q2 = (1, 0, 0), (0, 1, 1)
    assert singularity_type(EXCLUDED, Q) == "node"
    assert singularity_type(EXCLUDED, Q2) == "node"
    out = dict(two_singularity_multisections(EXCLUDED, Q, Q2, [None, 1, 2, 3], include_failures=True))
    assert out[None].line == Line(1, 0, 0)
    assert out[None].profile.multiplicities == [2, 2, 1, 1]
    assert not out[None].saliently_ramified
    assert all(out[s].saliently_ramified for s in (1, 2, 3))
    kept = two_singularity_multisections(EXCLUDED, Q, Q2, [None, 1, 2, 3])
    assert [s for s, _ in kept] == [1, 2, 3]


def test_two_singularity_preconditions(F1, F2):
    with pytest.raises(PreconditionError):
        two_singularity_multisections(F2, (1, 0, 0), (1, 0, 0), [1])
    with pytest.raises(PreconditionError):
        two_singularity_multisections(F2, (1, 0, 0), (0, 0, 1), [1])


def test_to_dict_is_plain(F1):
    import json

    fib = build_fibration(F1, (0, 1, 1))
    json.dumps(fib.to_dict())
    json.dumps(certify_saliently_ramified(fib, Line(0, 0, 1)).to_dict())
    assert ProjPoint(0, 1, 1) == fib.base
