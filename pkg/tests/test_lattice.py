from math import gcd

import pytest

from k3pencil.lattice import (
    GramMatrix2,
    ShiodaInput,
    ShiodaInputError,
    isotropic_primitive_classes,
    nef_constraint_filter,
    shioda_tate_rank,
)


def test_shioda_tate_examples():
    assert shioda_tate_rank(ShiodaInput(4, (2,))) == 1
    assert shioda_tate_rank(ShiodaInput(5, (2, 3))) == 0
    assert shioda_tate_rank(ShiodaInput(2)) == 0
    assert shioda_tate_rank(ShiodaInput(20, (3, 3, 2))) == 13


def test_shioda_tate_hypotheses():
    with pytest.raises(ShiodaInputError, match="section"):
        shioda_tate_rank(ShiodaInput(4, (2,), has_section=False))
    with pytest.raises(ShiodaInputError, match="trace"):
        shioda_tate_rank(ShiodaInput(4, (2,), trivial_trace=False))
    with pytest.raises(ShiodaInputError, match="inconsistent"):
        shioda_tate_rank(ShiodaInput(3, (3,)))
    with pytest.raises(ShiodaInputError):
        ShiodaInput(4, (1,))
    with pytest.raises(ShiodaInputError):
        ShiodaInput(0)


def test_no_isotropic_classes_for_example_lattice():
    g = GramMatrix2.from_rows([[2, 1], [1, -2]])
    assert g.determinant == -5
    assert isotropic_primitive_classes(g) == []


def test_hyperbolic_plane():
    g = GramMatrix2(0, 1, 0)
    assert isotropic_primitive_classes(g) == [(0, 1), (1, 0)]


def test_isotropic_classes_are_primitive_and_isotropic():
    for a in range(-4, 5):
        for b in range(-4, 5):
            for c in range(-4, 5):
                if a == b == c == 0:
                    continue
                g = GramMatrix2(a, b, c)
                found = isotropic_primitive_classes(g)
                for v in found:
                    assert g.norm(v) == 0
                brute = set()
                for x in range(-30, 31):
                    for y in range(-30, 31):
                        if (x, y) != (0, 0) and g.norm((x, y)) == 0:
                            if gcd(x, y) == 1 and (x > 0 or (x == 0 and y > 0)):
                                brute.add((x, y))
                assert brute <= set(found), (a, b, c)


def test_zero_form_rejected():
    with pytest.raises(ValueError):
        isotropic_primitive_classes(GramMatrix2(0, 0, 0))
    with pytest.raises(ValueError):
        GramMatrix2.from_rows([[1, 2], [3, 4]])


def test_nef_filter():
    g = GramMatrix2(0, 1, 0)
    classes = isotropic_primitive_classes(g)
    kept = nef_constraint_filter(g, classes, [((1, 1), 0)])
    assert kept == [(0, 1), (1, 0)]
    assert nef_constraint_filter(g, classes, [((1, 0), 1), ((0, 1), 0)]) == [(0, 1)]
