import json

import pytest

from k3pencil.algebra import UniPoly
from k3pencil.counting import count_points
from k3pencil.charpoly import (
    CharPolyData,
    FunctionalEquationError,
    assemble_charpoly,
    count_unit_root_eigenvalues,
    cyclotomic_multiplicities,
    full_polynomial,
    functional_equation_check,
    load_phi20,
    power_sum,
    predicted_count,
    van_luijk_rho_bound,
)

T = UniPoly.x()


@pytest.fixture(scope="module")
def phi():
    return load_phi20()


def test_degree20_factor(phi):
    a = phi.coefficients()
    assert phi.degree == 20 and phi.p == 19
    assert a[20] == 1 and a[19] == -21
    assert a[0] == 19**20
    assert a[1] == -21 * 19**18
    assert functional_equation_check(phi)
    assert not functional_equation_check(CharPolyData(phi.poly, 19, -1))


def test_unit_root_counts(phi):
    full = full_polynomial(phi, [19, 19])
    assert full.degree == 22
    assert count_unit_root_eigenvalues(full) == 2
    assert count_unit_root_eigenvalues(phi) == 0
    assert van_luijk_rho_bound(full) == 2
    assert cyclotomic_multiplicities(full) == {1: 2}


def test_unit_roots_with_signs():
    cp = CharPolyData((T - 7) ** 2 * (T + 7) ** 2, 7)
    assert cyclotomic_multiplicities(cp) == {1: 2, 2: 2}
    assert count_unit_root_eigenvalues(cp) == 4
    # 7 * primitive cube roots of unity
    cp = CharPolyData(T**2 + 7 * T + 49, 7)
    assert count_unit_root_eigenvalues(cp) == 2


def test_functional_equation_required():
    with pytest.raises(FunctionalEquationError):
        count_unit_root_eigenvalues(CharPolyData(T**2 + T + 1, 5))


def test_predicted_counts_match_pointcounts(phi, F1):
    for k in (1, 2):
        assert predicted_count([phi], [19, 19], 19, k) == count_points(F1, 19, k).N
    assert predicted_count([phi], [19, 19], 19, 1) == 421
    with pytest.raises(ValueError, match="22"):
        predicted_count([phi], [19], 19, 1)


def test_assemble_round_trip(phi):
    full = full_polynomial(phi, [19, 19])
    traces = [power_sum(full, k) for k in range(1, 12)]
    cands = assemble_charpoly(traces, 19, known_algebraic=[19, 19])
    plus = [c for c in cands if c.sign == 1]
    assert len(plus) == 1
    assert plus[0].poly == phi.poly
    assert plus[0].factored_out == (19, 19)


def test_assemble_zero_traces_gives_both_signs():
    cands = assemble_charpoly([0] * 11, 5)
    assert sorted(c.sign for c in cands) == [-1, 1]
    for c in cands:
        assert functional_equation_check(c)
    with pytest.raises(ValueError):
        assemble_charpoly([0] * 10, 5)


def test_serialization(phi):
    d = phi.to_dict()
    json.dumps(d)
    again = CharPolyData.from_json(d["coefficients"], 19)
    assert again.poly == phi.poly
    with pytest.raises(ValueError):
        CharPolyData(UniPoly([1, "1/2", 1]), 5)
    with pytest.raises(ValueError):
        CharPolyData(T + 1, 5, sign=0)
