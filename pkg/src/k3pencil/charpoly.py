"""Frobenius characteristic polynomials on H^2 of a K3 surface (weight 2)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Sequence

from .algebra import UniPoly, cyclotomic, euler_phi, poly_from_power_sums, power_sums_from_poly

H2_RANK = 22


class FunctionalEquationError(ValueError):
    pass


class InconsistentTraces(ValueError):
    pass


@dataclass(frozen=True)
class CharPolyData:
    """Integer polynomial whose roots all have absolute value p."""

    poly: UniPoly
    p: int
    sign: int = 1
    provenance: str = "assembled"
    factored_out: tuple[int, ...] = ()
    weight: int = 2

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if any(c.denominator != 1 for c in self.poly.coeffs):
            raise ValueError("characteristic polynomial must have integer coefficients")

    @property
    def degree(self) -> int:
        return self.poly.degree

    def coefficients(self) -> list[int]:
        return [int(c) for c in self.poly.coeffs]

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coefficients()]

    @classmethod
    def from_json(cls, coeffs: Sequence, p: int, sign: int = 1, provenance: str = "ingested") -> CharPolyData:
        return cls(UniPoly([int(c) for c in coeffs]), p, sign, provenance)

    def to_dict(self) -> dict:
        return {
            "coefficients": self.to_json(),
            "p": self.p,
            "sign": self.sign,
            "degree": self.degree,
            "provenance": self.provenance,
            "factored_out": list(self.factored_out),
        }


def load_phi20() -> CharPolyData:
    """Degree-20 factor at p = 19 of the smooth sextic shipped as example 1."""
    raw = json.loads(resources.files("k3pencil.data").joinpath("phi20_p19.json").read_text())
    return CharPolyData.from_json(raw["coefficients"], raw["p"], 1, "published")


def functional_equation_check(cp: CharPolyData) -> bool:
    """a_i == sign * p^(d - 2i) * a_(d-i) for i <= d/2 (index from the constant term)."""
    a = cp.coefficients()
    d = len(a) - 1
    if a[-1] != 1:
        return False
    for i in range(d // 2 + 1):
        if a[i] != cp.sign * cp.p ** (d - 2 * i) * a[d - i]:
            return False
    return True


def _require_functional_equation(cp: CharPolyData) -> None:
    if not functional_equation_check(cp):
        raise FunctionalEquationError(f"polynomial fails the functional equation with sign {cp.sign:+d} at p = {cp.p}")


def power_sum(cp: CharPolyData, k: int) -> int:
    return int(power_sums_from_poly(cp.poly, k)[k - 1])


def predicted_count(factors: Sequence[CharPolyData], algebraic: Sequence[int], p: int, k: int) -> int:
    """1 + p^(2k) + sum of k-th powers of all Frobenius eigenvalues on H^2."""
    deg = sum(f.degree for f in factors) + len(algebraic)
    if deg != H2_RANK:
        raise ValueError(f"factors and algebraic eigenvalues account for {deg} eigenvalues, expected {H2_RANK}")
    total = 1 + p ** (2 * k) + sum(lam**k for lam in algebraic)
    total += sum(power_sum(f, k) for f in factors)
    return total


def _reflect(top: list[Fraction], p: int, sign: int) -> list[Fraction] | None:
    """Full coefficient list (lowest first) of a degree-22 candidate from a_22..a_11."""
    d = H2_RANK
    a = [Fraction(0)] * (d + 1)
    for i in range(d // 2, d + 1):
        a[i] = top[i]
    if sign == -1 and a[d // 2] != 0:
        return None
    for i in range(d // 2):
        a[i] = sign * Fraction(p) ** (d - 2 * i) * a[d - i]
    return a


def assemble_charpoly(traces: Sequence[int], p: int, known_algebraic: Sequence[int] = ()) -> list[CharPolyData]:
    """Candidates for the degree-22 polynomial from the traces of Frob^1..Frob^11."""
    if len(traces) != H2_RANK // 2:
        raise ValueError(f"need exactly {H2_RANK // 2} traces, got {len(traces)}")
    half = poly_from_power_sums([Fraction(t) for t in traces], H2_RANK // 2)
    # half is the monic degree-11 polynomial with the right e_1..e_11; its
    # coefficients are those of T^22..T^11 of the full polynomial
    top = [Fraction(0)] * (H2_RANK + 1)
    for i, c in enumerate(half.coeffs):
        top[i + H2_RANK // 2] = c
    out = []
    for sign in (1, -1):
        full = _reflect(top, p, sign)
        if full is None or any(c.denominator != 1 for c in full):
            continue
        poly = UniPoly(full)
        removed = []
        for lam in known_algebraic:
            lin = UniPoly([-lam, 1])
            q, r = divmod(poly, lin)
            if r.is_zero():
                poly = q
                removed.append(lam)
        out.append(CharPolyData(poly, p, sign, "assembled", tuple(removed)))
    if not out:
        raise InconsistentTraces("no sign of the functional equation gives an integral polynomial")
    return out


def _normalized(cp: CharPolyData) -> UniPoly:
    """Q(T) = p^-d * P(pT): eigenvalues divided by p."""
    d = cp.degree
    return UniPoly([c * Fraction(cp.p) ** (i - d) for i, c in enumerate(cp.poly.coeffs)])


def cyclotomic_multiplicities(cp: CharPolyData) -> dict[int, int]:
    _require_functional_equation(cp)
    Q = _normalized(cp)
    d = cp.degree
    out = {}
    for n in range(1, 2 * d * d + 3):
        if euler_phi(n) > d:
            continue
        phi = cyclotomic(n)
        m = 0
        while Q.degree >= phi.degree:
            quo, rem = divmod(Q, phi)
            if not rem.is_zero():
                break
            Q, m = quo, m + 1
        if m:
            out[n] = m
    return out


def count_unit_root_eigenvalues(cp: CharPolyData) -> int:
    """Number of eigenvalues of the form p * (root of unity), with multiplicity."""
    return sum(m * euler_phi(n) for n, m in cyclotomic_multiplicities(cp).items())


def van_luijk_rho_bound(cp: CharPolyData) -> int:
    """Upper bound for the geometric Picard number from a good prime.

    The Tate-twisted eigenvalues that are roots of unity bound rho of the
    reduction, which in turn bounds rho over the algebraic closure of Q.
    """
    return count_unit_root_eigenvalues(cp)


def full_polynomial(factor: CharPolyData, algebraic: Sequence[int]) -> CharPolyData:
    poly = factor.poly
    for lam in algebraic:
        poly = poly * UniPoly([-lam, 1])
    return CharPolyData(poly, factor.p, factor.sign, factor.provenance)
