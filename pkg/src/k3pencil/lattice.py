"""Shioda-Tate rank arithmetic and isotropic vectors of rank-2 lattices."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence


class ShiodaInputError(ValueError):
    pass


@dataclass(frozen=True)
class ShiodaInput:
    """Neron-Severi rank and total component counts of the reducible fibers."""

    rho: int
    fiber_component_counts: tuple[int, ...] = field(default_factory=tuple)
    has_section: bool = True
    trivial_trace: bool = True

    def __post_init__(self):
        object.__setattr__(self, "fiber_component_counts", tuple(self.fiber_component_counts))
        if self.rho < 1:
            raise ShiodaInputError("rho must be positive")
        bad = [m for m in self.fiber_component_counts if m < 2]
        if bad:
            raise ShiodaInputError(f"reducible fibers have at least 2 components, got {bad}")


def shioda_tate_rank(data: ShiodaInput) -> int:
    """Generic Mordell-Weil rank: rho - 2 - sum(m_s - 1)."""
    if not data.has_section:
        raise ShiodaInputError("hypothesis failed: the fibration needs a section")
    if not data.trivial_trace:
        raise ShiodaInputError("hypothesis failed: the jacobian must have trivial trace")
    r = data.rho - 2 - sum(m - 1 for m in data.fiber_component_counts)
    if r < 0:
        raise ShiodaInputError(f"inconsistent input: rank would be {r}")
    return r


@dataclass(frozen=True)
class GramMatrix2:
    a: int
    b: int
    c: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> GramMatrix2:
        (a, b), (b2, c) = rows
        if b != b2:
            raise ValueError("Gram matrix must be symmetric")
        return cls(int(a), int(b), int(c))

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        return self.a * u[0] * v[0] + self.b * (u[0] * v[1] + u[1] * v[0]) + self.c * u[1] * v[1]

    def norm(self, u: Sequence[int]) -> int:
        return self.pair(u, u)

    @property
    def determinant(self) -> int:
        return self.a * self.c - self.b * self.b


def _normalize(v: tuple[int, int]) -> tuple[int, int]:
    g = math.gcd(*v)
    v = (v[0] // g, v[1] // g)
    first = v[0] if v[0] else v[1]
    return v if first > 0 else (-v[0], -v[1])


def isotropic_primitive_classes(g: GramMatrix2) -> list[tuple[int, int]]:
    """Primitive solutions of a*x^2 + 2b*x*y + c*y^2 = 0 up to sign (empty if none)."""
    a, b, c = g.a, g.b, g.c
    if a == b == c == 0:
        raise ValueError("every vector is isotropic for the zero form")
    disc = b * b - a * c
    if disc < 0:
        return []
    s = math.isqrt(disc)
    if s * s != disc:
        return []
    if a == 0:
        # y * (2b*x + c*y) = 0
        cands = [(1, 0), (c, -2 * b)]
    else:
        # x/y = (-b +- s)/a
        cands = [(-b + s, a), (-b - s, a)]
    out = sorted({_normalize(v) for v in cands if v != (0, 0)})
    return out


def nef_constraint_filter(
    g: GramMatrix2,
    classes: Sequence[tuple[int, int]],
    constraints: Sequence[tuple[Sequence[int], int]],
) -> list[tuple[int, int]]:
    """Keep classes for which one of +v, -v pairs with every constraint vector at least the bound."""
    out = []
    for v in classes:
        for sv in (tuple(v), (-v[0], -v[1])):
            if all(g.pair(sv, w) >= bound for w, bound in constraints):
                out.append(sv)
                break
    return out
