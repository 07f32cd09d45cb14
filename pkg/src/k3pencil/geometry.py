"""Plane projective geometry over the rationals for a branch sextic B = V(F)."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import gfp
from .algebra import (
    UniPoly,
    binary_discriminant,
    poly_gcd,
    rational_roots,
    squarefree_decompose,
    to_fraction,
)
from .parser import parse_polynomial

VARS = "xyz"


def _canonical_ints(values: Sequence) -> tuple[int, int, int]:
    fr = [to_fraction(v) for v in values]
    if all(v == 0 for v in fr):
        raise ValueError("all coordinates are zero")
    den = math.lcm(*(v.denominator for v in fr))
    ints = [int(v * den) for v in fr]
    g = math.gcd(*ints)
    ints = [i // g for i in ints]
    first = next(i for i in ints if i != 0)
    if first < 0:
        ints = [-i for i in ints]
    return tuple(ints)


def cross(u: Sequence, v: Sequence) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u: Sequence, v: Sequence):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


class _Triple:
    __slots__ = ("_v",)

    def __init__(self, a, b=None, c=None):
        vals = tuple(a) if b is None else (a, b, c)
        self._v = _canonical_ints(vals)

    def __iter__(self):
        return iter(self._v)

    def __getitem__(self, i):
        return self._v[i]

    def __eq__(self, other):
        return type(self) is type(other) and self._v == other._v

    def __hash__(self):
        return hash((type(self).__name__, self._v))

    @property
    def coords(self) -> tuple[int, int, int]:
        return self._v

    @property
    def height(self) -> int:
        return max(abs(c) for c in self._v)

    def sort_key(self):
        return (self.height, self._v)


class ProjPoint(_Triple):
    """Point (x:y:z) stored as coprime integers, first nonzero entry positive."""

    def __repr__(self):
        return "({}:{}:{})".format(*self._v)

    __str__ = __repr__


class Line(_Triple):
    """Line ax + by + cz = 0 stored like ProjPoint."""

    def __call__(self, pt: Sequence):
        return _dot(self._v, tuple(pt))

    def contains(self, pt: Sequence) -> bool:
        return self(pt) == 0

    @classmethod
    def through(cls, p: Sequence, q: Sequence) -> Line:
        return cls(cross(tuple(p), tuple(q)))

    def meet(self, other: Line) -> ProjPoint:
        return ProjPoint(cross(self._v, other._v))

    def to_str(self) -> str:
        parts = []
        for c, v in zip(self._v, VARS):
            if c == 0:
                continue
            mono = v if abs(c) == 1 else f"{abs(c)}{v}"
            parts.append(("-" if c < 0 else "+", mono))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, m in parts[1:]:
            s += f"{sign}{m}"
        return s + "=0"

    def __repr__(self):
        return f"Line({self.to_str()})"

    __str__ = to_str


def line_parametrization(line: Line) -> tuple[tuple, tuple, tuple[int, int]]:
    """Fixed rational parametrization u -> A + u*B of a line.

    The two coordinates away from the (first) largest |coefficient| are the
    free ones, so A and B have 1 in those slots; the parameter u is the ratio
    of the second free coordinate to the first.
    """
    a = list(line)
    k = max(range(3), key=lambda i: (abs(a[i]), -i))
    i, j = (n for n in range(3) if n != k)
    A = [Fraction(0)] * 3
    B = [Fraction(0)] * 3
    A[i], A[k] = Fraction(1), Fraction(-a[i], a[k])
    B[j], B[k] = Fraction(1), Fraction(-a[j], a[k])
    return tuple(A), tuple(B), (i, j)


# ---------------------------------------------------------------------------
# homogeneous forms


class HomForm:
    """Homogeneous ternary form with exact rational coefficients."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: dict):
        clean = {}
        for e, c in terms.items():
            c = to_fraction(c)
            if c == 0:
                continue
            if sum(e) != degree:
                raise ValueError(f"monomial {e} does not have degree {degree}")
            clean[tuple(e)] = c
        self.degree = degree
        self.terms = clean

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> HomForm:
        d, terms = parse_polynomial(text, degree)
        return cls(d, terms)

    def __eq__(self, other):
        return isinstance(other, HomForm) and self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        return f"HomForm({self.to_str()!r})"

    def sorted_terms(self) -> list[tuple[tuple[int, int, int], Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def to_str(self) -> str:
        """Canonical text: graded lex order x > y > z, coefficients as num/den."""
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if n == 1 else f"{v}^{n}" for v, n in zip(VARS, e) if n
            )
            a = abs(c)
            coef = str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
            if mono and a == 1:
                body = mono
            elif mono:
                body = f"{coef}*{mono}"
            else:
                body = coef
            out.append(("-" if c < 0 else "+", body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    __str__ = to_str

    def __call__(self, x, y=None, z=None):
        pt = tuple(x) if y is None else (x, y, z)
        total = Fraction(0) if not isinstance(pt[0], int) or True else 0
        for (i, j, k), c in self.terms.items():
            total += c * pt[0] ** i * pt[1] ** j * pt[2] ** k
        return total

    def scale(self, c) -> HomForm:
        c = to_fraction(c)
        return HomForm(self.degree, {e: c * a for e, a in self.terms.items()})

    def __mul__(self, other: HomForm) -> HomForm:
        if not isinstance(other, HomForm):
            return self.scale(other)
        out: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
                out[e] = out.get(e, Fraction(0)) + ca * cb
        return HomForm(self.degree + other.degree, out)

    def __add__(self, other: HomForm) -> HomForm:
        if other.degree != self.degree and other.terms and self.terms:
            raise ValueError("cannot add forms of different degree")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return HomForm(max(self.degree, other.degree), out)

    def partial(self, var: int) -> HomForm:
        out = {}
        for e, c in self.terms.items():
            if e[var]:
                ne = list(e)
                ne[var] -= 1
                out[tuple(ne)] = c * e[var]
        return HomForm(self.degree - 1, out)

    def gradient(self) -> tuple[HomForm, HomForm, HomForm]:
        return tuple(self.partial(i) for i in range(3))

    def content(self) -> Fraction:
        vals = list(self.terms.values())
        den = math.lcm(*(v.denominator for v in vals))
        num = math.gcd(*(int(v * den) for v in vals))
        return Fraction(num, den)

    def primitive(self) -> HomForm:
        """Primitive integer multiple whose leading (graded lex) coefficient is positive."""
        c = self.content()
        if self.sorted_terms()[0][1] < 0:
            c = -c
        return self.scale(1 / c)

    def int_terms(self) -> dict:
        out = {}
        for e, c in self.terms.items():
            if c.denominator != 1:
                raise ValueError("form has non-integer coefficients")
            out[e] = c.numerator
        return out

    def linear_substitute(self, mat: Sequence[Sequence]) -> HomForm:
        """Form G(v) = F(M v) for a 3x3 matrix M (rows give x, y, z)."""
        lin = [{(1, 0, 0): to_fraction(r[0]), (0, 1, 0): to_fraction(r[1]), (0, 0, 1): to_fraction(r[2])} for r in mat]
        lin = [HomForm(1, t) for t in lin]
        powers = []
        for L in lin:
            pw = [HomForm(0, {(0, 0, 0): 1})]
            for _ in range(self.degree):
                pw.append(pw[-1] * L)
            powers.append(pw)
        out = HomForm(self.degree, {})
        for (i, j, k), c in self.terms.items():
            out = out + (powers[0][i] * powers[1][j] * powers[2][k]).scale(c)
        return out

    def restrict(self, A: Sequence, B: Sequence) -> BinaryForm:
        """Binary form u -> F(A + u*B), of formal degree deg F."""
        lin = [UniPoly([A[i], B[i]]) for i in range(3)]
        pows = []
        for L in lin:
            pw = [UniPoly([1])]
            for _ in range(self.degree):
                pw.append(pw[-1] * L)
            pows.append(pw)
        acc = UniPoly()
        for (i, j, k), c in self.terms.items():
            acc = acc + pows[0][i] * pows[1][j] * pows[2][k] * c
        return BinaryForm(acc, self.degree)


# ---------------------------------------------------------------------------
# binary forms


@dataclass(frozen=True)
class BinaryForm:
    """Binary form of formal degree ``degree`` dehomogenized at the first variable.

    Roots at the parameter's infinity are recorded by the degree deficit.
    """

    poly: UniPoly
    degree: int

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    @property
    def infinity_multiplicity(self) -> int:
        if self.poly.is_zero():
            return 0
        return self.degree - self.poly.degree

    @property
    def effective_degree(self) -> int:
        """Number of roots counted with multiplicity, infinity included."""
        return 0 if self.poly.is_zero() else self.degree

    def to_str(self, names: tuple[str, str] = ("s", "t")) -> str:
        if self.poly.is_zero():
            return "0"
        a, b = names
        terms = []
        for i in range(self.poly.degree, -1, -1):
            c = self.poly[i]
            if c == 0:
                continue
            pa, pb = self.degree - i, i
            mono = "*".join(
                v if n == 1 else f"{v}^{n}" for v, n in ((a, pa), (b, pb)) if n
            )
            ac = abs(c)
            cs = str(ac.numerator) if ac.denominator == 1 else f"{ac.numerator}/{ac.denominator}"
            body = mono if (mono and ac == 1) else (f"{cs}*{mono}" if mono else cs)
            terms.append(("-" if c < 0 else "+", body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def discriminant(self) -> Fraction:
        return binary_discriminant(self.poly, self.degree)

    def divide_by_u_power(self, m: int) -> BinaryForm:
        """Remove a factor u^m (a root at the parameter value 0)."""
        c = self.poly.coeffs
        if any(x != 0 for x in c[:m]):
            raise ArithmeticError(f"form is not divisible by u^{m}")
        return BinaryForm(UniPoly(c[m:]), self.degree - m)

    def squarefree_part(self) -> BinaryForm:
        sq = squarefree_decompose(self.poly)
        prod = UniPoly([1])
        for f, _ in sq.parts:
            prod = prod * f
        return BinaryForm(prod, prod.degree + (1 if self.infinity_multiplicity else 0))

    def gcd(self, other: BinaryForm) -> BinaryForm:
        g = poly_gcd(self.poly, other.poly)
        inf = min(self.infinity_multiplicity, other.infinity_multiplicity)
        return BinaryForm(g, g.degree + inf)

    def exact_div(self, other: BinaryForm) -> BinaryForm:
        return BinaryForm(self.poly.exact_div(other.poly), self.degree - other.degree)

    def rational_roots(self) -> list[Fraction | None]:
        """Rational roots in the affine parameter; None stands for infinity."""
        out: list[Fraction | None] = list(rational_roots(self.poly)) if self.poly.degree > 0 else []
        if self.infinity_multiplicity:
            out.append(None)
        return out

    def transform(self, mat: Sequence[Sequence]) -> BinaryForm:
        """G(s, t) = self(M^-1 (s, t)) where (s, t) = M (u0, u1).

        Roots are carried along by the linear change of coordinates.
        """
        (a, b), (c, d) = [[to_fraction(x) for x in row] for row in mat]
        det = a * d - b * c
        if det == 0:
            raise ValueError("singular change of variables")
        # inverse up to the scalar 1/det, which does not move roots
        ia, ib, ic, id_ = d, -b, -c, a
        u0 = UniPoly([ia, ib])
        u1 = UniPoly([ic, id_])
        acc = UniPoly()
        for i, coef in enumerate(self.poly.coeffs):
            if coef:
                acc = acc + u0 ** (self.degree - i) * u1**i * coef
        return BinaryForm(acc, self.degree)

    def to_dict(self) -> dict:
        return {
            "coefficients": [f"{c.numerator}/{c.denominator}" for c in self.poly.coeffs],
            "formal_degree": self.degree,
            "infinity_multiplicity": self.infinity_multiplicity,
        }


def restrict_to_line(F: HomForm, line: Line) -> BinaryForm:
    """F restricted to ``line`` in the fixed parametrization of line_parametrization."""
    A, B, _ = line_parametrization(line)
    return F.restrict(A, B)


# ---------------------------------------------------------------------------
# intersection profiles


@dataclass(frozen=True)
class ProfilePart:
    factor: UniPoly | None  # None: the point at the parameter's infinity
    degree: int
    multiplicity: int

    def to_dict(self, var: str = "u") -> dict:
        return {
            "factor": "infinity" if self.factor is None else self.factor.to_str(var),
            "degree": self.degree,
            "multiplicity": self.multiplicity,
        }


@dataclass(frozen=True)
class IntersectionProfile:
    parts: tuple[ProfilePart, ...]
    line_in_B: bool
    total_degree: int = 6

    @property
    def multiplicities(self) -> list[int]:
        """Multiplicity of every geometric point, largest first."""
        out = []
        for p in self.parts:
            out.extend([p.multiplicity] * p.degree)
        return sorted(out, reverse=True)

    @property
    def distinct_count(self) -> int:
        return sum(p.degree for p in self.parts)

    @property
    def odd_count(self) -> int:
        return sum(p.degree for p in self.parts if p.multiplicity % 2)

    def is_all_even(self) -> bool:
        return not self.line_in_B and self.odd_count == 0

    def check_invariants(self) -> None:
        if self.line_in_B:
            return
        total = sum(p.degree * p.multiplicity for p in self.parts)
        if total != self.total_degree:
            raise AssertionError(f"Bezout violated: intersection total {total} != {self.total_degree}")
        if self.odd_count % 2:
            raise AssertionError("odd-multiplicity points have odd total degree")

    def to_dict(self) -> dict:
        return {
            "line_in_B": self.line_in_B,
            "multiplicities": self.multiplicities,
            "distinct_points": self.distinct_count,
            "parts": [p.to_dict() for p in self.parts],
        }


def profile_of_binary_form(form: BinaryForm) -> IntersectionProfile:
    if form.is_zero():
        return IntersectionProfile((), True, form.degree)
    sq = squarefree_decompose(form.poly)
    parts = [ProfilePart(f, f.degree, m) for f, m in sq.parts]
    if form.infinity_multiplicity:
        parts.append(ProfilePart(None, 1, form.infinity_multiplicity))
    parts.sort(key=lambda p: (p.multiplicity, p.factor is None, p.degree))
    prof = IntersectionProfile(tuple(parts), False, form.degree)
    prof.check_invariants()
    return prof


def intersection_profile(F: HomForm, line: Line) -> IntersectionProfile:
    return profile_of_binary_form(restrict_to_line(F, line))


def is_component(F: HomForm, line: Line) -> bool:
    return restrict_to_line(F, line).is_zero()


def is_tritangent(F: HomForm, line: Line) -> bool:
    return intersection_profile(F, line).is_all_even()


# ---------------------------------------------------------------------------
# points and singularities


def is_on_curve(F: HomForm, p: Sequence) -> bool:
    return F(tuple(p)) == 0


def is_singular_point(F: HomForm, p: Sequence) -> bool:
    pt = tuple(p)
    return F(pt) == 0 and all(g(pt) == 0 for g in F.gradient())


def hessian_at(F: HomForm, p: Sequence) -> list[list[Fraction]]:
    pt = tuple(p)
    return [[F.partial(i).partial(j)(pt) for j in range(3)] for i in range(3)]


def _rank(mat: list[list[Fraction]]) -> int:
    m = [list(r) for r in mat]
    rank = 0
    for col in range(len(m[0])):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def singularity_type(F: HomForm, p: Sequence) -> str:
    """'smooth', 'node' (A1) or 'other' for a point of B; 'off-curve' otherwise.

    At a singular point the Hessian kills p itself (Euler), so the local
    quadratic part is nondegenerate exactly when the Hessian has rank 2.
    """
    pt = tuple(p)
    if F(pt) != 0:
        return "off-curve"
    if not is_singular_point(F, pt):
        return "smooth"
    return "node" if _rank(hessian_at(F, pt)) == 2 else "other"


def point_multiplicity(F: HomForm, p: Sequence) -> int:
    """Multiplicity of B at p (order of vanishing of F)."""
    pt = tuple(p)
    forms = [F]
    m = 0
    while True:
        if any(g(pt) != 0 for g in forms):
            return m
        m += 1
        nxt = []
        seen = set()
        for g in forms:
            for i in range(3):
                h = g.partial(i)
                key = frozenset(h.terms.items())
                if h.terms and key not in seen:
                    seen.add(key)
                    nxt.append(h)
        if not nxt:
            return m
        forms = nxt


def tangent_line(F: HomForm, p: Sequence) -> Line:
    pt = tuple(p)
    if F(pt) != 0:
        raise ValueError(f"point {ProjPoint(pt)} is not on the curve")
    grad = [g(pt) for g in F.gradient()]
    if all(g == 0 for g in grad):
        raise ValueError(f"point {ProjPoint(pt)} is singular: no unique tangent line")
    return Line(grad)


# ---------------------------------------------------------------------------
# pencils


@dataclass(frozen=True)
class Pencil:
    """Lines through ``base``: l_t = l0 + t*l1, with t = None meaning l1.

    ``aux`` is a fixed line missing the base point; the pencil member l_t is
    parametrized as lam*base + mu*X(t) with X(t) = l_t meet aux.
    """

    base: ProjPoint
    l0: Line
    l1: Line
    aux: Line

    @classmethod
    def through(cls, base: Sequence, generators: tuple[Sequence, Sequence] | None = None) -> Pencil:
        P = ProjPoint(tuple(base))
        k = max(range(3), key=lambda i: (abs(P[i]), -i))
        i, j = (n for n in range(3) if n != k)
        e = [[0, 0, 0], [0, 0, 0]]
        e[0][i] = 1
        e[1][j] = 1
        if generators is None:
            l0, l1 = Line(cross(P.coords, e[0])), Line(cross(P.coords, e[1]))
        else:
            l0, l1 = Line(tuple(generators[0])), Line(tuple(generators[1]))
            if not (l0.contains(P) and l1.contains(P)):
                raise ValueError("pencil generators must pass through the base point")
            if l0 == l1:
                raise ValueError("pencil generators must be distinct")
        aux = [0, 0, 0]
        aux[k] = 1
        return cls(P, l0, l1, Line(aux))

    def line_coeffs(self, t: Fraction | None) -> tuple:
        if t is None:
            return tuple(Fraction(c) for c in self.l1)
        t = to_fraction(t)
        return tuple(a + t * b for a, b in zip(self.l0, self.l1))

    def line_at(self, t: Fraction | None) -> Line:
        return Line(self.line_coeffs(t))

    def parameter_of(self, pt: Sequence) -> Fraction | None:
        """Pencil parameter of the line joining the base point to ``pt``."""
        pt = tuple(pt)
        if ProjPoint(pt) == self.base:
            raise ValueError("the base point lies on every member of the pencil")
        a, b = self.l0(pt), self.l1(pt)
        if b == 0:
            return Fraction(0) if a == 0 else None
        return Fraction(-a) / b

    def second_point(self, t: Fraction | None) -> tuple:
        return cross(self.line_coeffs(t), tuple(Fraction(c) for c in self.aux))

    def restrict(self, F: HomForm, t: Fraction | None) -> BinaryForm:
        """F on l_t as a form in (lam:mu); the base point sits at mu = 0."""
        return F.restrict(tuple(Fraction(c) for c in self.base), self.second_point(t))

    def mobius_from_line(self, line: Line) -> list[list[Fraction]]:
        """Matrix sending line-parameter coordinates (u0:u1) to pencil (s:t)."""
        A, B, _ = line_parametrization(line)
        return [
            [self.l1(A), self.l1(B)],
            [-self.l0(A), -self.l0(B)],
        ]

    def to_dict(self) -> dict:
        return {
            "base_point": list(self.base),
            "l0": self.l0.to_str(),
            "l1": self.l1.to_str(),
            "convention": "l_t = l0 + t*l1, t = infinity gives l1",
        }


def parameters_up_to_height(bound: int) -> list[Fraction | None]:
    """Rationals m/n with max(|m|, n) <= bound (ordered by height) plus infinity."""
    out = [Fraction(0)]
    seen = {Fraction(0)}
    for h in range(1, bound + 1):
        fresh = set()
        for n in range(1, h + 1):
            for m in (h, -h) if n < h else range(-h, h + 1):
                if math.gcd(m, n) == 1:
                    fresh.add(Fraction(m, n))
        for n in (h,):
            for m in range(-h, h + 1):
                if math.gcd(m, n) == 1:
                    fresh.add(Fraction(m, n))
        fresh -= seen
        seen |= fresh
        out.extend(sorted(fresh))
    out.append(None)
    return out


def rational_points_on_B(F: HomForm, height_bound: int, sweep_point: Sequence = (0, 0, 1)) -> list[ProjPoint]:
    """Rational points of B on the pencil lines through ``sweep_point``.

    Lines contained in B are skipped (they would contribute infinitely many
    points).  Result is sorted by height, then lexicographically.
    """
    if height_bound < 1:
        raise ValueError("height bound must be at least 1")
    pencil = Pencil.through(sweep_point)
    found: set[ProjPoint] = set()
    if F(tuple(pencil.base)) == 0:
        found.add(pencil.base)
    for t in parameters_up_to_height(height_bound):
        form = pencil.restrict(F, t)
        if form.is_zero():
            continue
        X = pencil.second_point(t)
        for u in form.rational_roots():
            if u is None:
                pt = X
            else:
                pt = tuple(b + u * x for b, x in zip(pencil.base, X))
            found.add(ProjPoint(pt))
    return sorted(found, key=lambda q: q.sort_key())


# ---------------------------------------------------------------------------
# smoothness certification via reduction mod p


def _forms_mod_p(terms: dict, p: int) -> dict:
    return {e: c % p for e, c in terms.items() if c % p}


def _partials_mod_p(terms: dict, p: int) -> list[dict]:
    out = []
    for v in range(3):
        d = {}
        for e, c in terms.items():
            if e[v] and (c * e[v]) % p:
                ne = list(e)
                ne[v] -= 1
                d[tuple(ne)] = (c * e[v]) % p
        out.append(d)
    return out


def _z_coeffs(form: dict, deg: int, p: int) -> list[list[int]]:
    """Coefficients (in F_p[x], y = 1) of z^0..z^deg."""
    out = [[0] * (deg + 1) for _ in range(deg + 1)]
    for (i, j, k), c in form.items():
        out[k][i] = (out[k][i] + c) % p
    return [gfp.trim(row) for row in out]


def _resultant_z(f: dict, g: dict, deg: int, p: int) -> list[int]:
    """Formal Sylvester determinant Res_z(f, g) at y = 1, both of z-degree deg."""
    fc = list(reversed(_z_coeffs(f, deg, p)))
    gc = list(reversed(_z_coeffs(g, deg, p)))
    n = 2 * deg
    mat = []
    for i in range(deg):
        mat.append([[]] * i + fc + [[]] * (n - deg - 1 - i))
    for i in range(deg):
        mat.append([[]] * i + gc + [[]] * (n - deg - 1 - i))
    return gfp.bareiss_det(mat, p)


def _substitute_mod_p(terms: dict, mat, p: int, degree: int) -> dict:
    G = HomForm(degree, terms).linear_substitute(mat)
    return {e: int(c) % p for e, c in G.terms.items() if int(c) % p}


def _invertible_mod_p(mat, p: int) -> bool:
    a = mat
    det = (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )
    return det % p != 0


def singular_points_mod_p(terms: dict, p: int) -> list[tuple[int, int, int]]:
    """Brute-force F_p-rational singular points of V(F mod p)."""
    parts = _partials_mod_p(terms, p)
    fm = _forms_mod_p(terms, p)

    def ev(form, pt):
        return sum(c * pt[0] ** e[0] * pt[1] ** e[1] * pt[2] ** e[2] for e, c in form.items()) % p

    pts = [(x, y, 1) for x in range(p) for y in range(p)] + [(x, 1, 0) for x in range(p)] + [(1, 0, 0)]
    return [pt for pt in pts if ev(fm, pt) == 0 and all(ev(g, pt) == 0 for g in parts)]


def smooth_mod_p(terms: dict, p: int, degree: int = 6, tries: int = 4, seed: int = 0) -> bool | None:
    """Decide smoothness of V(F mod p) over the algebraic closure of F_p.

    True: certified smooth (resultant elimination of the partials leaves no
    common root).  False: an F_p-rational singular point exists (or the form
    vanishes mod p).  None: undecided.
    """
    if p < 5 or degree % p == 0:
        raise ValueError("need a prime p >= 5 not dividing the degree")
    base = _forms_mod_p(terms, p)
    if not base:
        return False
    rng = random.Random(seed)
    deg = degree - 1
    for attempt in range(tries):
        if attempt == 0:
            mat = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        else:
            while True:
                mat = [[rng.randrange(p) for _ in range(3)] for _ in range(3)]
                if _invertible_mod_p(mat, p):
                    break
        G = base if attempt == 0 else _substitute_mod_p(base, mat, p, degree)
        parts = _partials_mod_p(G, p)
        top = [g.get((0, 0, deg), 0) % p for g in parts]
        if all(c == 0 for c in top):
            return False  # (0:0:1) is a common zero of all partials
        res = [
            _resultant_z(parts[0], parts[1], deg, p),
            _resultant_z(parts[0], parts[2], deg, p),
            _resultant_z(parts[1], parts[2], deg, p),
        ]
        full = deg * deg
        g = res[0]
        for r in res[1:]:
            g = gfp.gcd(g, r, p)
        common_infinity = all((not r) or (len(r) - 1 < full) for r in res)
        if len(g) == 1 and not common_infinity:
            return True
    if singular_points_mod_p(terms, p):
        return False
    return None


@dataclass
class SmoothnessCertificate:
    status: str  # "smooth", "singular" or "inconclusive"
    prime: int | None = None
    witnesses: list[ProjPoint] = field(default_factory=list)
    primes_tried: list[int] = field(default_factory=list)

    @property
    def smooth(self) -> bool | None:
        return {"smooth": True, "singular": False}.get(self.status)

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "prime": self.prime,
            "witnesses": [list(w) for w in self.witnesses],
            "primes_tried": self.primes_tried,
            "method": "resultant elimination of the partials over F_p; smooth mod p implies smooth over Q-bar",
        }


def _primes(start: int, stop: int) -> Iterable[int]:
    for n in range(start, stop + 1):
        if n > 1 and all(n % d for d in range(2, math.isqrt(n) + 1)):
            yield n


def find_rational_singular_points(F: HomForm, height_bound: int = 3) -> list[ProjPoint]:
    """Singular points among the rational points found by several sweeps."""
    cands: set[ProjPoint] = set()
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        if F(e) == 0:
            cands.add(ProjPoint(e))
    for sweep in ((0, 0, 1), (1, 0, 0), (0, 1, 0)):
        cands.update(rational_points_on_B(F, height_bound, sweep))
    return sorted((c for c in cands if is_singular_point(F, tuple(c))), key=lambda q: q.sort_key())


def certify_smooth(F: HomForm, max_prime: int = 60, witness_height: int = 3) -> SmoothnessCertificate:
    """One-sided smoothness certificate for B = V(F) over the algebraic closure.

    Smoothness of the reduction at one prime of good degree implies smoothness
    in characteristic 0.  Failing that, a rational singular point is searched
    for; if none turns up the answer is "inconclusive".
    """
    terms = F.primitive().int_terms()
    tried = []
    for p in _primes(5, max_prime):
        if F.degree % p == 0:
            continue
        tried.append(p)
        if smooth_mod_p(terms, p, F.degree) is True:
            return SmoothnessCertificate("smooth", p, [], tried)
    witnesses = find_rational_singular_points(F, witness_height)
    if witnesses:
        return SmoothnessCertificate("singular", None, witnesses, tried)
    return SmoothnessCertificate("inconclusive", None, [], tried)
