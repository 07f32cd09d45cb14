"""Fibrations of the double plane induced by pencils of lines, and multisection certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .algebra import UniPoly, fraction_sqrt, fraction_str, interpolate, to_fraction
from .geometry import (
    BinaryForm,
    HomForm,
    IntersectionProfile,
    Line,
    Pencil,
    ProjPoint,
    is_singular_point,
    profile_of_binary_form,
    rational_points_on_B,
    restrict_to_line,
    singularity_type,
    tangent_line,
)

GENUS2 = "genus2"
GENUS1 = "genus1"


class UnsupportedSingularity(ValueError):
    pass


class DegenerateFibration(ValueError):
    pass


class PreconditionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# fibrations


@dataclass(frozen=True)
class PencilFibration:
    """Fibration of the double plane given by the lines through ``base``.

    kind is ``genus2`` when the base point is not a singular point of B and
    ``genus1`` when it is a node; in the latter case the forced double
    intersection at the base point is removed from every member.
    """

    F: HomForm
    base: ProjPoint
    kind: str
    pencil: Pencil

    @property
    def node_discount(self) -> int:
        return 2 if self.kind == GENUS1 else 0

    @property
    def discriminant_degree(self) -> int:
        n = self.F.degree - self.node_discount
        return n * (n - 1) + self.node_discount * (2 * n - 2)

    def member_form(self, t: Fraction | None) -> BinaryForm:
        """Restriction of F to l_t (base point at parameter 0), node discounted."""
        form = self.pencil.restrict(self.F, t)
        if self.node_discount:
            form = form.divide_by_u_power(self.node_discount)
        return form

    @cached_property
    def discriminant(self) -> BinaryForm:
        """Discriminant of the members as a binary form in the pencil parameter.

        Its total degree D is fixed by the weights of the discriminant; the
        polynomial is found by exact interpolation through D+1 values and
        confirmed on further ones.
        """
        D = self.discriminant_degree
        ts = [Fraction((i + 1) // 2 * (1 if i % 2 else -1)) for i in range(D + 4)]
        vals = [self.member_form(t).discriminant() for t in ts]
        poly = interpolate(ts[: D + 1], vals[: D + 1])
        for t, v in zip(ts[D + 1 :], vals[D + 1 :]):
            if poly(t) != v:
                raise ArithmeticError("pencil discriminant failed verification")
        if poly.is_zero():
            raise DegenerateFibration("every member of the pencil is singular (discriminant vanishes identically)")
        return BinaryForm(poly, D)

    def discriminant_at(self, t: Fraction | None) -> Fraction:
        disc = self.discriminant
        if t is None:
            return disc.poly.lc if disc.infinity_multiplicity == 0 else Fraction(0)
        return disc.poly(to_fraction(t))

    @property
    def ns_increment(self) -> int:
        """Rank added to the Neron-Severi group by resolving the base locus."""
        return 0 if self.kind == GENUS1 else 2

    @property
    def section_radicand(self) -> Fraction | None:
        """F(P) when P is off B: the exceptional sections live over Q(sqrt F(P))."""
        v = self.F(tuple(self.base))
        return v if v != 0 else None

    def singular_rational_parameters(self) -> list[Fraction | None]:
        return self.discriminant.rational_roots()

    def to_dict(self) -> dict:
        disc = self.discriminant
        rad = self.section_radicand
        return {
            "base_point": list(self.base),
            "kind": self.kind,
            "pencil": self.pencil.to_dict(),
            "discriminant": disc.to_dict(),
            "discriminant_degree": disc.poly.degree,
            "ns_rank_increment": self.ns_increment,
            "sections_over": None if rad is None else {
                "radicand": fraction_str(rad),
                "rational": fraction_sqrt(rad) is not None,
            },
        }


def build_fibration(F: HomForm, base: Sequence, generators=None) -> PencilFibration:
    P = ProjPoint(tuple(base))
    kind = GENUS2
    if is_singular_point(F, tuple(P)):
        stype = singularity_type(F, tuple(P))
        if stype != "node":
            raise UnsupportedSingularity(f"base point {P} is a singularity of type '{stype}'; only nodes are supported")
        kind = GENUS1
    fib = PencilFibration(F, P, kind, Pencil.through(P, generators))
    fib.discriminant  # noqa: B018  (validates the construction)
    return fib


# ---------------------------------------------------------------------------
# fiber classification

SMOOTH_GENUS2 = "SmoothGenus2"
SMOOTH_GENUS1 = "SmoothGenus1"
INTEGRAL_GENUS1 = "IntegralGeomGenus1"
INTEGRAL_GENUS_LE1 = "IntegralGeomGenusLe1"
SPLIT_EVEN = "SplitEvenProfile"
COMPONENT = "ComponentOfB"
OTHER_SINGULAR = "OtherSingular"


@dataclass(frozen=True)
class FiberClass:
    tag: str
    profile: IntersectionProfile
    genus: int | None  # geometric genus of the normalization; None when not integral

    @property
    def smooth(self) -> bool:
        return self.tag in (SMOOTH_GENUS2, SMOOTH_GENUS1)

    def to_dict(self) -> dict:
        out = {"tag": self.tag, "profile": self.profile.to_dict(), "genus": self.genus}
        if self.tag == INTEGRAL_GENUS_LE1:
            out["genus_bound"] = "<=1"
        return out


def _genus_from_odd(profile: IntersectionProfile) -> int | None:
    odd = profile.odd_count
    return odd // 2 - 1 if odd else None


def classify_profile(profile: IntersectionProfile) -> FiberClass:
    if profile.line_in_B:
        return FiberClass(COMPONENT, profile, None)
    if profile.is_all_even():
        return FiberClass(SPLIT_EVEN, profile, None)
    n = profile.distinct_count
    tag = {6: SMOOTH_GENUS2, 5: INTEGRAL_GENUS1, 4: INTEGRAL_GENUS_LE1}.get(n, OTHER_SINGULAR)
    return FiberClass(tag, profile, _genus_from_odd(profile))


def classify_line_pullback(F: HomForm, line: Line) -> FiberClass:
    return classify_profile(profile_of_binary_form(restrict_to_line(F, line)))


def classify_fiber(fib: PencilFibration, t: Fraction | None) -> FiberClass:
    if fib.kind == GENUS2:
        return classify_profile(profile_of_binary_form(fib.pencil.restrict(fib.F, t)))
    full = fib.pencil.restrict(fib.F, t)
    if full.is_zero():
        return FiberClass(COMPONENT, profile_of_binary_form(full), None)
    residual = profile_of_binary_form(fib.member_form(t))
    if residual.is_all_even():
        return FiberClass(SPLIT_EVEN, residual, None)
    if residual.distinct_count == 4:
        return FiberClass(SMOOTH_GENUS1, residual, 1)
    return FiberClass(OTHER_SINGULAR, residual, _genus_from_odd(residual))


# ---------------------------------------------------------------------------
# multisections


def _odd_part(form: BinaryForm) -> BinaryForm:
    from .algebra import squarefree_decompose

    prod = UniPoly([1])
    for f, m in squarefree_decompose(form.poly).parts:
        if m % 2:
            prod = prod * f
    inf = 1 if form.infinity_multiplicity % 2 else 0
    return BinaryForm(prod, prod.degree + inf)


def _check_line(fib: PencilFibration, line: Line) -> BinaryForm:
    if line.contains(tuple(fib.base)):
        raise PreconditionError(f"line {line} passes through the base point {fib.base}")
    form = restrict_to_line(fib.F, line)
    if form.is_zero():
        raise PreconditionError(f"line {line} is a component of B")
    return form


def odd_intersection_parameters(fib: PencilFibration, line: Line) -> BinaryForm:
    """Pencil parameters of the odd-multiplicity points of line and B.

    Returned as a binary form in the pencil parameter; a root at infinity is
    recorded by its degree deficit.  Projection from the base point is a
    linear isomorphism from the line to the parameter line, so the odd part
    of the restriction is simply transported by that linear map.
    """
    form = _check_line(fib, line)
    odd = _odd_part(form)
    if odd.effective_degree == 0:
        raise PreconditionError(f"line {line} has no odd intersection points (tritangent)")
    return odd.transform(fib.pencil.mobius_from_line(line))


@dataclass
class MultisectionCertificate:
    line: Line
    base: ProjPoint
    profile: IntersectionProfile
    odd_parameters: BinaryForm
    shared_with_discriminant: BinaryForm
    residual: BinaryForm
    saliently_ramified: bool
    genus: int | None
    notes: list[str] = field(default_factory=list)

    @property
    def residual_has_infinity(self) -> bool:
        return self.residual.infinity_multiplicity > 0

    def to_dict(self) -> dict:
        return {
            "line": self.line.to_str(),
            "base_point": list(self.base),
            "profile": self.profile.to_dict(),
            "odd_parameters": self.odd_parameters.to_dict(),
            "shared_with_discriminant": self.shared_with_discriminant.to_dict(),
            "residual": self.residual.to_dict(),
            "residual_has_infinity": self.residual_has_infinity,
            "saliently_ramified": self.saliently_ramified,
            "genus_of_normalization": self.genus,
            "notes": list(self.notes),
        }


def certify_saliently_ramified(fib: PencilFibration, line: Line) -> MultisectionCertificate:
    """Does the pullback of ``line`` ramify over a smooth fiber of ``fib``?

    The normalization of the pullback is branched exactly at the odd points
    of line and B; it is saliently ramified when one of them lies on a pencil
    member whose discriminant does not vanish.
    """
    form = _check_line(fib, line)
    profile = profile_of_binary_form(form)
    if profile.is_all_even():
        raise PreconditionError(f"line {line} is tritangent: its pullback is not integral")
    odd = odd_intersection_parameters(fib, line)
    shared = odd.gcd(fib.discriminant)
    residual = odd.exact_div(shared) if shared.effective_degree else odd
    cert = MultisectionCertificate(
        line=line,
        base=fib.base,
        profile=profile,
        odd_parameters=odd,
        shared_with_discriminant=shared,
        residual=residual,
        saliently_ramified=residual.effective_degree >= 1,
        genus=_genus_from_odd(profile),
    )
    if shared.effective_degree:
        cert.notes.append(f"{shared.effective_degree} branch parameter(s) lie on singular members")
    return cert


def tangent_multisection_search(fib: PencilFibration, height_bound: int, sweep_point: Sequence = (0, 0, 1)) -> list[MultisectionCertificate]:
    """Tangent lines at rational points of B that give saliently ramified genus-1 bisections."""
    if fib.kind != GENUS2:
        raise PreconditionError("tangent-line search needs a genus-2 fibration")
    F = fib.F
    out: list[MultisectionCertificate] = []
    seen: set[Line] = set()
    for x in rational_points_on_B(F, height_bound, sweep_point):
        if x == fib.base or is_singular_point(F, tuple(x)):
            continue
        if restrict_to_line(F, Line.through(fib.base, x)).is_zero():
            continue
        T = tangent_line(F, tuple(x))
        if T in seen or T.contains(tuple(fib.base)):
            continue
        seen.add(T)
        form = restrict_to_line(F, T)
        if form.is_zero():
            continue
        if profile_of_binary_form(form).distinct_count != 5:
            continue
        cert = certify_saliently_ramified(fib, T)
        if cert.saliently_ramified and cert.genus == 1:
            cert.notes.append(f"tangent to B at {x}")
            out.append(cert)
    return out


def two_singularity_multisections(
    F: HomForm,
    Q: Sequence,
    Q2: Sequence,
    sample_params: Sequence,
    include_failures: bool = False,
) -> list[tuple[Fraction | None, MultisectionCertificate]]:
    """Lines through the singular point Q2 as multisections of the genus-1 fibration at Q.

    The line joining Q and Q2 is a singular member of the fibration at Q, so
    the forced intersection at Q2 never survives the residual test; it is
    discounted automatically.
    """
    Qp, Q2p = ProjPoint(tuple(Q)), ProjPoint(tuple(Q2))
    if Qp == Q2p:
        raise PreconditionError("the two singular points must be distinct")
    for pt in (Qp, Q2p):
        if not is_singular_point(F, tuple(pt)):
            raise PreconditionError(f"{pt} is not a singular point of B")
    if singularity_type(F, tuple(Qp)) != "node":
        raise PreconditionError(f"{Qp} must be a node to carry the genus-1 fibration")
    fib = build_fibration(F, tuple(Qp))
    through = Pencil.through(Q2p)
    joining = Line.through(Qp, Q2p)
    out = []
    for s in sample_params:
        s = None if s is None else to_fraction(s)
        line = through.line_at(s)
        if line == joining:
            raise PreconditionError(f"parameter {s} gives the line through both singular points")
        if restrict_to_line(F, line).is_zero():
            continue
        cert = certify_saliently_ramified(fib, line)
        if cert.saliently_ramified or include_failures:
            out.append((s, cert))
    return out
