"""Elliptic curves over Q: quartic models, Weierstrass forms, group law, rank certificates."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import UniPoly, binary_discriminant, fraction_sqrt, fraction_str, to_fraction


class CurveError(ValueError):
    pass


def _root(a: Fraction, n: int) -> Fraction | None:
    """Exact rational n-th root, if any (sign allowed for odd n)."""
    if a < 0:
        if n % 2 == 0:
            return None
        r = _root(-a, n)
        return None if r is None else -r
    out = []
    for part in (a.numerator, a.denominator):
        r = _iroot(part, n)
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand**n == part:
                out.append(cand)
                break
        else:
            return None
    return Fraction(out[0], out[1])


def _iroot(x: int, n: int) -> int:
    lo, hi = 0, 1 << (x.bit_length() // n + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**n <= x:
            lo = mid
        else:
            hi = mid - 1
    return lo


# ---------------------------------------------------------------------------
# quartic models


@dataclass(frozen=True)
class QuarticModel:
    """w^2 = a u^4 + b u^3 + c u^2 + d u + e with nonzero discriminant."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction

    def __init__(self, a, b, c, d, e):
        for name, v in zip("abcde", (a, b, c, d, e)):
            object.__setattr__(self, name, to_fraction(v))
        if binary_discriminant(self.poly, 4) == 0:
            raise CurveError(f"quartic {self.poly.to_str('u')} has a repeated root")

    @classmethod
    def from_poly(cls, f: UniPoly) -> QuarticModel:
        if f.degree > 4:
            raise CurveError("polynomial has degree above 4")
        c = [f[i] for i in range(5)]
        return cls(c[4], c[3], c[2], c[1], c[0])

    @property
    def poly(self) -> UniPoly:
        return UniPoly([self.e, self.d, self.c, self.b, self.a])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return (self.a, self.b, self.c, self.d, self.e)

    def __call__(self, u) -> Fraction:
        return self.poly(to_fraction(u))

    def on_curve(self, u, w) -> bool:
        return to_fraction(w) ** 2 == self(u)

    def translate(self, u0) -> QuarticModel:
        """Model in u' = u - u0."""
        return QuarticModel.from_poly(self.poly.compose(UniPoly([to_fraction(u0), 1])))

    def reverse(self) -> QuarticModel:
        """Model in u' = 1/u, w' = w/u^2."""
        return QuarticModel(self.e, self.d, self.c, self.b, self.a)

    def to_dict(self) -> dict:
        return {"coefficients": [fraction_str(c) for c in self.coeffs], "form": "w^2 = a*u^4 + b*u^3 + c*u^2 + d*u + e"}


def quartic_invariants(q: QuarticModel) -> tuple[Fraction, Fraction]:
    a, b, c, d, e = q.coeffs
    I = 12 * a * e - 3 * b * d + c * c
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c**3
    return I, J


# ---------------------------------------------------------------------------
# Weierstrass curves


@dataclass(frozen=True)
class ECPoint:
    x: Fraction | None = None
    y: Fraction | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def to_dict(self) -> dict | str:
        if self.is_infinity:
            return "infinity"
        return {"x": fraction_str(self.x), "y": fraction_str(self.y)}

    def __repr__(self):
        return "O" if self.is_infinity else f"({fraction_str(self.x)}, {fraction_str(self.y)})"


INFINITY = ECPoint()


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 = x^3 + A x + B."""

    A: Fraction
    B: Fraction

    def __init__(self, A, B):
        object.__setattr__(self, "A", to_fraction(A))
        object.__setattr__(self, "B", to_fraction(B))
        if self.discriminant == 0:
            raise CurveError("singular cubic")

    @property
    def discriminant(self) -> Fraction:
        return -16 * (4 * self.A**3 + 27 * self.B**2)

    @property
    def j_invariant(self) -> Fraction:
        return 1728 * 4 * self.A**3 / (4 * self.A**3 + 27 * self.B**2)

    def point(self, x, y) -> ECPoint:
        P = ECPoint(to_fraction(x), to_fraction(y))
        self.require(P)
        return P

    def on_curve(self, P: ECPoint) -> bool:
        if P.is_infinity:
            return True
        return P.y**2 == P.x**3 + self.A * P.x + self.B

    def require(self, *points: ECPoint) -> None:
        for P in points:
            if not self.on_curve(P):
                raise CurveError(f"point {P} is not on {self}")

    def lift_x(self, x) -> ECPoint | None:
        x = to_fraction(x)
        y = fraction_sqrt(x**3 + self.A * x + self.B)
        return None if y is None else ECPoint(x, y)

    def to_dict(self) -> dict:
        return {"A": fraction_str(self.A), "B": fraction_str(self.B), "form": "y^2 = x^3 + A*x + B"}

    def __str__(self):
        return f"y^2 = x^3 + ({fraction_str(self.A)})x + ({fraction_str(self.B)})"


def jacobian_of_quartic(q: QuarticModel) -> WeierstrassCurve:
    I, J = quartic_invariants(q)
    return WeierstrassCurve(-27 * I, -27 * J)


def is_isomorphic(E1: WeierstrassCurve, E2: WeierstrassCurve) -> tuple[bool, Fraction | None]:
    """Isomorphic over Q?  Returns the scaling u with (A2, B2) = (u^4 A1, u^6 B1)."""
    if E1.j_invariant != E2.j_invariant:
        return False, None
    if E1.A == 0:
        u = _root(E2.B / E1.B, 6)
        return u is not None, u
    if E1.B == 0:
        u = _root(E2.A / E1.A, 4)
        return u is not None, u
    u2 = (E2.B / E1.B) / (E2.A / E1.A)
    u = fraction_sqrt(u2)
    if u is None:
        return False, None
    return (E2.A == u**4 * E1.A and E2.B == u**6 * E1.B), u


# ---------------------------------------------------------------------------
# group law


def negate(E: WeierstrassCurve, P: ECPoint) -> ECPoint:
    E.require(P)
    return P if P.is_infinity else ECPoint(P.x, -P.y)


def _add(E: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y != Q.y or P.y == 0:
            return INFINITY
        lam = (3 * P.x**2 + E.A) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    return ECPoint(x3, lam * (P.x - x3) - P.y)


def add(E: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    E.require(P, Q)
    return _add(E, P, Q)


def multiply(E: WeierstrassCurve, n: int, P: ECPoint) -> ECPoint:
    E.require(P)
    if n < 0:
        n, P = -n, ECPoint(P.x, -P.y) if not P.is_infinity else P
    result, base = INFINITY, P
    while n:
        if n & 1:
            result = _add(E, result, base)
        base = _add(E, base, base)
        n >>= 1
    return result


def torsion_order(E: WeierstrassCurve, P: ECPoint, bound: int = 12) -> int | None:
    E.require(P)
    Q = P
    for n in range(1, bound + 1):
        if Q.is_infinity:
            return n
        Q = _add(E, Q, P)
    return None


def is_torsion(E: WeierstrassCurve, P: ECPoint) -> bool:
    """Rational torsion has order at most 12, so checking n <= 12 decides it."""
    return torsion_order(E, P) is not None


def count_points_mod_p(E: WeierstrassCurve, p: int) -> int:
    """#E(F_p) for a prime p > 3 of good reduction."""
    A, B = to_fraction(E.A), to_fraction(E.B)
    if A.denominator % p == 0 or B.denominator % p == 0 or E.discriminant.numerator % p == 0:
        raise CurveError(f"bad reduction at {p}")
    a = A.numerator * pow(A.denominator, -1, p) % p
    b = B.numerator * pow(B.denominator, -1, p) % p
    sq = [0] * p
    for y in range(p):
        sq[y * y % p] += 1
    return 1 + sum(sq[(x**3 + a * x + b) % p] for x in range(p))


# ---------------------------------------------------------------------------
# searches


def integral_model(E: WeierstrassCurve) -> tuple[WeierstrassCurve, int]:
    """Isomorphic model with integer coefficients and the scaling u (x' = u^2 x)."""
    u = math.lcm(E.A.denominator, E.B.denominator)
    return WeierstrassCurve(E.A * u**4, E.B * u**6), u


def _search_order(bound: int):
    for h in range(1, bound + 1):
        pairs = []
        for e in range(1, h + 1):
            ms = range(-h, h + 1) if e == h else (-h, h)
            for m in ms:
                if math.gcd(m, e) == 1:
                    pairs.append((m, e))
        pairs.sort(key=lambda me: (me[0], me[1]))
        yield from pairs


def rank_ge_one_certificate(E: WeierstrassCurve, height_bound: int = 200) -> ECPoint | None:
    """First non-torsion point with x = m/e^2 on an integral model, |m|, e <= bound."""
    if height_bound < 1:
        raise ValueError("height bound must be at least 1")
    Ei, u = integral_model(E)
    A, B = int(Ei.A), int(Ei.B)
    candidates = [(0, 1)] + list(_search_order(height_bound))
    for m, e in candidates:
        e2 = e * e
        rhs = m**3 + A * m * e2 * e2 + B * e2**3
        if rhs < 0:
            continue
        r = math.isqrt(rhs)
        if r * r != rhs:
            continue
        P = ECPoint(Fraction(m, e2), Fraction(r, e2 * e))
        if not is_torsion(Ei, P):
            return ECPoint(P.x / u**2, P.y / u**3)
    return None


def quartic_point_search(q: QuarticModel, height_bound: int) -> list[tuple[Fraction, Fraction]]:
    """Affine rational points (u, w) with u = m/n, |m|, n <= bound."""
    if height_bound < 1:
        raise ValueError("height bound must be at least 1")
    found = set()
    for n in range(1, height_bound + 1):
        for m in range(-height_bound, height_bound + 1):
            if math.gcd(m, n) != 1:
                continue
            u = Fraction(m, n)
            w = fraction_sqrt(q(u))
            if w is not None:
                found.add((u, w))
                found.add((u, -w))
    return sorted(found, key=lambda uw: (max(abs(uw[0].numerator), uw[0].denominator), uw[0], uw[1]))


# ---------------------------------------------------------------------------
# quartic to Weierstrass


def _long_to_short(a1, a2, a3, a4, a6):
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
    return WeierstrassCurve(-27 * c4, -54 * c6), b2


@dataclass(frozen=True)
class QuarticMap:
    """Birational map from a quartic model to a short Weierstrass curve.

    The chosen base point goes to the origin.  ``working`` is the quartic
    after translating (and possibly inverting) the parameter so that the base
    point sits at u = 0.
    """

    source: QuarticModel
    working: QuarticModel
    u0: Fraction | None  # None: base point at infinity (parameter inverted)
    w0: Fraction
    curve: WeierstrassCurve
    long: tuple[Fraction, ...]  # a1, a2, a3, a4, a6
    b2: Fraction

    def _short(self, x, y) -> ECPoint:
        a1, _, a3, _, _ = self.long
        return ECPoint(36 * x + 3 * self.b2, 108 * (2 * y + a1 * x + a3))

    def _working_coords(self, u, w) -> tuple[Fraction, Fraction]:
        u, w = to_fraction(u), to_fraction(w)
        if self.u0 is None:
            if u == 0:
                raise CurveError("the point u = 0 lies at infinity of the inverted model")
            return 1 / u, w / u**2
        return u - self.u0, w

    def map_point(self, u, w) -> ECPoint:
        if not self.source.on_curve(u, w):
            raise CurveError(f"({u}, {w}) is not on the quartic")
        s, v = self._working_coords(u, w)
        _, _, c, d, _ = self.working.coeffs
        a1, a2, a3, _, _ = self.long
        q = self.w0
        if q == 0:
            if s == 0:
                return INFINITY
            return self._short(d / s, d * v / s**2)
        if s == 0:
            if v == q:
                return INFINITY
            return self._short(-a2, a1 * a2 - a3)
        x = (2 * q * (v + q) + d * s) / s**2
        y = (4 * q * q * (v + q) + 2 * q * (d * s + c * s * s) - d * d * s * s / (2 * q)) / s**3
        return self._short(x, y)

    def to_dict(self) -> dict:
        return {
            "base_point": "infinity" if self.u0 is None else {"u": fraction_str(self.u0), "w": fraction_str(self.w0)},
            "working_quartic": self.working.to_dict(),
            "long_weierstrass": [fraction_str(v) for v in self.long],
            "curve": self.curve.to_dict(),
        }


def quartic_to_weierstrass(q: QuarticModel, point: Sequence | None = None) -> tuple[WeierstrassCurve, ECPoint, QuarticMap]:
    """Weierstrass model of a quartic with a rational point; the point maps to the origin.

    ``point`` is (u, w) on the quartic, or None to use a point at infinity
    (needs a square leading coefficient).
    """
    if point is None:
        s = fraction_sqrt(q.a)
        if s is None or s == 0:
            raise CurveError("no rational point given and the leading coefficient is not a nonzero square")
        working, u0, w0 = q.reverse(), None, s
    else:
        u0, w0 = to_fraction(point[0]), to_fraction(point[1])
        if not q.on_curve(u0, w0):
            raise CurveError(f"({u0}, {w0}) is not on the quartic")
        working = q.translate(u0)
    a, b, c, d, e = working.coeffs
    if w0 == 0:
        # X = d/u, Y = d w / u^2 turns w^2 = u(a u^3 + b u^2 + c u + d) into a cubic
        long = (Fraction(0), c, Fraction(0), b * d, a * d * d)
    else:
        qq = w0
        a1 = d / qq
        a2 = c - d * d / (4 * qq * qq)
        a3 = 2 * qq * b
        a4 = -4 * qq * qq * a
        long = (a1, a2, a3, a4, a2 * a4)
    curve, b2 = _long_to_short(*long)
    qmap = QuarticMap(q, working, u0, w0, curve, long, b2)
    return curve, INFINITY, qmap


@dataclass
class QuarticRankCertificate:
    quartic: QuarticModel
    quartic_points: list[tuple[Fraction, Fraction]]
    qmap: QuarticMap
    point: ECPoint | None
    source: str

    @property
    def certified(self) -> bool:
        return self.point is not None

    def to_dict(self) -> dict:
        return {
            "quartic": self.quartic.to_dict(),
            "quartic_points": [[fraction_str(u), fraction_str(w)] for u, w in self.quartic_points],
            "map": self.qmap.to_dict(),
            "non_torsion_point": None if self.point is None else self.point.to_dict(),
            "source": self.source,
            "claim": "rank >= 1" if self.point is not None else "no certificate",
        }


def quartic_rank_certificate(q: QuarticModel, height_bound: int = 30, curve_bound: int = 50) -> QuarticRankCertificate:
    """Certify positive rank of the Jacobian of a quartic with a rational point.

    Images of all quartic points found (plus the partner of the base point)
    are tested for being non-torsion before a direct search on the curve.
    """
    pts = quartic_point_search(q, height_bound)
    if not pts and fraction_sqrt(q.a) is None:
        raise CurveError("no rational point found on the quartic")
    base = next((p for p in pts if p[1] != 0), pts[0] if pts else None)
    curve, _, qmap = quartic_to_weierstrass(q, base)
    images = []
    for u, w in pts:
        try:
            images.append(((u, w), qmap.map_point(u, w)))
        except CurveError:
            continue
    if base is not None and base[1] != 0:
        images.append(((base[0], -base[1]), qmap.map_point(base[0], -base[1])))
    for src, P in images:
        if not P.is_infinity and not is_torsion(curve, P):
            return QuarticRankCertificate(q, pts, qmap, P, f"image of quartic point ({fraction_str(src[0])}, {fraction_str(src[1])})")
    P = rank_ge_one_certificate(curve, curve_bound)
    return QuarticRankCertificate(q, pts, qmap, P, "curve search" if P else "none")
