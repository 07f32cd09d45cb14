"""Exact univariate polynomial algebra over the rationals.

Polynomials are immutable and stored densely, lowest degree first.  Every
operation here is exact; nothing is ever rounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Rational = Fraction


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [to_fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def const(cls, a) -> UniPoly:
        return cls([a])

    @classmethod
    def x(cls) -> UniPoly:
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> UniPoly:
        out = cls([1])
        for r in roots:
            out = out * cls([-to_fraction(r), 1])
        return out

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def lc(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._c):
            return self._c[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == UniPoly([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"UniPoly({self.to_str()!r})"

    def to_str(self, var: str = "t") -> str:
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            a = self._c[i]
            if a == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and abs(a) == 1:
                body = mono
            elif mono:
                body = f"{abs(a)}*{mono}"
            else:
                body = str(abs(a))
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    __str__ = to_str

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _lift(other) -> UniPoly:
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other) -> UniPoly:
        o = self._lift(other)
        n = max(len(self._c), len(o._c))
        return UniPoly([self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly([-a for a in self._c])

    def __sub__(self, other) -> UniPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> UniPoly:
        return self._lift(other) - self

    def __mul__(self, other) -> UniPoly:
        if not isinstance(other, UniPoly):
            a = to_fraction(other)
            return UniPoly([a * c for c in self._c])
        if not self._c or not other._c:
            return UniPoly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UniPoly:
        if n < 0:
            raise ValueError("negative power")
        result, base = UniPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = len(rem) - len(other._c)
        if dq < 0:
            return UniPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        inv = 1 / other.lc
        m = len(other._c) - 1
        for k in range(dq, -1, -1):
            q = rem[k + m] * inv
            quot[k] = q
            if q:
                for j, b in enumerate(other._c):
                    rem[k + j] -= q * b
        return UniPoly(quot), UniPoly(rem[:m])

    def __floordiv__(self, other) -> UniPoly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> UniPoly:
        return divmod(self, other)[1]

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def derivative(self) -> UniPoly:
        return UniPoly([i * a for i, a in enumerate(self._c)][1:])

    def __call__(self, x):
        acc = 0
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def compose(self, inner: UniPoly) -> UniPoly:
        acc = UniPoly()
        for a in reversed(self._c):
            acc = acc * inner + a
        return acc

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def content(self) -> Fraction:
        """Positive rational c with self / c a primitive integer polynomial."""
        if not self._c:
            return Fraction(0)
        den = math.lcm(*(a.denominator for a in self._c))
        num = math.gcd(*(a.numerator * (den // a.denominator) for a in self._c))
        return Fraction(num, den)

    def primitive(self) -> UniPoly:
        """Primitive integer multiple with positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return self * (1 / c)

    def int_coeffs(self) -> list[int]:
        out = []
        for a in self._c:
            if a.denominator != 1:
                raise ValueError("polynomial has non-integer coefficients")
            out.append(a.numerator)
        return out

    def reverse(self, degree: int | None = None) -> UniPoly:
        d = self.degree if degree is None else degree
        return UniPoly([self[d - i] for i in range(d + 1)])


X = UniPoly.x()


# ---------------------------------------------------------------------------
# integer polynomial kernels (lists, low degree first, no trailing zeros)


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _icontent(a: Sequence[int]) -> int:
    return math.gcd(*a) if a else 0


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for j, c in enumerate(b):
            r[shift + j] -= lr * c
        _trim(r)
        e -= 1
    if e > 0:
        f = lb**e
        r = [f * c for c in r]
    return r


def _int_model(p: UniPoly) -> tuple[Fraction, list[int]]:
    c = p.content()
    return c, [int(a / c) for a in p.coeffs]


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the subresultant remainder sequence over the integers.

    gcd(0, 0) is the zero polynomial.
    """
    if a.is_zero() and b.is_zero():
        return UniPoly()
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    _, A = _int_model(a)
    _, B = _int_model(b)
    if len(B) > len(A):
        A, B = B, A
    g = h = 1
    while True:
        delta = len(A) - len(B)
        R = _prem(A, B)
        if not R:
            break
        if len(R) == 1:
            return UniPoly([1])
        A, B = B, [c // (g * h**delta) for c in R]
        g = A[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = g**delta // h ** (delta - 1)
    return UniPoly(B).monic()


# ---------------------------------------------------------------------------
# squarefree decomposition


@dataclass(frozen=True)
class SquarefreeDecomposition:
    parts: tuple[tuple[UniPoly, int], ...]
    unit: Fraction

    def expand(self) -> UniPoly:
        out = UniPoly([self.unit])
        for f, m in self.parts:
            out = out * f**m
        return out

    @property
    def multiplicities(self) -> list[int]:
        return [m for _, m in self.parts]


def squarefree_decompose(f: UniPoly) -> SquarefreeDecomposition:
    """Yun's algorithm; factors are primitive integer polynomials, lc > 0."""
    if f.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    if f.degree == 0:
        return SquarefreeDecomposition((), f.lc)
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    parts = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            parts.append((a.primitive(), i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    prod = UniPoly([1])
    for g, m in parts:
        prod = prod * g**m
    unit = f.lc / prod.lc
    return SquarefreeDecomposition(tuple(parts), unit)


def squarefree_part(f: UniPoly) -> UniPoly:
    if f.degree <= 0:
        return UniPoly([1])
    return f.exact_div(poly_gcd(f, f.derivative())).primitive()


# ---------------------------------------------------------------------------
# resultants and discriminants


def _check_nonzero(*polys: UniPoly) -> None:
    for p in polys:
        if p.is_zero():
            raise ValueError("resultant of the zero polynomial is undefined")


def resultant(a: UniPoly, b: UniPoly) -> Fraction:
    """Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a.

    Equal to the Sylvester determinant with a's rows on top.  Computed with
    the subresultant algorithm on primitive integer models.
    """
    _check_nonzero(a, b)
    m, n = a.degree, b.degree
    if m == 0:
        return a.lc**n
    if n == 0:
        return b.lc**m
    ca, A = _int_model(a)
    cb, B = _int_model(b)
    scale = ca**n * cb**m
    s = 1
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) % 2 == 1 and (len(B) - 1) % 2 == 1:
            s = -s
    g = h = 1
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        R = _prem(A, B)
        if not R:
            return Fraction(0)
        A, B = B, [c // (g * h**delta) for c in R]
        g = A[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
        if len(B) == 1:
            da = len(A) - 1
            hh = B[0] ** da // h ** (da - 1) if da >= 1 else 1
            return scale * s * hh


def sylvester_matrix(a: UniPoly, b: UniPoly) -> list[list[Fraction]]:
    m, n = a.degree, b.degree
    size = m + n
    rows = []
    ca = list(reversed(a.coeffs))
    cb = list(reversed(b.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + ca + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + cb + [Fraction(0)] * (size - n - 1 - i))
    return rows


def determinant(mat: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    m = [[to_fraction(v) for v in row] for row in mat]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                row_r, row_c = m[r], m[col]
                for k in range(col, n):
                    row_r[k] -= f * row_c[k]
    return det


def sylvester_resultant(a: UniPoly, b: UniPoly) -> Fraction:
    """Resultant straight from the Sylvester determinant (a's rows on top)."""
    _check_nonzero(a, b)
    if a.degree == 0 and b.degree == 0:
        return Fraction(1)
    return determinant(sylvester_matrix(a, b))


def discriminant(f: UniPoly) -> Fraction:
    """(-1)^(n(n-1)/2) Res(f, f') / lc(f); zero iff f has a repeated root."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant of a constant polynomial")
    if n == 1:
        return Fraction(1)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


def binary_discriminant(f: UniPoly, degree: int) -> Fraction:
    """Discriminant of f viewed as a binary form of the given formal degree.

    A root at infinity of multiplicity one contributes lc^2; a repeated
    root at infinity makes the discriminant vanish.
    """
    if f.is_zero():
        return Fraction(0)
    if degree <= 1:
        return Fraction(1)
    deficit = degree - f.degree
    if deficit >= 2:
        return Fraction(0)
    if deficit == 1:
        return f.lc**2 * (discriminant(f) if f.degree >= 1 else 1)
    return discriminant(f)


# ---------------------------------------------------------------------------
# rational roots


def _divisors(n: int) -> list[int]:
    from sympy import divisors

    return divisors(abs(n))


def rational_roots(f: UniPoly) -> list[Fraction]:
    """All rational roots of f, each listed once, in increasing order."""
    if f.is_zero():
        raise ValueError("rational roots of the zero polynomial")
    roots: set[Fraction] = set()
    g = squarefree_part(f) if f.degree > 0 else f
    coeffs = g.primitive().int_coeffs() if g.degree > 0 else []
    if not coeffs:
        return []
    if coeffs[0] == 0:
        roots.add(Fraction(0))
        k = next(i for i, c in enumerate(coeffs) if c != 0)
        coeffs = coeffs[k:]
    if len(coeffs) > 1:
        poly = UniPoly(coeffs)
        a0, an = coeffs[0], coeffs[-1]
        for q in _divisors(an):
            for p in _divisors(a0):
                if math.gcd(p, q) != 1:
                    continue
                for r in (Fraction(p, q), Fraction(-p, q)):
                    if poly(r) == 0:
                        roots.add(r)
    return sorted(roots)


# ---------------------------------------------------------------------------
# cyclotomic polynomials and Newton identities


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> UniPoly:
    """n-th cyclotomic polynomial: t^n - 1 divided by Phi_d for d | n, d < n."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    f = UniPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            f = f.exact_div(cyclotomic(d))
    return f


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def power_sums_from_poly(f: UniPoly, m: int) -> list[Fraction]:
    """Power sums p_1..p_m of the roots of the monic polynomial f."""
    if f.is_zero() or f.lc != 1:
        raise ValueError("power sums need a monic polynomial")
    d = f.degree
    e = [Fraction(1)] + [(-1) ** i * f[d - i] for i in range(1, d + 1)]
    sums: list[Fraction] = []
    for k in range(1, m + 1):
        s = Fraction(0)
        for i in range(1, min(k - 1, d) + 1):
            s += (-1) ** (i - 1) * e[i] * sums[k - i - 1]
        if k <= d:
            s += (-1) ** (k - 1) * k * e[k]
        sums.append(s)
    return sums


def poly_from_power_sums(sums: Sequence, d: int) -> UniPoly:
    """Monic degree-d polynomial whose roots have the given power sums p_1..p_d."""
    if len(sums) < d:
        raise ValueError(f"need {d} power sums, got {len(sums)}")
    p = [to_fraction(s) for s in sums]
    e = [Fraction(1)]
    for k in range(1, d + 1):
        s = sum(((-1) ** (i - 1) * e[k - i] * p[i - 1] for i in range(1, k + 1)), Fraction(0))
        e.append(s / k)
    coeffs = [Fraction(0)] * (d + 1)
    for i in range(d + 1):
        coeffs[d - i] = (-1) ** i * e[i]
    return UniPoly(coeffs)


def interpolate(xs: Sequence, ys: Sequence) -> UniPoly:
    """Newton divided-difference interpolation through (xs[i], ys[i])."""
    xs = [to_fraction(x) for x in xs]
    coef = [to_fraction(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = UniPoly([coef[-1]])
    for i in range(n - 2, -1, -1):
        out = out * UniPoly([-xs[i], 1]) + coef[i]
    return out


def fraction_sqrt(a: Fraction) -> Fraction | None:
    """Exact rational square root, or None if a is not a rational square."""
    a = to_fraction(a)
    if a < 0:
        return None
    n, d = a.numerator, a.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def fraction_str(a: Fraction) -> str:
    a = to_fraction(a)
    return f"{a.numerator}/{a.denominator}"
