"""Point counts of the double cover w^2 = F(x, y, z) over finite fields."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .fields import ExtFieldCtx, FieldError
from .geometry import HomForm, singular_points_mod_p, smooth_mod_p

DEFAULT_MAX_COST = 5 * 10**9
COST_ENV = "K3PENCIL_MAX_COUNT_COST"


class CountRefused(RuntimeError):
    pass


class InconclusiveReduction(RuntimeError):
    pass


def good_reduction_check(F: HomForm, p: int) -> bool:
    """True iff B mod p is a smooth sextic.

    A singular point over F_p gives False; if neither a smoothness
    certificate nor a rational singular point turns up (singularities only
    over an extension), InconclusiveReduction is raised.
    """
    if p == 2:
        raise ValueError("p = 2 is excluded: the double cover is inseparable")
    if p == 3:
        raise ValueError("p = 3 divides the degree; the elimination certificate needs p >= 5")
    terms = F.primitive().int_terms()
    verdict = smooth_mod_p(terms, p, F.degree)
    if verdict is None:
        raise InconclusiveReduction(f"could not decide smoothness of B mod {p}")
    return verdict


def max_count_cost() -> int:
    raw = os.environ.get(COST_ENV)
    if raw is None:
        return DEFAULT_MAX_COST
    try:
        return int(float(raw))
    except ValueError as exc:
        raise ValueError(f"{COST_ENV} must be a number, got {raw!r}") from exc


@dataclass(frozen=True)
class CountResult:
    p: int
    k: int
    N: int
    modulus: tuple[int, ...]
    subtotals: dict = field(default_factory=dict)

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def trace(self) -> int:
        """Trace of Frobenius^k on H^2 (Lefschetz)."""
        return self.N - 1 - self.q**2

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "N": self.N,
            "trace": self.trace,
            "modulus": list(self.modulus),
            "chart_subtotals": dict(self.subtotals),
        }


def _coefficients_mod_p(F: HomForm, p: int) -> dict:
    c = F.content()
    if c.numerator % p == 0 or c.denominator % p == 0:
        raise FieldError(f"F does not reduce to a nonzero sextic mod {p} (content {c})")
    ctx_terms = {}
    for e, a in F.terms.items():
        v = a.numerator * pow(a.denominator, -1, p) % p
        if v:
            ctx_terms[e] = v
    return ctx_terms


def _power_tables(ctx: ExtFieldCtx, n: int) -> np.ndarray:
    """(n+1, q, k) digits of a^j for every element a and j = 0..n."""
    base = ctx.elements_digits()
    one = np.zeros_like(base)
    one[:, 0] = 1
    tables = [one, base]
    for _ in range(2, n + 1):
        tables.append(ctx.vec_mul(tables[-1], base))
    return np.stack(tables[: n + 1])


def count_points(
    F: HomForm,
    p: int,
    k: int = 1,
    *,
    threads: int = 1,
    force: bool = False,
    modulus: Sequence[int] | None = None,
    check_reduction: bool = True,
    progress: Callable[[int, int], None] | None = None,
) -> CountResult:
    """N = sum over plane points of 1 + chi(F(pt)) over F_{p^k}.

    The affine chart z = 1 is evaluated in bulk: for each x the coefficients
    c_j(x) of F(x, y, 1) in y are fixed field elements, so the whole row
    y -> F(x, y, 1) is one integer matrix product of the table of powers of
    y against multiplication-by-c_j matrices.
    """
    if F.degree != 6:
        raise ValueError("point counting needs a sextic")
    if check_reduction and not good_reduction_check(F, p):
        raise FieldError(f"p = {p} is a prime of bad reduction")
    ctx = ExtFieldCtx(p, k, modulus)
    q = ctx.q
    cost = q * q
    limit = max_count_cost()
    if cost > limit and not force:
        raise CountRefused(
            f"counting over F_{p}^{k} needs about {cost:.3g} evaluations, above the limit {limit:.3g}; "
            f"pass force or set {COST_ENV}"
        )
    if 7 * k * p * p >= 2**53:
        raise CountRefused(f"p = {p} is too large for exact vectorized counting")
    coef = _coefficients_mod_p(F, p)
    pw = _power_tables(ctx, 6)  # (7, q, k)

    # c_j(x) = sum_i a_{i, j, 6-i-j} x^i, for all x at once: (7, q, k)
    C = np.zeros((7, q, k), dtype=np.int64)
    for (i, j, _l), a in coef.items():
        C[j] += a * pw[i]
    C %= p
    # multiplication matrices: M[j, x, r, :] = digits of c_j(x) * t^r
    M = np.zeros((7, q, k, k), dtype=np.int64)
    for r in range(k):
        basis = np.zeros((q, k), dtype=np.int64)
        basis[:, r] = 1
        for j in range(7):
            M[j, :, r, :] = ctx.vec_mul(C[j], basis)
    Y = pw.transpose(1, 0, 2).reshape(q, 7 * k).astype(np.float64)
    table = ctx.chi_table
    weights = ctx.weights

    batch = max(1, min(q, (1 << 21) // max(q * k, 1)))
    batches = [np.arange(s, min(s + batch, q)) for s in range(0, q, batch)]

    def run(xs: np.ndarray) -> int:
        W = M[:, xs].transpose(0, 2, 1, 3).reshape(7 * k, len(xs) * k).astype(np.float64)
        V = (Y @ W).astype(np.int64) % p
        codes = V.reshape(q, len(xs), k) @ weights
        return int(table[codes].sum())

    affine = 0
    done = 0
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        for part in pool.map(run, batches):
            affine += part
            done += 1
            if progress:
                progress(done, len(batches))

    # line z = 0 without (0:1:0): points (1:y:0)
    line_vals = np.zeros((q, k), dtype=np.int64)
    for (i, j, l), a in coef.items():
        if l == 0:
            line_vals += a * pw[j]
    line = int(table[ctx.codes(line_vals % p)].sum())
    corner = 1 + ctx.chi(coef.get((0, 6, 0), 0))
    N = affine + line + corner
    result = CountResult(p, k, N, tuple(ctx.modulus), {"affine": affine, "line_z0": line, "point_010": corner})
    if abs(result.trace) > 22 * q:
        raise ArithmeticError(f"Weil bound violated: trace {result.trace} for q = {q}")
    return result


def count_points_naive(F: HomForm, p: int, k: int = 1, modulus: Sequence[int] | None = None) -> int:
    """Oracle: #{(x, y, z, w) != 0 : w^2 = F} / (q - 1) with scalar field arithmetic."""
    ctx = ExtFieldCtx(p, k, modulus)
    q = ctx.q
    coef = {e: ctx.from_rational(a) for e, a in F.terms.items()}
    roots: dict[int, int] = {}
    for w in range(q):
        s = ctx.mul(w, w)
        roots[s] = roots.get(s, 0) + 1
    pows = [[ctx.power(a, j) for j in range(F.degree + 1)] for a in range(q)]
    total = 0
    for x in range(q):
        for y in range(q):
            for z in range(q):
                if x == y == z == 0:
                    continue
                v = 0
                for (i, j, l), a in coef.items():
                    v = ctx.add(v, ctx.mul(a, ctx.mul(pows[x][i], ctx.mul(pows[y][j], pows[z][l]))))
                total += roots.get(v, 0)
    assert total % (q - 1) == 0
    return total // (q - 1)


def singular_points_over_prime_field(F: HomForm, p: int) -> list[tuple[int, int, int]]:
    return singular_points_mod_p(F.primitive().int_terms(), p)
