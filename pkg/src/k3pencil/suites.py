"""Bundled example sextics and their end-to-end verification suites."""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Any, Callable

from . import charpoly as cpm
from .counting import count_points, good_reduction_check
from .elliptic import (
    QuarticModel,
    WeierstrassCurve,
    is_isomorphic,
    is_torsion,
    quartic_rank_certificate,
    quartic_to_weierstrass,
    rank_ge_one_certificate,
)
from .fibration import (
    GENUS1,
    GENUS2,
    INTEGRAL_GENUS1,
    SMOOTH_GENUS1,
    build_fibration,
    certify_saliently_ramified,
    classify_fiber,
    classify_line_pullback,
    tangent_multisection_search,
)
from .geometry import (
    HomForm,
    Line,
    certify_smooth,
    intersection_profile,
    is_tritangent,
    singularity_type,
    tangent_line,
)
from .lattice import GramMatrix2, ShiodaInput, isotropic_primitive_classes, shioda_tate_rank

CHECKSUMS = {
    "example1.sextic": "ae25e51cb0950e3406ac2d5fa6933c2125ce79e7847fefe02fd20c6d80228e42",
    "example2.sextic": "11dd488f5aed715662bde8ca4098e05c03bf4cf5916bd8c8e9cc3e95263d9aa2",
    "example3.sextic": "649f8a63bcb5b12dcdd7e26b86220a430b3b8d1ca1f138da7fe773962fb6ce46",
    "phi20_p19.json": "a797f0482ff0d670689375271497fd8ad68af89f62ef720500149d0179c2d79d",
}

# normalization of the pullback of the tangent line at (1:0:0) in example 3,
# as a form in (x, y)
EXAMPLE3_QUARTIC = (
    "x^4 - 4078/3577*x^3*y + 81451/25039*x^2*y^2 - 1540220/175273*x*y^3 + 16771780/1226911*y^4"
)


class ChecksumError(RuntimeError):
    pass


def data_bytes(name: str) -> bytes:
    raw = resources.files("k3pencil.data").joinpath(name).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if CHECKSUMS.get(name) != digest:
        raise ChecksumError(f"bundled file {name} does not match its frozen checksum")
    return raw


def load_example(n: int) -> HomForm:
    if n not in (1, 2, 3):
        raise ValueError("examples are numbered 1, 2, 3")
    return HomForm.parse(data_bytes(f"example{n}.sextic").decode(), 6)


def set_to_zero(F: HomForm, var: int) -> HomForm:
    return HomForm(F.degree, {e: c for e, c in F.terms.items() if e[var] == 0})


@dataclass
class Check:
    name: str
    expected: Any
    computed: Any
    passed: bool
    optional: bool = False
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "passed": self.passed,
            "optional": self.optional,
            "seconds": round(self.seconds, 3),
        }


def _jsonable(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return str(v)


@dataclass
class SuiteReport:
    example: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.optional)

    def check(self, name: str, expected, fn: Callable[[], Any], optional: bool = False, compare=None) -> Check:
        t0 = time.perf_counter()
        try:
            computed = fn()
            ok = compare(expected, computed) if compare else computed == expected
        except Exception as exc:  # a crashing check is a failed check
            computed, ok = f"error: {type(exc).__name__}: {exc}", False
        c = Check(name, expected, computed, bool(ok), optional, time.perf_counter() - t0)
        self.checks.append(c)
        return c

    def to_dict(self) -> dict:
        return {
            "example": self.example,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _mults(F, line):
    return intersection_profile(F, line).multiplicities


def verify_example_1(with_k3: bool = False, threads: int = 1) -> SuiteReport:
    r = SuiteReport(1)
    F = load_example(1)
    x0, z0 = Line(1, 0, 0), Line(0, 0, 1)
    r.check("sextic has 14 terms", 14, lambda: len(F.terms))
    r.check("B is smooth", "smooth", lambda: certify_smooth(F).status)
    r.check("F on x=0", HomForm.parse("16*y^4*z^2"), lambda: set_to_zero(F, 0))
    r.check("profile of x=0", [4, 2], lambda: _mults(F, x0))
    r.check("x=0 is tritangent", True, lambda: is_tritangent(F, x0))
    r.check("F(0,1,1) (w = +-4 over P)", Fraction(16), lambda: F((0, 1, 1)))
    r.check("F on z=0", HomForm.parse("x*y^2*(2x^3+x^2*y+x*y^2+y^3)"), lambda: set_to_zero(F, 2))
    r.check("profile of z=0", [2, 1, 1, 1, 1], lambda: _mults(F, z0))
    r.check("z=0 pullback class", [INTEGRAL_GENUS1, 1], lambda: [classify_line_pullback(F, z0).tag, classify_line_pullback(F, z0).genus])
    r.check("tangent line at (1:0:0)", z0, lambda: tangent_line(F, (1, 0, 0)))

    fib = build_fibration(F, (0, 1, 1))
    r.check("fibration at (0:1:1) kind", GENUS2, lambda: fib.kind)
    r.check("pencil member at t is z = y + t*x", Line(2, 1, -1), lambda: fib.pencil.line_at(2))
    r.check("z=0 saliently ramified bisection", True, lambda: certify_saliently_ramified(fib, z0).saliently_ramified)
    r.check(
        "tangent search finds z=0",
        True,
        lambda: any(c.line == z0 for c in tangent_multisection_search(fib, 1)),
    )

    r.check("isotropic classes of (2 1; 1 -2)", [], lambda: isotropic_primitive_classes(GramMatrix2(2, 1, -2)))
    r.check("Shioda-Tate rank (rho 4, fibers [2])", 1, lambda: shioda_tate_rank(ShiodaInput(4, (2,))))

    phi = cpm.load_phi20()
    full = cpm.full_polynomial(phi, [19, 19])
    r.check("degree-20 factor: functional equation, sign +1", True, lambda: cpm.functional_equation_check(phi))
    r.check("degree-20 factor: constant term", 19**20, lambda: phi.coefficients()[0])
    r.check("degree-20 factor: T^19 coefficient", -21, lambda: phi.coefficients()[19])
    r.check("degree-20 factor: linear coefficient", -21 * 19**18, lambda: phi.coefficients()[1])
    r.check("unit-root eigenvalues of (T-19)^2 * factor", 2, lambda: cpm.count_unit_root_eigenvalues(full))
    r.check("unit-root eigenvalues of the factor alone", 0, lambda: cpm.count_unit_root_eigenvalues(phi))
    r.check("good reduction at 19", True, lambda: good_reduction_check(F, 19))
    r.check("good reduction at 97", True, lambda: good_reduction_check(F, 97))
    ks = (1, 2, 3) if with_k3 else (1, 2)
    for k in ks:
        r.check(
            f"count over F_19^{k} matches prediction",
            cpm.predicted_count([phi], [19, 19], 19, k),
            lambda k=k: count_points(F, 19, k, threads=threads).N,
        )

    E0 = WeierstrassCurve(864, 81216)
    q = QuarticModel(2, 1, 1, 1, 0)
    r.check(
        "quartic 2u^4+u^3+u^2+u is isomorphic to y^2 = x^3+864x+81216",
        True,
        lambda: is_isomorphic(quartic_to_weierstrass(q, (0, 0))[0], E0)[0],
    )

    def nontorsion():
        P = rank_ge_one_certificate(E0)
        return P is not None and not is_torsion(E0, P)

    r.check("non-torsion point (rank >= 1)", True, nontorsion)
    return r


def verify_example_2(samples: int = 50) -> SuiteReport:
    r = SuiteReport(2)
    F = load_example(2)
    R = (1, 0, 0)
    r.check("(1:0:0) is a node", "node", lambda: singularity_type(F, R))
    r.check("smoothness certificate finds (1:0:0)", ["singular", [[1, 0, 0]]], lambda: (lambda c: [c.status, [list(w) for w in c.witnesses]])(certify_smooth(F)))
    r.check("F on x=0", HomForm.parse("5*y^4*z^2"), lambda: set_to_zero(F, 0))
    r.check("profile of x=0", [4, 2], lambda: _mults(F, Line(1, 0, 0)))
    r.check("x=0 is tritangent", True, lambda: is_tritangent(F, Line(1, 0, 0)))
    r.check("profile of y=0 (line through R and P)", [2, 1, 1, 1, 1], lambda: _mults(F, Line(0, 1, 0)))
    r.check("Shioda-Tate rank (rho 5, fibers [2, 3])", 0, lambda: shioda_tate_rank(ShiodaInput(5, (2, 3))))
    fibP = build_fibration(F, (0, 0, 1))
    r.check("fibration at (0:0:1) kind", GENUS2, lambda: fibP.kind)
    r.check("z=0 saliently ramified bisection", True, lambda: certify_saliently_ramified(fibP, Line(0, 0, 1)).saliently_ramified)
    r.check("F on z=0 equals the example-1 restriction", set_to_zero(load_example(1), 2), lambda: set_to_zero(F, 2))
    fibR = build_fibration(F, R)
    r.check("fibration at (1:0:0) kind", GENUS1, lambda: fibR.kind)

    def sampled():
        bad = []
        for i in range(samples):
            t = Fraction(i - samples // 2, 1 + i % 3)
            smooth = classify_fiber(fibR, t).tag == SMOOTH_GENUS1
            if smooth != (fibR.discriminant_at(t) != 0):
                bad.append(str(t))
        return bad

    r.check(f"{samples} sampled fibers at (1:0:0): smooth genus 1 iff discriminant nonzero", [], sampled)
    return r


def verify_example_3() -> SuiteReport:
    r = SuiteReport(3)
    F = load_example(3)
    TQ = Line(0, 11, 7)
    r.check("tangent line at (1:0:0)", TQ, lambda: tangent_line(F, (1, 0, 0)))
    r.check("distinct intersection points of the tangent line", 5, lambda: intersection_profile(F, TQ).distinct_count)
    r.check("F(0,1,0)", Fraction(63, 73), lambda: F((0, 1, 0)))
    restricted = F.linear_substitute([[1, 0, 0], [0, 1, 0], [0, Fraction(-11, 7), 0]])
    r.check(
        "F on the tangent line equals y^2 times the normalization quartic",
        HomForm.parse("y^2") * HomForm.parse(EXAMPLE3_QUARTIC),
        lambda: restricted,
    )
    fib = build_fibration(F, (0, 1, 0))
    r.check("fibration at (0:1:0) kind", GENUS2, lambda: fib.kind)
    r.check("tangent line saliently ramified", True, lambda: certify_saliently_ramified(fib, TQ).saliently_ramified)
    r.check("tangent search finds 11y+7z", True, lambda: any(c.line == TQ for c in tangent_multisection_search(fib, 1)))
    quartic = QuarticModel.from_poly(
        HomForm.parse(EXAMPLE3_QUARTIC).restrict((1, 0, 0), (0, 1, 0)).poly
    )

    def rank_cert():
        cert = quartic_rank_certificate(quartic)
        return bool(cert.quartic_points) and cert.certified

    r.check("quartic has a rational point and rank >= 1", True, rank_cert)
    return r


def verify_example(n: int, with_k3: bool = False, threads: int = 1) -> SuiteReport:
    if n == 1:
        return verify_example_1(with_k3, threads)
    if n == 2:
        return verify_example_2()
    if n == 3:
        return verify_example_3()
    raise ValueError("examples are numbered 1, 2, 3")
