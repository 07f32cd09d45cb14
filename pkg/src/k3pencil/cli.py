"""Command-line interface: ``k3pencil <command> ...`` with JSON on stdout."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import charpoly as cpm
from .algebra import fraction_str
from .counting import count_points
from .elliptic import (
    QuarticModel,
    WeierstrassCurve,
    is_isomorphic,
    is_torsion,
    jacobian_of_quartic,
    quartic_invariants,
    quartic_point_search,
    quartic_rank_certificate,
    rank_ge_one_certificate,
    torsion_order,
)
from .fibration import (
    build_fibration,
    certify_saliently_ramified,
    classify_fiber,
    tangent_multisection_search,
)
from .geometry import (
    HomForm,
    Line,
    ProjPoint,
    certify_smooth,
    find_rational_singular_points,
    intersection_profile,
    rational_points_on_B,
    singularity_type,
)
from .lattice import GramMatrix2, ShiodaInput, isotropic_primitive_classes, nef_constraint_filter, shioda_tate_rank
from .parser import parse_polynomial
from .suites import load_example, verify_example

SCHEMA = "k3pencil/1"


class CliError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument helpers


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _triple(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = text.replace(":", ",").split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three coordinates a:b:c, got {text!r}")
    return tuple(_fraction(p.strip()) for p in parts)


def _point(text: str) -> ProjPoint:
    return ProjPoint(_triple(text))


def _line(text: str) -> Line:
    """Line as 'a:b:c' coefficients or as a linear form like '11y+7z'."""
    if any(ch in text for ch in "xyz"):
        body = text.split("=")[0]
        _, terms = parse_polynomial(body, 1)
        return Line(tuple(terms.get(e, 0) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))))
    return Line(_triple(text))


def _read_form(args) -> HomForm:
    if getattr(args, "example", None):
        return load_example(args.example)
    if not getattr(args, "sextic", None):
        raise CliError("give a sextic file (or --example N)")
    text = sys.stdin.read() if args.sextic == "-" else Path(args.sextic).read_text()
    F = HomForm.parse(text)
    if F.degree != 6:
        raise CliError(f"expected a sextic, got a form of degree {F.degree}")
    return F


def _progress(enabled: bool):
    if not enabled:
        return None

    def report(done: int, total: int) -> None:
        print(f"\rcounting: {done}/{total} batches", end="" if done < total else "\n", file=sys.stderr, flush=True)

    return report


# ---------------------------------------------------------------------------
# commands


def cmd_analyze(args) -> dict:
    F = _read_form(args)
    report: dict = {"input": F.to_str()}
    report["smoothness"] = "skipped" if args.no_smooth else certify_smooth(F).to_dict()
    pts = rational_points_on_B(F, args.height)
    report["rational_points"] = {"height_bound": args.height, "sweep_point": [0, 0, 1], "points": [list(p) for p in pts]}
    sing = find_rational_singular_points(F, args.height)
    report["singular_points"] = [
        {"point": list(s), "type": singularity_type(F, tuple(s))} for s in sing
    ]
    report["tritangent_lines"] = {"height_bound": args.line_height, "lines": _tritangents(F, args.line_height)}
    return report


def _tritangents(F: HomForm, bound: int) -> list[dict]:
    seen: set[Line] = set()
    out = []
    rng = range(-bound, bound + 1)
    for a in rng:
        for b in rng:
            for c in rng:
                if a == b == c == 0:
                    continue
                line = Line(a, b, c)
                if line in seen:
                    continue
                seen.add(line)
                prof = intersection_profile(F, line)
                if prof.line_in_B or prof.is_all_even():
                    out.append({"line": line.to_str(), "component": prof.line_in_B, "profile": prof.multiplicities})
    out.sort(key=lambda d: d["line"])
    return out


def cmd_pencil(args) -> dict:
    F = _read_form(args)
    fib = build_fibration(F, tuple(args.base))
    special = []
    for t in fib.singular_rational_parameters():
        cls = classify_fiber(fib, t)
        special.append({"t": "infinity" if t is None else fraction_str(t), "line": fib.pencil.line_at(t).to_str(), **cls.to_dict()})
    return {"input": F.to_str(), "fibration": fib.to_dict(), "rational_singular_members": special}


def cmd_multisection(args) -> dict:
    F = _read_form(args)
    fib = build_fibration(F, tuple(args.base))
    cert = certify_saliently_ramified(fib, args.line)
    return {"input": F.to_str(), "fibration_kind": fib.kind, "certificate": cert.to_dict()}


def cmd_tangent_search(args) -> dict:
    F = _read_form(args)
    fib = build_fibration(F, tuple(args.base))
    certs = tangent_multisection_search(fib, args.height)
    return {"input": F.to_str(), "height_bound": args.height, "certificates": [c.to_dict() for c in certs]}


def cmd_shioda(args) -> dict:
    data = ShiodaInput(args.rho, tuple(args.fibers), not args.no_section, not args.nontrivial_trace)
    return {"rho": args.rho, "fiber_component_counts": list(args.fibers), "rank": shioda_tate_rank(data)}


def cmd_lattice(args) -> dict:
    g = GramMatrix2(*args.gram)
    classes = isotropic_primitive_classes(g)
    out = {"gram": [[g.a, g.b], [g.b, g.c]], "isotropic_classes": [list(v) for v in classes]}
    if args.constraint:
        cons = [((c[0], c[1]), c[2]) for c in args.constraint]
        out["nef_filtered"] = [list(v) for v in nef_constraint_filter(g, classes, cons)]
    out["genus1_class_exists"] = bool(out.get("nef_filtered", classes))
    return out


def cmd_count(args) -> dict:
    F = _read_form(args)
    res = count_points(
        F,
        args.p,
        args.k,
        threads=args.threads,
        force=args.force_large,
        modulus=args.modulus,
        progress=_progress(not args.quiet),
    )
    return {"input": F.to_str(), "count": res.to_dict()}


def cmd_charpoly(args) -> dict:
    if args.builtin:
        cp = cpm.load_phi20()
    else:
        if not args.file:
            raise CliError("give --file or --builtin")
        coeffs = json.loads(Path(args.file).read_text())
        if isinstance(coeffs, dict):
            coeffs = coeffs["coefficients"]
        if args.p is None:
            raise CliError("--p is required with --file")
        cp = cpm.CharPolyData.from_json(coeffs, args.p, args.sign)
    alg = list(args.algebraic or [])
    full = cpm.full_polynomial(cp, alg) if alg else cp
    out = {
        "factor": cp.to_dict(),
        "algebraic_eigenvalues": alg,
        "functional_equation": cpm.functional_equation_check(cp),
        "unit_root_eigenvalues": cpm.count_unit_root_eigenvalues(full),
        "picard_upper_bound": cpm.van_luijk_rho_bound(full),
    }
    if full.degree == cpm.H2_RANK and args.predict:
        out["predicted_counts"] = {str(k): cpm.predicted_count([cp], alg, cp.p, k) for k in args.predict}
    return out


def cmd_elliptic(args) -> dict:
    if args.action == "rank-cert":
        E = WeierstrassCurve(args.A, args.B)
        P = rank_ge_one_certificate(E, args.bound)
        return {
            "curve": E.to_dict(),
            "height_bound": args.bound,
            "non_torsion_point": None if P is None else P.to_dict(),
            "claim": "rank >= 1" if P else "no certificate within bound",
        }
    if args.action == "torsion":
        E = WeierstrassCurve(args.A, args.B)
        P = E.point(args.x, args.y)
        return {"curve": E.to_dict(), "point": P.to_dict(), "torsion": is_torsion(E, P), "order": torsion_order(E, P)}
    q = QuarticModel(*args.coeffs)
    I, J = quartic_invariants(q)
    jac = jacobian_of_quartic(q)
    out = {"quartic": q.to_dict(), "I": fraction_str(I), "J": fraction_str(J), "jacobian": jac.to_dict()}
    out["points"] = [[fraction_str(u), fraction_str(w)] for u, w in quartic_point_search(q, args.bound)]
    cert = quartic_rank_certificate(q, args.bound)
    out["certificate"] = cert.to_dict()
    out["model_isomorphic_to_jacobian"] = is_isomorphic(cert.qmap.curve, jac)[0]
    if args.compare:
        E = WeierstrassCurve(*args.compare)
        ok, u = is_isomorphic(cert.qmap.curve, E)
        out["isomorphic_to_given"] = {"curve": E.to_dict(), "isomorphic": ok, "scaling": None if u is None else fraction_str(u)}
    return out


def cmd_verify_example(args) -> dict:
    rep = verify_example(args.n, with_k3=args.with_k3, threads=args.threads)
    return rep.to_dict()


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="k3pencil", description="Pencils of lines on double planes branched along a sextic.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_sextic(p):
        p.add_argument("sextic", nargs="?", help="file with the sextic F(x,y,z) ('-' for stdin)")
        p.add_argument("--example", type=int, choices=(1, 2, 3), help="use a bundled example sextic")
        return p

    p = with_sextic(sub.add_parser("analyze", help="smoothness, rational points, singular points, tritangents"))
    p.add_argument("--height", type=int, default=2, help="height bound for the rational point sweep")
    p.add_argument("--line-height", type=int, default=2, help="coefficient bound for the tritangent scan")
    p.add_argument("--no-smooth", action="store_true", help="skip the smoothness certificate")
    p.set_defaults(func=cmd_analyze)

    p = with_sextic(sub.add_parser("pencil", help="fibration from the pencil through a point"))
    p.add_argument("--base", type=_triple, required=True, help="base point x:y:z")
    p.set_defaults(func=cmd_pencil)

    p = with_sextic(sub.add_parser("multisection", help="saliently ramified test for one line"))
    p.add_argument("--base", type=_triple, required=True)
    p.add_argument("--line", type=_line, required=True, help="a:b:c or a linear form such as 11y+7z")
    p.set_defaults(func=cmd_multisection)

    p = with_sextic(sub.add_parser("tangent-search", help="tangent lines at rational points giving bisections"))
    p.add_argument("--base", type=_triple, required=True)
    p.add_argument("--height", type=int, default=2)
    p.set_defaults(func=cmd_tangent_search)

    p = sub.add_parser("shioda", help="Shioda-Tate generic rank")
    p.add_argument("--rho", type=int, required=True)
    p.add_argument("--fibers", type=int, nargs="*", default=[], help="total component counts of reducible fibers")
    p.add_argument("--no-section", action="store_true")
    p.add_argument("--nontrivial-trace", action="store_true")
    p.set_defaults(func=cmd_shioda)

    p = sub.add_parser("lattice", help="isotropic classes of a rank-2 lattice")
    p.add_argument("--gram", type=int, nargs=3, required=True, metavar=("A", "B", "C"), help="Gram matrix (A B; B C)")
    p.add_argument("--constraint", type=int, nargs=3, action="append", metavar=("V1", "V2", "MIN"))
    p.set_defaults(func=cmd_lattice)

    p = with_sextic(sub.add_parser("count", help="points of w^2 = F over F_{p^k}"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--force-large", action="store_true", help="ignore the cost limit")
    p.add_argument("--modulus", type=lambda s: [int(c) for c in s.split(",")], help="c0,c1,...,1 (lowest first)")
    p.add_argument("--quiet", action="store_true", help="no progress on stderr")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("charpoly", help="checks on a Frobenius characteristic polynomial factor")
    p.add_argument("--file", help="JSON array of decimal strings, lowest degree first")
    p.add_argument("--builtin", action="store_true", help="use the bundled degree-20 factor at p = 19")
    p.add_argument("--p", type=int)
    p.add_argument("--sign", type=int, default=1, choices=(1, -1))
    p.add_argument("--algebraic", type=int, nargs="*", help="eigenvalues of the algebraic part")
    p.add_argument("--predict", type=int, nargs="*", help="predict point counts for these k")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("elliptic", help="elliptic curve certificates")
    esub = p.add_subparsers(dest="action", required=True)
    e = esub.add_parser("rank-cert", help="search for a non-torsion point on y^2 = x^3 + A x + B")
    e.add_argument("--A", type=_fraction, required=True)
    e.add_argument("--B", type=_fraction, required=True)
    e.add_argument("--bound", type=int, default=200)
    e = esub.add_parser("torsion", help="torsion test for a point")
    e.add_argument("--A", type=_fraction, required=True)
    e.add_argument("--B", type=_fraction, required=True)
    e.add_argument("--x", type=_fraction, required=True)
    e.add_argument("--y", type=_fraction, required=True)
    e = esub.add_parser("quartic", help="w^2 = a u^4 + b u^3 + c u^2 + d u + e")
    e.add_argument("--coeffs", type=_fraction, nargs=5, required=True, metavar=("a", "b", "c", "d", "e"))
    e.add_argument("--bound", type=int, default=30)
    e.add_argument("--compare", type=_fraction, nargs=2, metavar=("A", "B"), help="test isomorphism with this curve")
    p.set_defaults(func=cmd_elliptic)

    p = sub.add_parser("verify-example", help="run the verification suite of a bundled example")
    p.add_argument("n", type=int, choices=(1, 2, 3))
    p.add_argument("--with-k3", action="store_true", help="include the count over F_19^3")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify_example)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        body = args.func(args)
    except (CliError, ValueError, ArithmeticError, RuntimeError, OSError) as exc:
        print(json.dumps({"schema": SCHEMA, "command": args.command, "error": f"{type(exc).__name__}: {exc}"}, indent=2))
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = {"schema": SCHEMA, "command": args.command, **body}
    print(json.dumps(out, indent=2))
    if args.command == "verify-example" and not body["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
