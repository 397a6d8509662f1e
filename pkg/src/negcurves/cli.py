"""Command-line front end: ``negcurves <subcommand>`` or ``python -m negcurves``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import geometry as geo
from . import jsonio, render
from .errors import NegCurvesError
from .families import Kind, make_triangle
from .laurent import to_text, vanishing_order
from .mds import classify
from .pell import PellSolution, chain_solution, enumerate_chain
from .recurrence import xi_family
from .search import verify_classification
from .solver import NegativeCurve, curve_from_poly, solve_curve
from .verify import run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class UsageError(Exception):
    pass


def rational(text: str) -> Fraction:
    """argparse type: integers or P/Q, nothing else (no decimals)."""
    if not _RATIONAL.match(text.strip()):
        raise argparse.ArgumentTypeError(f"expected an integer or P/Q, got {text!r}")
    value = Fraction(text.strip())
    return value


def pair(text: str) -> tuple[int, int]:
    try:
        M, N = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected M,N, got {text!r}") from None
    return M, N


def _solution(args) -> PellSolution:
    if args.mn is not None:
        M, N = args.mn
        try:
            return PellSolution(args.k, M, N)
        except ValueError as e:
            raise UsageError(str(e)) from None
    if args.n is None:
        raise UsageError("one of --n or --mn is required")
    try:
        return chain_solution(args.k, args.n)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _family_triangle(args):
    s = _solution(args)
    alpha = getattr(args, "alpha", None) or Fraction(0)
    beta = getattr(args, "beta", None) or Fraction(0)
    try:
        return make_triangle(args.family, s, alpha, beta)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _emit(args, text: str, doc: Optional[dict] = None):
    if getattr(args, "json", False) and doc is not None:
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def cmd_pell(args) -> int:
    chain = enumerate_chain(args.k, args.count)
    lines = [f"(M+N)^2 = {args.k} M N + 1"]
    lines += [f"  ({s.M}, {s.N})" for s in chain]
    _emit(args, "\n".join(lines), jsonio.encode(chain))
    return EXIT_OK


def cmd_triangle(args) -> int:
    t = _family_triangle(args)
    tri = t.triangle
    mult = geo.normal_fan_multiplicities(list(tri.vertices))
    text = "\n".join([
        str(t),
        "vertices: " + ", ".join(f"({jsonio.q(v.x)}, {jsonio.q(v.y)})" for v in tri.vertices),
        f"m = {t.m}, h = {t.h}, b = {jsonio.q(t.b)}",
        f"lattice points: {geo.lattice_count(tri)}",
        f"column profile: {list(geo.column_profile(tri))}",
        f"multiplicities: {list(mult)}",
    ])
    if args.svg:
        poly = None
        if t.is_base:
            poly = xi_family(t.kind, t.solution)
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render.svg(tri, poly, title=str(t)))
    if args.tikz:
        with open(args.tikz, "w", encoding="utf-8") as fh:
            fh.write(render.tikz(tri, xi_family(t.kind, t.solution) if t.is_base else None))
    _emit(args, text, jsonio.encode(t))
    return EXIT_OK


def _curve_text(nc: NegativeCurve) -> str:
    return "\n".join([
        to_text(nc.poly),
        f"vanishing order: {vanishing_order(nc.poly)}",
        f"C.C = {jsonio.q(nc.self_intersection)}",
        f"irreducibility: {nc.irreducibility.value}",
    ])


def cmd_curve(args) -> int:
    t = _family_triangle(args)
    by_solver = solve_curve(t, t.m) if args.method in ("solver", "both") else None
    by_rec = None
    if args.method in ("recurrence", "both"):
        by_rec = curve_from_poly(t, t.m, xi_family(t.kind, t.solution))
    nc = by_rec or by_solver
    agree = None
    if args.method == "both":
        agree = by_rec.poly == by_solver.poly
    text = _curve_text(nc)
    if agree is not None:
        text += "\nmethods agree" if agree else "\nMETHODS DISAGREE"
    extra = {"method": args.method}
    if agree is not None:
        extra["methods_agree"] = agree
    _emit(args, text, jsonio.encode(nc, **extra))
    return EXIT_FAIL if agree is False else EXIT_OK


def cmd_mds(args) -> int:
    t = _family_triangle(args)
    v = classify(t)
    lines = [str(t), f"verdict: {v.status.value}", f"reason: {v.reason}"]
    if v.witness is not None:
        lines.append(f"witness: {to_text(v.witness)}")
    _emit(args, "\n".join(lines), jsonio.encode((t, v)))
    return EXIT_OK


def cmd_search(args) -> int:
    r = verify_classification(args.m, args.hmax, args.kmax)
    lines = [f"m = {r.m}; exhaustive within {r.exhaustive_within}; {r.cells} cells, "
             f"{len(r.records)} triangle classes, {len(r.classes)} curve classes"]
    for i, c in enumerate(r.classes):
        label = c.representative.label() if c.representative else "unmatched"
        also = ", ".join(mt.label() for mt in c.matches[1:])
        lines.append(f"  class {i}: {label}" + (f" (also {also})" if also else ""))
    if r.flagged:
        lines.append(f"  counterexample candidates: {r.flagged}")
    lines += [f"note: {n}" for n in r.notes]
    _emit(args, "\n".join(lines), jsonio.encode(r))
    return EXIT_FAIL if r.flagged else EXIT_OK


def cmd_verify(args) -> int:
    results = run_all(args.max_m, args.max_k, progress=lambda r: print(r.line(), flush=True))
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def _add_instance_args(p, alpha_beta=False, required_ab=False):
    p.add_argument("--family", required=True, type=Kind.parse, help="it or rt")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--n", type=int, help="chain index: (M_n, N_n) = tau^-n(1, 0)")
    p.add_argument("--mn", type=pair, help="explicit M,N (checked against the equation)")
    if alpha_beta:
        p.add_argument("--alpha", type=rational, required=required_ab)
        p.add_argument("--beta", type=rational, required=required_ab)
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="negcurves", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pell", help="solutions of (M+N)^2 = KMN + 1 along the chain")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--count", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("triangle", help="a family triangle and its lattice data")
    _add_instance_args(p, alpha_beta=True)
    p.add_argument("--svg", metavar="FILE")
    p.add_argument("--tikz", metavar="FILE")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("curve", help="the negative curve supported in a family triangle")
    _add_instance_args(p)
    p.add_argument("--method", choices=("recurrence", "solver", "both"), default="both")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("mds", help="Mori dream space verdict for an enlarged triangle")
    _add_instance_args(p, alpha_beta=True, required_ab=True)
    p.set_defaults(func=cmd_mds)

    p = sub.add_parser("search", help="census of (dagger) triangles for one m")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--hmax", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--max-m", type=int, default=60)
    p.add_argument("--max-k", type=int, default=10)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ValueError) as e:
        # bad input: unknown chain index, budget exceeded, non-solution, ...
        print(f"negcurves: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except NegCurvesError as e:
        print(f"negcurves: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
