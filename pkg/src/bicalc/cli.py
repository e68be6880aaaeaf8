"""Command-line interface: ``bicalc <subcommand> ...`` (or ``python3 -m bicalc``).

Results are printed as JSON on stdout.  Errors are printed as a JSON object
on stderr with exit status 2; ``verify`` exits 1 when a suite fails.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import List, Optional

from . import __version__
from .core import Bicomplex
from .errors import BicalcError, ParseError
from .hermite import hermite_first, hermite_second_closed, hermite_second_rodrigues
from .kernels import bergman_kernel_bc, bergman_kernel_c, fock_kernel_bc, fock_kernel_c
from .parsing import (
    bicomplex_to_json, format_bicomplex, format_expr, parse_bicomplex, parse_expr,
    polynomial_to_json,
)
from .polynomial import BCPolynomial, eval_poly, multiorder, star_decompose, wirtinger_derivative
from .quadrature import gram_matrix
from .verify import SUITES, run_suites

MODES = ("exact", "float")


def default_mode() -> str:
    mode = os.environ.get("BICALC_MODE", "float").strip().lower()
    return mode if mode in MODES else "float"


def _value_json(c: Bicomplex):
    return {"text": format_bicomplex(c), **bicomplex_to_json(c), **bicomplex_to_json(c, "idempotent")}


def _poly(P: BCPolynomial, mode: str) -> BCPolynomial:
    return P.to_float() if mode == "float" else P


def _complex_point(text: str) -> complex:
    B = parse_bicomplex(text, "float")
    x1, x2, x3, x4 = B.to_cartesian()
    if x3 or x4:
        raise ValueError(f"{text!r} is not a complex number (j and k parts must vanish)")
    return complex(x1, x2)


def _complex_json(z: complex):
    return {"re": z.real, "im": z.imag}


# subcommands

def cmd_eval(args):
    P = parse_expr(args.expr, args.mode)
    at = parse_bicomplex(args.at, args.mode)
    return {"expr": format_expr(P), "at": format_bicomplex(at), "mode": args.mode,
            "value": _value_json(eval_poly(P, at))}


def cmd_diff(args):
    if args.repeat < 0:
        raise ValueError("--repeat must be non-negative")
    P = parse_expr(args.expr, args.mode)
    D = wirtinger_derivative(P, args.wrt, args.repeat)
    return {"expr": format_expr(P), "wrt": args.wrt, "repeat": args.repeat, "mode": args.mode,
            "derivative": polynomial_to_json(D)}


def cmd_hermite(args):
    out = {"kind": args.kind, "mode": args.mode}
    if args.kind == "first":
        P = _poly(hermite_first(args.variant, args.m, args.n), args.mode)
        out.update(variant=args.variant, order=[args.m, args.n])
    else:
        if args.p is None or args.q is None:
            raise ValueError("--kind second needs --p and --q")
        order = (args.m, args.n, args.p, args.q)
        P = _poly(hermite_second_rodrigues(*order), args.mode)
        out["order"] = list(order)
        try:
            closed = hermite_second_closed(*order)
            out["closed_form"] = format_expr(closed)
            out["closed_form_equal"] = closed == hermite_second_rodrigues(*order)
        except BicalcError as exc:
            out["closed_form"] = {"error": type(exc).__name__, "message": str(exc)}
            out["closed_form_equal"] = False
    out["polynomial"] = polynomial_to_json(P)
    if args.at is not None:
        out["at"] = args.at
        out["value"] = _value_json(eval_poly(P, parse_bicomplex(args.at, args.mode)))
    return out


def cmd_kernel(args):
    out = {"space": args.space, "realm": args.realm, "order": args.order}
    if args.realm == "complex":
        z, w = _complex_point(args.z), _complex_point(args.w)
        fn = fock_kernel_c if args.space == "fock" else bergman_kernel_c
        out.update(z=_complex_json(z), w=_complex_json(w), value=_complex_json(fn(args.order, z, w)))
    else:
        Zp, Wp = parse_bicomplex(args.z, "float"), parse_bicomplex(args.w, "float")
        fn = fock_kernel_bc if args.space == "fock" else bergman_kernel_bc
        out.update(z=format_bicomplex(Zp), w=format_bicomplex(Wp), value=_value_json(fn(args.order, Zp, Wp)))
    return out


def write_gram_csv(path, pairs, G1, G2):
    """Row-major over pairs; each pair has adjacent ``_e1`` and ``_e2`` columns."""
    labels = [f"({m},{n})" for m, n in pairs]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["pair"] + [f"{lab}_{comp}" for lab in labels for comp in ("e1", "e2")])
        for i, lab in enumerate(labels):
            w.writerow([lab] + [repr(complex(G[i, j])) for j in range(len(pairs)) for G in (G1, G2)])


def cmd_gram(args):
    pairs, G1, G2 = gram_matrix(args.max_m, args.max_n, args.nodes, args.variant)
    if args.out:
        write_gram_csv(args.out, pairs, G1, G2)
        return {"written": args.out, "pairs": [list(p) for p in pairs], "nodes": args.nodes}

    def mat(G):
        return [[[G[i, j].real, G[i, j].imag] for j in range(len(pairs))] for i in range(len(pairs))]
    return {"variant": args.variant, "nodes": args.nodes, "pairs": [list(p) for p in pairs],
            "e1": mat(G1), "e2": mat(G2)}


def cmd_decompose(args):
    P = parse_expr(args.expr, args.mode)
    parts = star_decompose(P)
    return {"expr": format_expr(P), "star_order": len(parts),
            "components": [{"power": l, "expr": format_expr(f)} for l, f in enumerate(parts)]}


def cmd_multiorder(args):
    P = parse_expr(args.expr, args.mode)
    return {"expr": format_expr(P), "multiorder": list(multiorder(P))}


def cmd_verify(args):
    results = run_suites(args.suite, max_degree=args.max_degree, tol=args.tol)
    report = {
        "version": __version__,
        "parameters": {"suites": list(args.suite), "max_degree": args.max_degree, "tol": args.tol},
        "passed": all(r.passed for r in results),
        "suites": [r.to_json() for r in results],
    }
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    return report


# parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bicalc", description="Bicomplex polynomial calculus and verification.")
    ap.add_argument("--version", action="version", version=f"bicalc {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    mode = argparse.ArgumentParser(add_help=False)
    mode.add_argument("--mode", choices=MODES, default=None,
                      help="scalar mode (default: $BICALC_MODE or float)")

    p = sub.add_parser("eval", parents=[mode], help="evaluate a polynomial at a bicomplex point")
    p.add_argument("--expr", required=True)
    p.add_argument("--at", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("diff", parents=[mode], help="formal Wirtinger derivative")
    p.add_argument("--expr", required=True)
    p.add_argument("--wrt", required=True, choices=("Z", "Zb", "Zs", "Zd"))
    p.add_argument("--repeat", type=int, default=1)
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("hermite", parents=[mode], help="bicomplex Hermite-Ito polynomials")
    p.add_argument("--kind", choices=("first", "second"), default="first")
    p.add_argument("--variant", choices=("bar", "star", "dagger"), default="star")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--at")
    p.set_defaults(func=cmd_hermite)

    p = sub.add_parser("kernel", help="poly-Fock and poly-Bergman kernels")
    p.add_argument("--space", choices=("fock", "bergman"), required=True)
    p.add_argument("--realm", choices=("complex", "bicomplex"), default="complex")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--z", required=True)
    p.add_argument("--w", required=True)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("gram", help="split Gram matrix of H_mn(Z, Z*)")
    p.add_argument("--variant", choices=("bar", "star", "dagger"), default="star")
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--nodes", type=int, default=32)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("decompose", parents=[mode], help="star decomposition sum (Z*)^l f_l(Z)")
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("multiorder", parents=[mode], help="multi-order (l, k, q)")
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_multiorder)

    p = sub.add_parser("verify", help="run the self-verification suites")
    p.add_argument("--suite", nargs="+", choices=SUITES + ("all",), default=["all"])
    p.add_argument("--max-degree", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--report")
    p.set_defaults(func=cmd_verify)
    return ap


def _error_json(exc: Exception):
    out = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        out["position"] = exc.position
        out["expected"] = sorted(exc.expected)
    return out


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "mode", "absent") is None:
        args.mode = default_mode()
    try:
        result = args.func(args)
    except (BicalcError, ValueError, ZeroDivisionError, TypeError) as exc:
        json.dump(_error_json(exc), sys.stderr)
        sys.stderr.write("\n")
        return 2
    json.dump(result, sys.stdout, indent=2)
    sys.stdout.write("\n")
    if args.command == "verify":
        return 0 if result["passed"] else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
