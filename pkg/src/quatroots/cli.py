"""Command-line front end.

Commands: solve, charpoly, reduce, eigen-check, verify.  Input files are
JSON (see :mod:`quatroots.serialize` for the formats).  Exit codes:
0 success, 1 computation diagnostic (e.g. an inconsistent class report),
2 input error, 3 root-finder non-convergence.
"""

from __future__ import annotations

import argparse
import sys

from .companion import char_poly, companion_polynomial, embed
from .eigen import is_right_eigenvalue, right_eigenvector
from .polynomials import reduce_mod_central_quadratic
from .recovery import class_representative, solve
from .rootfind import ConjClass, ConvergenceError
from .scalars import Tolerance, parse_scalar
from .serialize import (
    InputFormatError,
    central_poly_json,
    central_poly_text,
    dump_json,
    load_json,
    parse_matrix,
    parse_polynomial,
    parse_quaternion_literal,
    quaternion_json,
    quaternion_text,
    report_text,
    solve_result_json,
)
from .verify import run_all

EXIT_OK = 0
EXIT_DIAGNOSTIC = 1
EXIT_INPUT = 2
EXIT_NO_CONVERGENCE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatroots",
        description="Find all roots of monic left-coefficient polynomials "
        "over a quaternion division algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="path to a JSON input file")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument(
            "--mode",
            choices=("approximate", "exact"),
            default="approximate",
            help="scalar realization (default: approximate)",
        )
        p.add_argument(
            "--tol",
            type=float,
            default=None,
            metavar="FLOAT",
            help="override the relative comparison tolerance",
        )

    p_solve = sub.add_parser("solve", help="find all roots of a polynomial")
    common(p_solve)

    p_char = sub.add_parser("charpoly", help="print the companion polynomial")
    common(p_char)

    p_reduce = sub.add_parser(
        "reduce", help="reduce a polynomial modulo z^2 - t*z + n"
    )
    common(p_reduce)
    p_reduce.add_argument(
        "--t", required=True, help="reduced trace (scalar literal; write --t=-1/2 for negatives)"
    )
    p_reduce.add_argument(
        "--n", required=True, help="reduced norm (scalar literal; write --n=-1/2 for negatives)"
    )

    p_eigen = sub.add_parser(
        "eigen-check", help="test a right eigenvalue of a quaternionic matrix"
    )
    common(p_eigen)
    p_eigen.add_argument(
        "--lambda",
        dest="lam",
        required=True,
        metavar="QUAT",
        help='candidate eigenvalue as a quaternion literal "[x0, x1, x2, x3]"',
    )
    p_eigen.add_argument(
        "--eigenvector",
        action="store_true",
        help="also extract an eigenvector at the class representative",
    )

    p_verify = sub.add_parser(
        "verify", help="run the randomized self-verification suites"
    )
    common(p_verify, needs_input=False)
    p_verify.add_argument("--seed", type=int, default=0, help="master random seed")

    return parser


def _tolerance(args) -> Tolerance:
    if args.tol is None:
        return Tolerance()
    return Tolerance(rel=args.tol, abs=args.tol * 1e-2)


def _input_error(message: str) -> int:
    print(f"error: input: {message}", file=sys.stderr)
    return EXIT_INPUT


def _cmd_solve(args) -> int:
    if args.mode == "exact":
        return _input_error("solve requires --mode approximate")
    tol = _tolerance(args)
    phi = parse_polynomial(load_json(args.input), exact=False)
    try:
        result = solve(phi, tol)
    except ConvergenceError as exc:
        print(f"error: convergence: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    if args.json:
        print(dump_json(solve_result_json(result)))
    else:
        print(f"companion polynomial: {central_poly_text(result.companion)}")
        for report in result.reports:
            print(report_text(report))
        print(f"max residual: {result.max_residual:.3g}")
    return EXIT_OK if result.ok else EXIT_DIAGNOSTIC


def _cmd_charpoly(args) -> int:
    tol = _tolerance(args)
    phi = parse_polynomial(load_json(args.input), exact=args.mode == "exact")
    poly = companion_polynomial(phi, tol)
    if args.json:
        print(dump_json(central_poly_json(poly)))
    else:
        print(central_poly_text(poly))
    return EXIT_OK


def _cmd_reduce(args) -> int:
    exact = args.mode == "exact"
    tol = _tolerance(args)
    phi = parse_polynomial(load_json(args.input), exact=exact)
    try:
        t = parse_scalar(args.t, exact)
        n = parse_scalar(args.n, exact)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc
    pair = reduce_mod_central_quadratic(phi, t, n)
    if args.json:
        print(
            dump_json(
                {"psi1": quaternion_json(pair.psi1), "psi0": quaternion_json(pair.psi0)}
            )
        )
    else:
        print(f"psi1 = {quaternion_text(pair.psi1)}")
        print(f"psi0 = {quaternion_text(pair.psi0)}")
    return EXIT_OK


def _cmd_eigen_check(args) -> int:
    if args.mode == "exact":
        return _input_error("eigen-check requires --mode approximate")
    tol = _tolerance(args)
    mat = parse_matrix(load_json(args.input), exact=False)
    lam = parse_quaternion_literal(args.lam, mat.alg)
    poly = char_poly(embed(mat), tol)
    verdict = is_right_eigenvalue(mat, lam, tol)
    payload = {"char_poly": central_poly_json(poly), "is_right_eigenvalue": verdict}
    lines = [
        f"characteristic polynomial: {central_poly_text(poly)}",
        f"right eigenvalue: {'yes' if verdict else 'no'}",
    ]
    if args.eigenvector and verdict:
        t, n = lam.reduced_invariants()
        rep = class_representative(ConjClass(t, n, 1, False), mat.alg)
        pair = right_eigenvector(mat, mat.alg.ext(rep.x0, rep.x1), tol)
        payload["eigenvalue_representative"] = quaternion_json(pair.value)
        payload["eigenvector"] = [quaternion_json(q) for q in pair.vector]
        lines.append(f"representative eigenvalue: {quaternion_text(pair.value)}")
        lines.append(
            "eigenvector: [" + ", ".join(quaternion_text(q) for q in pair.vector) + "]"
        )
    if args.json:
        print(dump_json(payload))
    else:
        print("\n".join(lines))
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = run_all(args.seed)
    failed = False
    for name, failures in results.items():
        if failures:
            failed = True
            print(f"FAIL {name}")
            for failure in failures:
                print(f"  {failure}")
        else:
            print(f"ok {name}")
    return EXIT_DIAGNOSTIC if failed else EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "solve": _cmd_solve,
        "charpoly": _cmd_charpoly,
        "reduce": _cmd_reduce,
        "eigen-check": _cmd_eigen_check,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except InputFormatError as exc:
        return _input_error(str(exc))
    except ConvergenceError as exc:
        print(f"error: convergence: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        print(f"error: computation: {exc}", file=sys.stderr)
        return EXIT_DIAGNOSTIC


if __name__ == "__main__":
    sys.exit(main())
