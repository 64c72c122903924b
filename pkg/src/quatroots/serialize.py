"""JSON input and output formats.

Quaternion literal: a four-element array [x0, x1, x2, x3].  Scalars are
plain numbers in approximate mode and "p/q" strings (or integers) in
exact mode.

Polynomial file:
    {"algebra": {"a": -1, "b": -1},
     "coefficients": [[0, 0, 0, -1], [0, -1, -1, 0]],
     "leading": [1, 0, 0, 0]}            # optional; triggers normalization

Matrix file:
    {"algebra": {"a": -1, "b": -1},
     "matrix": [[[0,0,1,0]], ...]}       # square grid of quaternion literals
"""

from __future__ import annotations

import json

from .algebra import AlgebraParams, Quaternion
from .companion import QuatMatrix
from .polynomials import CentralPoly, StandardPoly, monic_normalize
from .recovery import RootReport, SolveResult
from .scalars import format_scalar, format_scalar_text, parse_scalar


class InputFormatError(ValueError):
    """Malformed or invalid input file or literal."""


def parse_quaternion(value, alg: AlgebraParams) -> Quaternion:
    if not isinstance(value, list) or len(value) != 4:
        raise InputFormatError(f"quaternion literal must be a 4-element array, got {value!r}")
    coords = [parse_scalar(c, alg.exact) for c in value]
    return alg.quat(*coords)


def parse_quaternion_literal(text: str, alg: AlgebraParams) -> Quaternion:
    """Parse a command-line quaternion literal like "[0, 1, 0, 0]"."""
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"malformed quaternion literal: {exc}") from exc
    return parse_quaternion(value, alg)


def parse_algebra(obj, exact: bool) -> AlgebraParams:
    if not isinstance(obj, dict) or "a" not in obj or "b" not in obj:
        raise InputFormatError('algebra must be an object with fields "a" and "b"')
    try:
        return AlgebraParams(parse_scalar(obj["a"], exact), parse_scalar(obj["b"], exact))
    except (ValueError, TypeError) as exc:
        raise InputFormatError(str(exc)) from exc


def parse_polynomial(obj, exact: bool) -> StandardPoly:
    if not isinstance(obj, dict):
        raise InputFormatError("polynomial file must contain a JSON object")
    if "algebra" not in obj or "coefficients" not in obj:
        raise InputFormatError('polynomial file needs "algebra" and "coefficients"')
    alg = parse_algebra(obj["algebra"], exact)
    coeffs = obj["coefficients"]
    if not isinstance(coeffs, list) or not coeffs:
        raise InputFormatError('"coefficients" must be a nonempty array')
    try:
        quats = [parse_quaternion(c, alg) for c in coeffs]
        if "leading" in obj:
            leading = parse_quaternion(obj["leading"], alg)
            return monic_normalize(quats + [leading])
        return StandardPoly(alg, tuple(quats))
    except InputFormatError:
        raise
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputFormatError(str(exc)) from exc


def parse_matrix(obj, exact: bool) -> QuatMatrix:
    if not isinstance(obj, dict):
        raise InputFormatError("matrix file must contain a JSON object")
    if "algebra" not in obj or "matrix" not in obj:
        raise InputFormatError('matrix file needs "algebra" and "matrix"')
    alg = parse_algebra(obj["algebra"], exact)
    grid = obj["matrix"]
    if not isinstance(grid, list) or not grid:
        raise InputFormatError('"matrix" must be a nonempty array of rows')
    try:
        rows = tuple(
            tuple(parse_quaternion(entry, alg) for entry in row) for row in grid
        )
        return QuatMatrix(alg, rows)
    except InputFormatError:
        raise
    except (ValueError, TypeError) as exc:
        raise InputFormatError(str(exc)) from exc


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"malformed JSON in {path}: {exc}") from exc


def quaternion_json(q: Quaternion) -> list:
    return [format_scalar(c) for c in q.coords()]


def quaternion_text(q: Quaternion) -> str:
    return "[" + ", ".join(format_scalar_text(c) for c in q.coords()) + "]"


def central_poly_json(poly: CentralPoly) -> dict:
    return {"coefficients": [format_scalar(c) for c in poly.coeffs]}


def parse_central_poly(obj, exact: bool) -> CentralPoly:
    if not isinstance(obj, dict) or "coefficients" not in obj:
        raise InputFormatError('central polynomial needs a "coefficients" array')
    return CentralPoly(tuple(parse_scalar(c, exact) for c in obj["coefficients"]))


def central_poly_text(poly: CentralPoly) -> str:
    """Human-readable polynomial, highest power first."""
    terms = []
    for k in range(len(poly.coeffs) - 1, -1, -1):
        c = poly.coeffs[k]
        if c == 0 and len(poly.coeffs) > 1:
            continue
        text = format_scalar_text(c)
        if k == 0:
            terms.append(text)
        else:
            power = "z" if k == 1 else f"z^{k}"
            if text == "1":
                terms.append(power)
            elif text == "-1":
                terms.append(f"-{power}")
            else:
                terms.append(f"{text} {power}")
    combined = " + ".join(terms)
    return combined.replace("+ -", "- ")


def report_json(report: RootReport) -> dict:
    out = {
        "class": {
            "t": format_scalar(report.conj_class.t),
            "n": format_scalar(report.conj_class.n),
            "multiplicity": report.conj_class.multiplicity,
        },
        "kind": report.kind,
    }
    if report.root is not None:
        out["root"] = quaternion_json(report.root)
    if report.representative is not None:
        out["representative"] = quaternion_json(report.representative)
    if report.residual is not None:
        out["residual"] = report.residual
    if report.diagnostics is not None:
        out["diagnostics"] = report.diagnostics
    return out


def solve_result_json(result: SolveResult) -> list:
    return [report_json(r) for r in result.reports]


def report_text(report: RootReport) -> str:
    cls = report.conj_class
    head = (
        f"class t={format_scalar_text(cls.t)} n={format_scalar_text(cls.n)} "
        f"multiplicity={cls.multiplicity}: {report.kind}"
    )
    if report.root is not None:
        head += f", root {quaternion_text(report.root)}"
    if report.representative is not None:
        head += f", representative {quaternion_text(report.representative)}"
    if report.residual is not None:
        head += f" (residual {report.residual:.3g})"
    if report.diagnostics is not None:
        head += f" [{report.diagnostics}]"
    return head


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
