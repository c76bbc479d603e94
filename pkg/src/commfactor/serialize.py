"""JSON encoding of algebras, elements, matrices and results.

Rationals travel as strings "p/q" (or just "p" when the denominator is 1);
matrices as arrays of row arrays; elements as {"coords": [...]}.  An algebra
object carries its structure constants and the Wedderburn-Malcev data:

    {
      "dim": n,
      "labels": [...],
      "unit": [...],
      "structure": [[[coords] ...] ...],
      "wm": {"blocks": [d1, ...], "matrix_units": [...], "radical": [...]}
    }

Decoding is strict about shapes but liberal about scalars (bare ints are
accepted where a rational string is expected).  All decode failures raise
:class:`SchemaError` with a human-readable message.
"""

from __future__ import annotations

import json
import re

from .algebra import Algebra, InvalidAlgebra, InvalidWMData, WMData, verify_wm_data
from .factor import FactorizationCertificate
from .linalg import Matrix, frac
from .multitrace import Multitrace
from .sylvester import BimoduleProblem, NoncommutingOperators, SylvesterSolution

__all__ = [
    "SchemaError",
    "rational_to_str",
    "rational_from_obj",
    "vector_to_obj",
    "vector_from_obj",
    "matrix_to_obj",
    "matrix_from_obj",
    "element_to_obj",
    "element_from_obj",
    "algebra_to_obj",
    "algebra_from_obj",
    "problem_to_obj",
    "problem_from_obj",
    "solution_to_obj",
    "certificate_to_obj",
    "multitrace_to_obj",
    "load_json",
    "dump_json",
]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


class SchemaError(ValueError):
    """Input JSON does not match the published schema."""


def rational_to_str(q) -> str:
    return str(q)


def rational_from_obj(obj, where: str = "value"):
    if isinstance(obj, bool):
        raise SchemaError(f"{where}: expected a rational, got a boolean")
    if isinstance(obj, int):
        return frac(obj)
    if isinstance(obj, str):
        s = obj.strip()
        if not _RATIONAL_RE.match(s):
            raise SchemaError(f"{where}: {obj!r} is not a rational 'p/q' string")
        return frac(s)
    raise SchemaError(f"{where}: expected a rational string, got {type(obj).__name__}")


def vector_to_obj(v) -> list:
    return [rational_to_str(x) for x in v]


def vector_from_obj(obj, length: int | None = None, where: str = "vector") -> tuple:
    if not isinstance(obj, list):
        raise SchemaError(f"{where}: expected a list")
    v = tuple(rational_from_obj(x, f"{where}[{i}]") for i, x in enumerate(obj))
    if length is not None and len(v) != length:
        raise SchemaError(f"{where}: expected length {length}, got {len(v)}")
    return v


def matrix_to_obj(m: Matrix) -> list:
    return [vector_to_obj(row) for row in m.data]


def matrix_from_obj(obj, where: str = "matrix") -> Matrix:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise SchemaError(f"{where}: expected an array of row arrays")
    rows = [vector_from_obj(r, where=f"{where}[{i}]") for i, r in enumerate(obj)]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise SchemaError(f"{where}: ragged rows")
    return Matrix(rows) if rows else Matrix.zero(0, 0)


def element_to_obj(v) -> dict:
    return {"coords": vector_to_obj(v)}


def element_from_obj(obj, dim: int | None = None, where: str = "element") -> tuple:
    if isinstance(obj, list):
        coords = obj
    elif isinstance(obj, dict) and "coords" in obj:
        coords = obj["coords"]
    else:
        raise SchemaError(f"{where}: expected an object with a 'coords' list")
    return vector_from_obj(coords, dim, where=f"{where}.coords")


def algebra_to_obj(alg: Algebra, wm: WMData) -> dict:
    return {
        "dim": alg.dim,
        "labels": list(alg.labels),
        "unit": vector_to_obj(alg.unit),
        "structure": [[vector_to_obj(v) for v in row] for row in alg.structure],
        "wm": {
            "blocks": list(wm.block_sizes),
            "matrix_units": [[[vector_to_obj(v) for v in prow] for prow in grid]
                             for grid in wm.matrix_units],
            "radical": [vector_to_obj(v) for v in wm.radical_basis],
        },
    }


def algebra_from_obj(obj, *, check: bool = True):
    """Decode (Algebra, WMData); verifies the algebra laws and the WM data."""
    if not isinstance(obj, dict):
        raise SchemaError("algebra: expected a JSON object")
    for key in ("dim", "unit", "structure", "wm"):
        if key not in obj:
            raise SchemaError(f"algebra: missing key {key!r}")
    dim = obj["dim"]
    if not isinstance(dim, int) or dim <= 0:
        raise SchemaError("algebra.dim: expected a positive integer")
    labels = obj.get("labels")
    if labels is not None:
        if (not isinstance(labels, list) or len(labels) != dim
                or not all(isinstance(x, str) for x in labels)):
            raise SchemaError("algebra.labels: expected a list of dim strings")
    unit = vector_from_obj(obj["unit"], dim, where="algebra.unit")
    structure = obj["structure"]
    if not isinstance(structure, list) or len(structure) != dim:
        raise SchemaError("algebra.structure: expected dim rows")
    rows = []
    for i, row in enumerate(structure):
        if not isinstance(row, list) or len(row) != dim:
            raise SchemaError(f"algebra.structure[{i}]: expected dim entries")
        rows.append([vector_from_obj(v, dim, where=f"algebra.structure[{i}][{j}]")
                     for j, v in enumerate(row)])
    wm_obj = obj["wm"]
    if not isinstance(wm_obj, dict):
        raise SchemaError("algebra.wm: expected an object")
    for key in ("blocks", "matrix_units", "radical"):
        if key not in wm_obj:
            raise SchemaError(f"algebra.wm: missing key {key!r}")
    blocks = wm_obj["blocks"]
    if (not isinstance(blocks, list) or not blocks
            or not all(isinstance(d, int) and d > 0 for d in blocks)):
        raise SchemaError("algebra.wm.blocks: expected a non-empty list of "
                          "positive integers")
    mu_obj = wm_obj["matrix_units"]
    if not isinstance(mu_obj, list) or len(mu_obj) != len(blocks):
        raise SchemaError("algebra.wm.matrix_units: one grid per block required")
    grids = []
    for k, grid in enumerate(mu_obj):
        d = blocks[k]
        if not isinstance(grid, list) or len(grid) != d:
            raise SchemaError(f"algebra.wm.matrix_units[{k}]: expected {d} rows")
        prows = []
        for p, prow in enumerate(grid):
            if not isinstance(prow, list) or len(prow) != d:
                raise SchemaError(
                    f"algebra.wm.matrix_units[{k}][{p}]: expected {d} entries")
            prows.append([vector_from_obj(
                v, dim, where=f"algebra.wm.matrix_units[{k}][{p}][{q}]")
                for q, v in enumerate(prow)])
        grids.append(prows)
    rad_obj = wm_obj["radical"]
    if not isinstance(rad_obj, list):
        raise SchemaError("algebra.wm.radical: expected a list")
    rad = [vector_from_obj(v, dim, where=f"algebra.wm.radical[{i}]")
           for i, v in enumerate(rad_obj)]

    try:
        alg = Algebra(rows, unit, labels, check=check)
        wm = WMData(blocks, grids, rad)
    except (InvalidAlgebra, InvalidWMData) as exc:
        raise SchemaError(str(exc)) from exc
    if check:
        report = verify_wm_data(alg, wm)
        if not report.ok:
            raise SchemaError("invalid Wedderburn-Malcev data: "
                              + "; ".join(report.problems))
    return alg, wm


def problem_to_obj(problem: BimoduleProblem) -> dict:
    return {
        "left_op": matrix_to_obj(problem.left_op),
        "right_op": matrix_to_obj(problem.right_op),
        "rhs": vector_to_obj(problem.rhs),
    }


def problem_from_obj(obj) -> BimoduleProblem:
    if not isinstance(obj, dict):
        raise SchemaError("problem: expected a JSON object")
    for key in ("left_op", "right_op", "rhs"):
        if key not in obj:
            raise SchemaError(f"problem: missing key {key!r}")
    left = matrix_from_obj(obj["left_op"], where="problem.left_op")
    right = matrix_from_obj(obj["right_op"], where="problem.right_op")
    rhs = vector_from_obj(obj["rhs"], where="problem.rhs")
    try:
        return BimoduleProblem(left, right, rhs)
    except (NoncommutingOperators, ValueError) as exc:
        raise SchemaError(str(exc)) from exc


def solution_to_obj(sol: SylvesterSolution) -> dict:
    return {
        "status": sol.status,
        "x": vector_to_obj(sol.x) if sol.x is not None else None,
        "kernel": [vector_to_obj(v) for v in sol.kernel],
    }


def certificate_to_obj(cert: FactorizationCertificate) -> dict:
    return {
        "x": element_to_obj(cert.x),
        "y": element_to_obj(cert.y),
        "target": element_to_obj(cert.target),
        "verified": cert.verified,
        "lambda_shifts": [rational_to_str(v) for v in cert.lambda_shifts],
    }


def multitrace_to_obj(mtr: Multitrace) -> list:
    return [rational_to_str(v) for v in mtr.values]


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc


def dump_json(obj, path: str | None = None) -> str:
    text = json.dumps(obj, indent=2)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return text
