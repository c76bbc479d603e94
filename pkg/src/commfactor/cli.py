"""Command-line front end.

Subcommands: build, analyze, factor, sylvester, quotient, gallery.  All
input and output is UTF-8 JSON as documented in :mod:`commfactor.serialize`.

Exit codes: 0 on success, 1 on a mathematical negative (nonzero multitrace,
algebra not block-triangular, gallery assertion failure), 2 on usage or
schema errors.  Every command is deterministic; --seed is accepted for
interface stability with randomized tooling built on top.
"""

from __future__ import annotations

import argparse
import sys

from . import serialize
from .algebra import (
    EmptyBlockList,
    commutator_subspace,
    build_triangular,
    build_ut,
    is_gbt,
    quotient_dim,
)
from .factor import NonzeroMultitrace, NotGBT, gbt_factor, is_commutator
from .gallery import gallery_names, get_entry, run_entry
from .multitrace import multitrace
from .serialize import SchemaError, dump_json, load_json
from .sylvester import solve_sylvester

__all__ = ["main", "app"]


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", metavar="PATH",
                        help="write the JSON result to PATH instead of stdout")
    common.add_argument("--format", choices=["json"], default="json",
                        help="output format (json only)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized tooling; the built-in "
                             "commands are deterministic")
    return common


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="commfactor",
        description="Exact multitrace analysis and commutator factorization "
                    "for finite-dimensional associative algebras.")
    sub = ap.add_subparsers(dest="command", required=True)
    common = _common_options()

    b = sub.add_parser("build", parents=[common],
                       help="construct an algebra and emit its JSON")
    b.add_argument("kind", choices=["ut", "triangular", "file"])
    b.add_argument("--blocks", metavar="D1,D2,...",
                   help="diagonal block sizes for kind 'ut'")
    b.add_argument("--left", metavar="PATH",
                   help="left component algebra JSON for kind 'triangular'")
    b.add_argument("--right", metavar="PATH",
                   help="right component algebra JSON for kind 'triangular'")
    b.add_argument("--action", metavar="PATH",
                   help="bimodule action JSON for kind 'triangular': "
                        '{"m_dim": k, "left_action": [...], "right_action": [...]}')
    b.add_argument("--input", metavar="PATH",
                   help="algebra JSON to validate and re-emit for kind 'file'")

    a = sub.add_parser("analyze", parents=[common],
                       help="multitrace report and commutator decision")
    a.add_argument("--algebra", required=True, metavar="PATH")
    a.add_argument("--element", required=True, metavar="PATH")

    f = sub.add_parser("factor", parents=[common],
                       help="factor an element as a commutator, emitting a "
                            "verified certificate")
    f.add_argument("--algebra", required=True, metavar="PATH")
    f.add_argument("--element", required=True, metavar="PATH")

    s = sub.add_parser("sylvester", parents=[common],
                       help="solve a x - x b = c on a based bimodule")
    s.add_argument("--input", required=True, metavar="PATH",
                   help='problem JSON: {"left_op": [[...]], "right_op": '
                        '[[...]], "rhs": [...]}')

    q = sub.add_parser("quotient", parents=[common],
                       help="dimension of A/[A,A] and the block-count bound")
    q.add_argument("--algebra", required=True, metavar="PATH")

    g = sub.add_parser("gallery", parents=[common],
                       help="run the stored assertions of a gallery algebra")
    g.add_argument("name", choices=list(gallery_names()) + ["list"])
    return ap


def _emit(payload, ns) -> None:
    text = dump_json(payload, ns.output)
    if ns.output is None:
        print(text)


def _load_algebra(path):
    return serialize.algebra_from_obj(load_json(path))


def _load_element(path, dim):
    return serialize.element_from_obj(load_json(path), dim)


def _cmd_build(ns) -> int:
    if ns.kind == "ut":
        if not ns.blocks:
            print("error: build ut requires --blocks", file=sys.stderr)
            return 2
        try:
            sizes = [int(tok) for tok in ns.blocks.split(",") if tok.strip()]
            alg, wm = build_ut(*sizes)
        except (ValueError, EmptyBlockList) as exc:
            print(f"error: bad --blocks value: {exc}", file=sys.stderr)
            return 2
    elif ns.kind == "triangular":
        if not (ns.left and ns.right and ns.action):
            print("error: build triangular requires --left, --right and "
                  "--action", file=sys.stderr)
            return 2
        a1, wm1 = _load_algebra(ns.left)
        a2, wm2 = _load_algebra(ns.right)
        action = load_json(ns.action)
        if not isinstance(action, dict) or "m_dim" not in action:
            raise SchemaError("action: expected an object with 'm_dim'")
        m_dim = action["m_dim"]
        if not isinstance(m_dim, int) or m_dim < 0:
            raise SchemaError("action.m_dim: expected a non-negative integer")
        lact = [serialize.matrix_from_obj(m, where=f"action.left_action[{i}]")
                for i, m in enumerate(action.get("left_action", []))]
        ract = [serialize.matrix_from_obj(m, where=f"action.right_action[{i}]")
                for i, m in enumerate(action.get("right_action", []))]
        try:
            tri = build_triangular(a1, wm1, a2, wm2, m_dim,
                                   lact or None, ract or None)
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc
        alg, wm = tri.algebra, tri.wm
    else:  # file
        if not ns.input:
            print("error: build file requires --input", file=sys.stderr)
            return 2
        alg, wm = _load_algebra(ns.input)
    _emit(serialize.algebra_to_obj(alg, wm), ns)
    return 0


def _cmd_analyze(ns) -> int:
    alg, wm = _load_algebra(ns.algebra)
    a = _load_element(ns.element, alg.dim)
    mtr = multitrace(alg, wm, a)
    decision = is_commutator(alg, wm, a)
    payload = {
        "multitrace": serialize.multitrace_to_obj(mtr),
        "multitrace_zero": mtr.is_zero,
        "gbt": is_gbt(alg, wm),
        "decision": decision.kind,
    }
    _emit(payload, ns)
    return 1 if decision.kind == "no" else 0


def _cmd_factor(ns) -> int:
    alg, wm = _load_algebra(ns.algebra)
    a = _load_element(ns.element, alg.dim)
    try:
        cert = gbt_factor(alg, wm, a)
    except NotGBT as exc:
        print(f"error: NotGBT: {exc}", file=sys.stderr)
        return 1
    except NonzeroMultitrace as exc:
        print(f"error: NonzeroMultitrace: {exc}", file=sys.stderr)
        return 1
    _emit(serialize.certificate_to_obj(cert), ns)
    return 0


def _cmd_sylvester(ns) -> int:
    problem = serialize.problem_from_obj(load_json(ns.input))
    sol = solve_sylvester(problem)
    _emit(serialize.solution_to_obj(sol), ns)
    return 0


def _cmd_quotient(ns) -> int:
    alg, wm = _load_algebra(ns.algebra)
    span_dim = commutator_subspace(alg).dim
    qdim = quotient_dim(alg)
    payload = {
        "dim_A": alg.dim,
        "dim_commutator_span": span_dim,
        "quotient_dim": qdim,
        "r": wm.r,
        "bound_satisfied": qdim >= wm.r,
    }
    _emit(payload, ns)
    return 0


def _cmd_gallery(ns) -> int:
    if ns.name == "list":
        _emit({"entries": list(gallery_names())}, ns)
        return 0
    entry = get_entry(ns.name)
    results = run_entry(entry)
    payload = {
        "name": entry.name,
        "description": entry.description,
        "dim": entry.algebra.dim,
        "assertions": [{"name": label, "ok": ok} for label, ok in results],
        "passed": all(ok for _, ok in results),
    }
    _emit(payload, ns)
    return 0 if payload["passed"] else 1


_HANDLERS = {
    "build": _cmd_build,
    "analyze": _cmd_analyze,
    "factor": _cmd_factor,
    "sylvester": _cmd_sylvester,
    "quotient": _cmd_quotient,
    "gallery": _cmd_gallery,
}


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        return _HANDLERS[ns.command](ns)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def app() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    app()
