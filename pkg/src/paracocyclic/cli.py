"""Command line driver: ``validate``, ``laws``, ``complex``, ``solve-transposition``."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

from .braided_algebra import (check_braid_preserving, check_braiding_laws, check_lift_interchange,
                              inside_structure, outside_structure, validate_bimodule)
from .errors import EngineError, ParseError, UnsupportedBackend, ValidationError
from .instance import Instance, build_transposition, parse_instance, resolve_path, validate_instance
from .report import Check, LawReport
from .tensor_engine import check_closed_forms, check_projection_equivariant
from .tower import (Tower, Transposition, build_cosimplex, check_paracocyclic_relations,
                    compare_para_formulas)

EXIT_OK, EXIT_LAW, EXIT_PARSE = 0, 1, 2


def _guard_group(name: str, thunk: Callable[[], LawReport]) -> LawReport:
    try:
        return thunk()
    except EngineError as exc:
        return LawReport([Check(f"{name}/construct", False, {"error": type(exc).__name__, "message": str(exc)})])


def law_groups(inst: Instance, tower: Tower, state: dict) -> dict[str, Callable[[], LawReport]]:
    """Independent checker groups, keyed by the name accepted by ``--only``."""
    x, phi = inst.X, inst.phi

    def structures():
        rep = LawReport()
        rep.extend(validate_bimodule(inside_structure(x, phi, validate=False), "inside"))
        rep.extend(validate_bimodule(outside_structure(x, phi, validate=False), "outside"))
        rep.extend(check_closed_forms(x, phi))
        rep.extend(check_projection_equivariant(tower.rel_o(x)))
        rep.extend(check_projection_equivariant(tower.rel_i(x)))
        rep.extend(check_lift_interchange(x, phi))
        return rep

    def t_bar():
        rep = tower.check_t_bar(x)
        for n in range(3):
            rep.extend(tower.check_canonical_projections(n))
        return rep

    def transposition():
        w = transposition_for(tower, inst, state)
        rep = tower.check_transposition(w)
        rep.info["transposition"] = w.describe()
        return rep

    return {
        "instance": lambda: validate_instance(inst),
        "braid-preserving": lambda: check_braid_preserving(phi),
        "distributive-laws": lambda: check_braiding_laws(phi, x.carrier),
        "structures": structures,
        "monads": lambda: tower.check_monads(x),
        "t-bar": t_bar,
        "iso": lambda: tower.check_iso(x),
        "admissible": lambda: tower.check_admissible(x),
        "transposition": transposition,
        "adjunction": lambda: tower.check_adjunction(x),
    }


def transposition_for(tower: Tower, inst: Instance, state: dict) -> Transposition:
    with tower._lock:
        if "w" not in state:
            state["w"] = build_transposition(tower, inst.transposition)
        return state["w"]


def run_laws(inst: Instance, tower: Tower, state: dict, only: str | None = None, jobs: int = 1) -> LawReport:
    groups = law_groups(inst, tower, state)
    if only is not None:
        if only not in groups:
            raise ParseError(f"unknown check group {only!r}; choose from {', '.join(sorted(groups))}")
        groups = {only: groups[only]}
    names = sorted(groups)
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        reports = list(pool.map(lambda n: _guard_group(n, groups[n]), names))
    out = LawReport()
    for r in reports:
        out.extend(r)
    return out


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _load(path: str) -> Instance:
    return parse_instance(resolve_path(path))


def cmd_validate(args) -> int:
    inst = _load(args.instance)
    rep = validate_instance(inst)
    _emit({"command": "validate", "instance": inst.name, "report": rep.to_json()})
    return EXIT_OK if rep.passed else EXIT_LAW


def cmd_laws(args) -> int:
    inst = _load(args.instance)
    tower = Tower(inst.phi, inst.X, mutation=args.mutate)
    rep = run_laws(inst, tower, {}, args.only, args.jobs)
    _emit({"command": "laws", "instance": inst.name, "report": rep.to_json()})
    return EXIT_OK if rep.passed else EXIT_LAW


def _mat_json(m) -> list:
    return m.to_lists()


def cmd_complex(args) -> int:
    inst = _load(args.instance)
    tower = Tower(inst.phi, inst.X)
    state: dict = {}
    laws = run_laws(inst, tower, state, jobs=args.jobs)
    out: dict = {"command": "complex", "instance": inst.name, "max_degree": args.max_degree,
                 "laws_passed": laws.passed}
    if not laws.passed and not args.force:
        out["error"] = "law checks failed; rerun with --force to build anyway"
        out["failed_checks"] = sorted(c.name for c in laws.failures())
        _emit(out)
        return EXIT_LAW
    code = EXIT_OK if laws.passed else EXIT_LAW
    try:
        w = transposition_for(tower, inst, state)
        levels = build_cosimplex(tower, w, args.max_degree)
    except EngineError as exc:
        out["error"] = f"{type(exc).__name__}: {exc}"
        _emit(out)
        return EXIT_LAW
    out["dimensions"] = [lv.dim for lv in levels]
    out["transposition"] = {"kind": w.kind, "table": None if w.table is None else [str(c) for c in w.table]}
    if args.check_relations:
        rel = check_paracocyclic_relations(tower, w, args.max_degree)
        findings: list = []
        if tower.backend.kind == "graded":
            cmp_rep, findings = compare_para_formulas(tower, w, min(args.max_degree, 2))
            rel.checks.extend(Check(c.name, c.passed, c.witness, informational=True) for c in cmp_rep.checks)
        out["relations"] = rel.to_json()
        out["findings"] = findings
        if not rel.passed:
            code = EXIT_LAW
    if args.emit_matrices:
        out["levels"] = [{
            "degree": lv.degree,
            "cofaces": [_mat_json(m) for m in lv.cofaces],
            "codegeneracies": [_mat_json(m) for m in lv.codegeneracies],
            "para": _mat_json(lv.para),
        } for lv in levels]
    _emit(out)
    return code


def cmd_solve(args) -> int:
    inst = _load(args.instance)
    tower = Tower(inst.phi, inst.X)
    out: dict = {"command": "solve-transposition", "instance": inst.name, "order": args.order}
    try:
        sols = tower.solve_diagonal_transposition(args.order)
    except (UnsupportedBackend, ValidationError) as exc:
        out["error"] = f"{type(exc).__name__}: {exc}"
        _emit(out)
        return EXIT_LAW
    grp = tower.backend.group
    out["group_elements"] = [list(g) for g in grp.elements()]
    out["solutions"] = [[str(c) for c in s.table] for s in sols]
    _emit(out)
    return EXIT_OK if sols else EXIT_LAW


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="paracocyclic",
                                description="Exact para-cocyclic constructions for braided algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("validate", help="parse and validate an instance file")
    v.add_argument("instance", help="instance path or bundled fixture name")
    v.set_defaults(func=cmd_validate)
    law = sub.add_parser("laws", help="run every law checker")
    law.add_argument("instance")
    law.add_argument("--only", metavar="NAME", help="run a single check group")
    law.add_argument("--jobs", type=int, default=1)
    law.add_argument("--mutate", choices=["t-bar-sign"], help=argparse.SUPPRESS)
    law.set_defaults(func=cmd_laws)
    c = sub.add_parser("complex", help="build the cosimplex and its para-cocyclic operator")
    c.add_argument("instance")
    c.add_argument("--max-degree", type=int, required=True)
    c.add_argument("--check-relations", action="store_true")
    c.add_argument("--emit-matrices", action="store_true")
    c.add_argument("--force", action="store_true", help="build even if law checks fail")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_complex)
    s = sub.add_parser("solve-transposition", help="enumerate diagonal transpositions")
    s.add_argument("instance")
    s.add_argument("--order", type=int, required=True)
    s.set_defaults(func=cmd_solve)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _emit({"command": args.command, "error": f"ParseError: {exc}"})
        return EXIT_PARSE
    except ValidationError as exc:
        _emit({"command": args.command, "error": f"ValidationError: {exc}", "law": exc.law})
        return EXIT_LAW


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
