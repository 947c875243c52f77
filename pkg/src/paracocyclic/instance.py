"""JSON instance files: parsing into domain objects and basic validation."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .braided_algebra import (AlgebraData, AlgebraMorphism, Bimodule, regular_bimodule, validate_algebra,
                              validate_algebra_morphism, validate_bimodule)
from .braided_backend import BiCharacter, FiniteAbelianGroup, GradedBackend, validate_bicharacter
from .errors import EngineError, ParseError, ValidationError, ZeroValue
from .exactlinalg import Field, Mat
from .hopf_backend import (HopfAlgebraData, HopfBackend, RMatrixData, check_module, validate_hopf,
                           validate_quasitriangular)
from .report import Check, LawReport
from .tower import Tower, Transposition

FIXTURES = ("trivial_commutative", "super_grassmann", "z3_failing_braidpres", "kz2_triangular_hopf")


@dataclass(eq=False)
class Instance:
    name: str
    field: Field
    backend: object
    R: AlgebraData
    T: AlgebraData
    phi: AlgebraMorphism
    X: Bimodule
    transposition: dict
    raw: dict


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("paracocyclic") / "fixtures" / f"{name}.json"))


def resolve_path(spec: str) -> Path:
    """A filesystem path, or the name of a bundled fixture."""
    p = Path(spec)
    if p.exists() or spec not in FIXTURES:
        return p
    return fixture_path(spec)


class _Ctx:
    def __init__(self, path: str):
        self.path = path

    def fail(self, where: str, msg: str):
        raise ParseError(f"{self.path}: {where}: {msg}")

    def get(self, obj, key, where, kind=None):
        if not isinstance(obj, dict) or key not in obj:
            self.fail(where, f"missing field '{key}'")
        v = obj[key]
        if kind is not None and not isinstance(v, kind):
            self.fail(f"{where}.{key}", f"expected {getattr(kind, '__name__', kind)}")
        return v


def _scalar(ctx: _Ctx, f: Field, v, where: str):
    try:
        return f(v)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        ctx.fail(where, f"bad scalar {v!r}: {exc}")


def _matrix(ctx: _Ctx, f: Field, rows, where: str, shape: tuple[int, int] | None = None) -> Mat:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        ctx.fail(where, "expected a nested array")
    if shape is not None and (len(rows) != shape[0] or any(len(r) != shape[1] for r in rows)):
        ctx.fail(where, f"expected shape {shape[0]}x{shape[1]}")
    if rows and any(len(r) != len(rows[0]) for r in rows):
        ctx.fail(where, "ragged matrix")
    data = [[_scalar(ctx, f, v, f"{where}[{i}][{j}]") for j, v in enumerate(r)] for i, r in enumerate(rows)]
    cols = len(rows[0]) if rows else (shape[1] if shape else 0)
    return Mat(f, len(data), cols, data)


def _quads(ctx: _Ctx, f: Field, items, where: str, bounds: tuple[int, int, int]):
    if not isinstance(items, list):
        ctx.fail(where, "expected a list of [i, j, k, coeff]")
    out = []
    for n, q in enumerate(items):
        if not isinstance(q, list) or len(q) != 4 or not all(isinstance(a, int) for a in q[:3]):
            ctx.fail(f"{where}[{n}]", "expected [i, j, k, coeff]")
        if not all(0 <= a < b for a, b in zip(q[:3], bounds)):
            ctx.fail(f"{where}[{n}]", "index out of range")
        out.append((q[0], q[1], q[2], _scalar(ctx, f, q[3], f"{where}[{n}][3]")))
    return out


def _field(ctx: _Ctx, spec) -> Field:
    kind = ctx.get(spec, "kind", "field", str)
    try:
        if kind == "rationals":
            return Field.rationals()
        if kind in ("prime", "prime-field"):
            return Field.prime(ctx.get(spec, "p", "field", int))
    except ValueError as exc:
        ctx.fail("field", str(exc))
    ctx.fail("field.kind", f"unknown field kind {kind!r}")


def _group_element(ctx: _Ctx, grp: FiniteAbelianGroup, v, where: str):
    if isinstance(v, int):
        v = [v]
    if not isinstance(v, list) or len(v) != len(grp.invariant_factors) or not all(isinstance(a, int) for a in v):
        ctx.fail(where, f"bad group element {v!r}")
    return grp.canon(v)


def _backend(ctx: _Ctx, f: Field, spec):
    kind = ctx.get(spec, "kind", "backend", str)
    if kind == "graded":
        factors = ctx.get(spec, "group", "backend", list)
        try:
            grp = FiniteAbelianGroup(tuple(factors))
        except (TypeError, ValueError) as exc:
            ctx.fail("backend.group", str(exc))
        bc = ctx.get(spec, "bicharacter", "backend", dict)
        try:
            if "generators" in bc:
                gamma = BiCharacter.from_generators(grp, f, bc["generators"])
            elif "table" in bc:
                gamma = BiCharacter(grp, f, tuple(tuple(r) for r in bc["table"]))
            elif bc.get("trivial"):
                gamma = BiCharacter.trivial(grp, f)
            else:
                ctx.fail("backend.bicharacter", "expected 'generators', 'table' or 'trivial'")
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            ctx.fail("backend.bicharacter", str(exc))
        if any(not v for row in gamma.table for v in row):
            raise ZeroValue("bi-character takes the value 0, so the braiding is not invertible")
        return GradedBackend(gamma)
    if kind == "hopf":
        hs = ctx.get(spec, "hopf", "backend", dict)
        if "group_algebra" in hs:
            h = HopfAlgebraData.group_algebra(f, ctx.get(hs, "group_algebra", "backend.hopf", int))
        else:
            d = ctx.get(hs, "dim", "backend.hopf", int)
            w = "backend.hopf"
            h = HopfAlgebraData(
                f, d,
                Mat.from_entries(f, d, d * d, ((k, i * d + j, c) for i, j, k, c in
                                               _quads(ctx, f, ctx.get(hs, "mult", w), f"{w}.mult", (d, d, d)))),
                _matrix(ctx, f, [[v] for v in ctx.get(hs, "unit", w, list)], f"{w}.unit", (d, 1)),
                Mat.from_entries(f, d * d, d, ((j * d + k, i, c) for i, j, k, c in
                                               _quads(ctx, f, ctx.get(hs, "comult", w), f"{w}.comult", (d, d, d)))),
                _matrix(ctx, f, [ctx.get(hs, "counit", w, list)], f"{w}.counit", (1, d)),
                _matrix(ctx, f, ctx.get(hs, "antipode", w, list), f"{w}.antipode", (d, d)),
            )
        d = h.dim

        def terms(key):
            items = ctx.get(spec, key, "backend", list)
            out = []
            for n, t in enumerate(items):
                if not isinstance(t, list) or len(t) != 3 or not all(isinstance(a, int) and 0 <= a < d for a in t[:2]):
                    ctx.fail(f"backend.{key}[{n}]", "expected [i, j, coeff]")
                out.append((t[0], t[1], _scalar(ctx, f, t[2], f"backend.{key}[{n}][2]")))
            return out

        return HopfBackend(h, RMatrixData.from_terms(f, d, terms("R"), terms("R_inv")))
    ctx.fail("backend.kind", f"unknown backend {kind!r}")


def _carrier(ctx: _Ctx, backend, spec, where: str):
    if backend.kind == "graded":
        degs = ctx.get(spec, "degrees", where, list)
        return backend.space([_group_element(ctx, backend.group, v, f"{where}.degrees[{i}]")
                              for i, v in enumerate(degs)])
    acts = ctx.get(spec, "action", where, list)
    if len(acts) != backend.hopf.dim:
        ctx.fail(f"{where}.action", f"expected {backend.hopf.dim} action matrices")
    mats = [_matrix(ctx, backend.field, a, f"{where}.action[{i}]") for i, a in enumerate(acts)]
    if mats and any(m.shape != (mats[0].rows, mats[0].rows) for m in mats):
        ctx.fail(f"{where}.action", "action matrices must be square of one size")
    return backend.module(mats)


def _algebra(ctx: _Ctx, backend, spec, name: str) -> AlgebraData:
    where = f"algebras.{name}"
    carrier = _carrier(ctx, backend, ctx.get(spec, "carrier", where, dict), f"{where}.carrier")
    d = backend.dim(carrier)
    unit = _matrix(ctx, backend.field, [[v] for v in ctx.get(spec, "unit", where, list)], f"{where}.unit", (d, 1))
    table = _quads(ctx, backend.field, ctx.get(spec, "mult", where), f"{where}.mult", (d, d, d))
    mult = Mat.from_entries(backend.field, d, d * d, ((k, i * d + j, c) for i, j, k, c in table))
    return AlgebraData(backend, carrier, mult, unit, name)


def _bimodule(ctx: _Ctx, backend, r: AlgebraData, spec) -> Bimodule:
    if spec == "regular":
        return regular_bimodule(r)
    where = "bimodule"
    carrier = _carrier(ctx, backend, ctx.get(spec, "carrier", where, dict), f"{where}.carrier")
    n, dr = backend.dim(carrier), r.dim
    f = backend.field
    left = _quads(ctx, f, ctx.get(spec, "left", where), f"{where}.left", (dr, n, n))
    right = _quads(ctx, f, ctx.get(spec, "right", where), f"{where}.right", (n, dr, n))
    lm = Mat.from_entries(f, n, dr * n, ((k, i * n + j, c) for i, j, k, c in left))
    rm = Mat.from_entries(f, n, n * dr, ((k, i * dr + j, c) for i, j, k, c in right))
    return Bimodule.from_right_action(carrier, lm, rm, r, r, spec.get("name", "X"))


def parse_instance_text(text: str, path: str = "<instance>") -> Instance:
    ctx = _Ctx(path)
    if not text.strip():
        raise ParseError(f"{path}: empty instance file")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(raw, dict):
        ctx.fail("top level", "expected an object")
    f = _field(ctx, ctx.get(raw, "field", "top level", dict))
    try:
        backend = _backend(ctx, f, ctx.get(raw, "backend", "top level", dict))
    except ZeroValue as exc:
        raise ValidationError(str(exc), "bicharacter/nonzero") from exc
    algs = ctx.get(raw, "algebras", "top level", dict)
    r = _algebra(ctx, backend, ctx.get(algs, "R", "algebras", dict), "R")
    t = _algebra(ctx, backend, ctx.get(algs, "T", "algebras", dict), "T")
    phi = AlgebraMorphism(r, t, _matrix(ctx, f, ctx.get(raw, "morphism", "top level", list), "morphism",
                                        (t.dim, r.dim)))
    x = _bimodule(ctx, backend, r, ctx.get(raw, "bimodule", "top level"))
    tr = raw.get("transposition", {"kind": "identity"})
    if not isinstance(tr, dict) or tr.get("kind") not in ("identity", "diagonal", "matrix", "representative",
                                                          "solve"):
        ctx.fail("transposition", "kind must be identity, diagonal, matrix, representative or solve")
    return Instance(str(raw.get("name", Path(path).stem)), f, backend, r, t, phi, x, tr, raw)


def parse_instance(path: str | Path) -> Instance:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"{p}: cannot read: {exc}") from exc
    return parse_instance_text(text, str(p))


def load_fixture(name: str) -> Instance:
    return parse_instance(fixture_path(name))


def validate_instance(inst: Instance) -> LawReport:
    """Backend data, both algebras, the morphism and the bimodule."""
    b = inst.backend
    rep = LawReport()
    if b.kind == "graded":
        bc = validate_bicharacter(b.gamma)
        rep.extend(bc)
    else:
        rep.extend(validate_hopf(b.hopf))
        try:
            rep.extend(validate_quasitriangular(b.hopf, b.rmatrix))
        except EngineError as exc:
            rep.add(Check("quasitriangular/inverse", False, {"error": type(exc).__name__, "message": str(exc)}))
        for nm, obj in (("R", inst.R.carrier), ("T", inst.T.carrier), ("X", inst.X.carrier)):
            rep.extend(check_module(obj, b.hopf), prefix=f"carrier[{nm}]/")
    rep.extend(validate_algebra(inst.R))
    rep.extend(validate_algebra(inst.T))
    rep.extend(validate_algebra_morphism(inst.phi))
    rep.extend(validate_bimodule(inst.X))
    return rep


def require_instance(inst: Instance) -> None:
    rep = validate_instance(inst)
    if not rep.passed:
        bad = rep.failures()[0]
        raise ValidationError(f"instance fails {bad.name}", bad.name)


def build_transposition(tower: Tower, spec: dict) -> Transposition:
    kind = spec.get("kind", "identity")
    f = tower.field
    if kind == "identity":
        return tower.identity_transposition()
    if kind == "diagonal":
        return tower.diagonal_transposition(spec["table"])
    if kind == "representative":
        n = tower.T.dim * tower.X.dim
        return tower.transposition_from_representative(Mat.from_rows(f, spec["matrix"], n), "representative")
    if kind == "matrix":
        m = Mat.from_rows(f, spec["matrix"], tower.Ti(tower.X).dim)
        if m.shape != (tower.To(tower.X).dim, tower.Ti(tower.X).dim):
            raise ValidationError("transposition matrix has the wrong shape", "transposition")
        return Transposition(m, "matrix")
    sols = tower.solve_diagonal_transposition(int(spec["order"]))
    if not sols:
        raise ValidationError("no diagonal transposition of the requested order", "transposition")
    choice = spec.get("choice", 0)
    if choice == "first-nontrivial":
        nontrivial = [s for s in sols if any(c != f.one for c in s.table)]
        if not nontrivial:
            raise ValidationError("only the trivial diagonal transposition exists", "transposition")
        return nontrivial[0]
    return sols[int(choice)]
