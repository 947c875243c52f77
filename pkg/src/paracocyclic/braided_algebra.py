"""Algebras, modules and bimodules inside a braided backend.

Actions are matrices ``A (x) X -> X``. A bimodule stores its second action
already in left form: it is an action of the twisted algebra ``R^chi`` whose
product is ``r . chi_{R,R}``. A right action ``mu: X (x) R -> X`` becomes
``mu . chi_{R,X}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braided_backend import BraidedBackend, yang_baxter_sides
from .errors import ValidationError
from .exactlinalg import Mat, kron, solve_linear_maps
from .report import Check, LawReport, compare


@dataclass(frozen=True, eq=False)
class AlgebraData:
    """Unital algebra: ``mult`` is ``d x d^2`` and ``unit`` is ``d x 1``."""

    backend: BraidedBackend
    carrier: object
    mult: Mat
    unit: Mat
    name: str = "A"

    @property
    def dim(self) -> int:
        return self.backend.dim(self.carrier)

    @property
    def field(self):
        return self.backend.field

    @classmethod
    def from_table(cls, backend, carrier, table: Sequence, unit: Sequence, name: str = "A") -> "AlgebraData":
        """``table`` lists ``(i, j, k, c)``: the product ``e_i e_j`` contains ``c e_k``."""
        f = backend.field
        d = backend.dim(carrier)
        mult = Mat.from_entries(f, d, d * d, ((k, i * d + j, f(c)) for i, j, k, c in table))
        return cls(backend, carrier, mult, Mat.column(f, unit), name)

    def identity(self) -> Mat:
        return Mat.identity(self.field, self.dim)

    def structure_table(self) -> list[tuple[int, int, int, object]]:
        d = self.dim
        return [(c // d, c % d, k, self.mult[k, c]) for c in range(d * d) for k in range(d) if self.mult[k, c]]


@dataclass(frozen=True, eq=False)
class AlgebraMorphism:
    source: AlgebraData
    target: AlgebraData
    matrix: Mat


@dataclass(frozen=True, eq=False)
class Module:
    algebra: AlgebraData
    carrier: object
    act: Mat


@dataclass(frozen=True, eq=False)
class Bimodule:
    """``act``: ``first (x) X -> X``; ``act0``: left ``second^chi``-action."""

    carrier: object
    act: Mat
    act0: Mat
    first: AlgebraData
    second: AlgebraData
    name: str = "X"

    @property
    def backend(self) -> BraidedBackend:
        return self.second.backend

    @property
    def dim(self) -> int:
        return self.backend.dim(self.carrier)

    @classmethod
    def from_right_action(cls, carrier, left: Mat, right: Mat, first: AlgebraData, second: AlgebraData,
                          name: str = "X") -> "Bimodule":
        """Convert a right action ``X (x) R -> X`` by composing with ``chi_{R,X}``."""
        act0 = right @ second.backend.braid(second.carrier, carrier)
        return cls(carrier, left, act0, first, second, name)


def _decode(index: int, dims: Sequence[int]) -> list[int]:
    out = []
    for d in reversed(dims):
        out.append(index % d)
        index //= d
    return out[::-1]


def _compare_indexed(name: str, lhs: Mat, rhs: Mat, dims: Sequence[int]) -> Check:
    c = compare(name, lhs, rhs)
    if not c.passed and "basis" in c.witness:
        c.witness["indices"] = _decode(c.witness["basis"], dims)
    return c


def _morphism_check(name: str, backend, f: Mat, a, b) -> Check:
    w = backend.morphism_witness(f, a, b)
    return Check(name, w is None, w)


def validate_algebra(a: AlgebraData) -> LawReport:
    b, d, i = a.backend, a.dim, a.identity()
    rep = LawReport()
    if d == 0:
        rep.add(Check(f"algebra[{a.name}]/associative", True))
        return rep
    rep.add(_compare_indexed(f"algebra[{a.name}]/associative", a.mult @ kron(a.mult, i), a.mult @ kron(i, a.mult),
                             (d, d, d)))
    rep.add(_compare_indexed(f"algebra[{a.name}]/unit-left", a.mult @ kron(a.unit, i), i, (d,)))
    rep.add(_compare_indexed(f"algebra[{a.name}]/unit-right", a.mult @ kron(i, a.unit), i, (d,)))
    aa = b.tensor(a.carrier, a.carrier)
    rep.add(_morphism_check(f"algebra[{a.name}]/mult-morphism", b, a.mult, aa, a.carrier))
    rep.add(_morphism_check(f"algebra[{a.name}]/unit-morphism", b, a.unit, b.unit_object(), a.carrier))
    return rep


def validate_algebra_morphism(phi: AlgebraMorphism) -> LawReport:
    s, t, m = phi.source, phi.target, phi.matrix
    rep = LawReport()
    if m.shape != (t.dim, s.dim):
        rep.add(Check("morphism/shape", False, {"shape": list(m.shape)}))
        return rep
    rep.add(_compare_indexed("morphism/multiplicative", m @ s.mult, t.mult @ kron(m, m), (s.dim, s.dim)))
    rep.add(compare("morphism/unital", m @ s.unit, t.unit))
    rep.add(_morphism_check("morphism/backend-morphism", s.backend, m, s.carrier, t.carrier))
    return rep


def check_braid_preserving(phi: AlgebraMorphism) -> LawReport:
    """Both identities ``(phi T) chi_{T,R} = (phi T) chi^{-1}_{R,T}`` and
    ``chi_{R,T} (R phi) = chi^{-1}_{T,R} (R phi)``."""
    r, t = phi.source, phi.target
    b = r.backend
    pt = kron(phi.matrix, t.identity())
    rp = kron(r.identity(), phi.matrix)
    rep = LawReport()
    rep.add(_compare_indexed("braid-preserving/T-R", pt @ b.braid(t.carrier, r.carrier),
                             pt @ b.braid_inv(r.carrier, t.carrier), (t.dim, r.dim)))
    rep.add(_compare_indexed("braid-preserving/R-R", b.braid(r.carrier, t.carrier) @ rp,
                             b.braid_inv(t.carrier, r.carrier) @ rp, (r.dim, r.dim)))
    return rep


def opposite_chi(r: AlgebraData) -> AlgebraData:
    """``R^chi``: the same unit, multiplication ``r . chi_{R,R}``."""
    out = AlgebraData(r.backend, r.carrier, r.mult @ r.backend.braid(r.carrier, r.carrier), r.unit, r.name + "^chi")
    rep = validate_algebra(out)
    if not rep.passed:
        raise ValidationError(f"twisted algebra fails {rep.failures()[0].name}", rep.failures()[0].name)
    return out


def inverse_twist(r: AlgebraData) -> AlgebraData:
    """Multiplication ``r . chi^{-1}_{R,R}``; undoes :func:`opposite_chi`."""
    return AlgebraData(r.backend, r.carrier, r.mult @ r.backend.braid_inv(r.carrier, r.carrier), r.unit,
                       r.name + "^chi-inv")


def validate_module(m: Module) -> LawReport:
    a, b = m.algebra, m.algebra.backend
    n = b.dim(m.carrier)
    ix = Mat.identity(b.field, n)
    rep = LawReport()
    if n == 0:
        rep.add(Check("module/associative", True))
        return rep
    rep.add(_compare_indexed("module/associative", m.act @ kron(a.identity(), m.act), m.act @ kron(a.mult, ix),
                             (a.dim, a.dim, n)))
    rep.add(compare("module/unital", m.act @ kron(a.unit, ix), ix))
    rep.add(_morphism_check("module/backend-morphism", b, m.act, b.tensor(a.carrier, m.carrier), m.carrier))
    return rep


def is_module_map(f: Mat, m: Module, n: Module) -> Check:
    a = m.algebra
    return compare("module-map", f @ m.act, n.act @ kron(a.identity(), f))


def validate_bimodule(x: Bimodule, prefix: str = "bimodule") -> LawReport:
    a, r, b = x.first, x.second, x.backend
    n = x.dim
    rep = LawReport()
    names = ["first-associative", "first-unital", "second-associative", "second-unital", "compatible",
             "first-morphism", "second-morphism"]
    if n == 0:
        for nm in names:
            rep.add(Check(f"{prefix}/{nm}", True))
        return rep
    ix = Mat.identity(b.field, n)
    ia, ir = a.identity(), r.identity()
    rep.add(_compare_indexed(f"{prefix}/first-associative", x.act @ kron(ia, x.act), x.act @ kron(a.mult, ix),
                             (a.dim, a.dim, n)))
    rep.add(compare(f"{prefix}/first-unital", x.act @ kron(a.unit, ix), ix))
    rchi = r.mult @ b.braid(r.carrier, r.carrier)
    rep.add(_compare_indexed(f"{prefix}/second-associative", x.act0 @ kron(ir, x.act0), x.act0 @ kron(rchi, ix),
                             (r.dim, r.dim, n)))
    rep.add(compare(f"{prefix}/second-unital", x.act0 @ kron(r.unit, ix), ix))
    lhs = x.act @ kron(ia, x.act0) @ kron(b.braid(r.carrier, a.carrier), ix)
    rhs = x.act0 @ kron(ir, x.act)
    rep.add(_compare_indexed(f"{prefix}/compatible", lhs, rhs, (r.dim, a.dim, n)))
    rep.add(_morphism_check(f"{prefix}/first-morphism", b, x.act, b.tensor(a.carrier, x.carrier), x.carrier))
    rep.add(_morphism_check(f"{prefix}/second-morphism", b, x.act0, b.tensor(r.carrier, x.carrier), x.carrier))
    return rep


def require_valid(rep: LawReport, what: str) -> None:
    if not rep.passed:
        bad = rep.failures()[0]
        raise ValidationError(f"{what} fails {bad.name}: {bad.witness}", bad.name)


def is_bimodule_map(f: Mat, x: Bimodule, y: Bimodule, name: str = "bimodule-map") -> LawReport:
    rep = LawReport()
    if f.shape != (y.dim, x.dim):
        rep.add(Check(f"{name}/shape", False, {"shape": list(f.shape)}))
        return rep
    rep.add(compare(f"{name}/first", f @ x.act, y.act @ kron(x.first.identity(), f)))
    rep.add(compare(f"{name}/second", f @ x.act0, y.act0 @ kron(x.second.identity(), f)))
    rep.add(_morphism_check(f"{name}/backend-morphism", x.backend, f, x.carrier, y.carrier))
    return rep


def bimodule_hom_basis(x: Bimodule, y: Bimodule) -> list[Mat]:
    """Basis of the space of bimodule maps ``x -> y``."""
    b = x.backend
    ia, ir = x.first.identity(), x.second.identity()
    residuals = [
        lambda f: f @ x.act - y.act @ kron(ia, f),
        lambda f: f @ x.act0 - y.act0 @ kron(ir, f),
    ] + b.morphism_constraints(x.carrier, y.carrier)
    if x.dim == 0 or y.dim == 0:
        return []
    return solve_linear_maps(b.field, y.dim, x.dim, residuals)


def morphism_hom_basis(backend, a, b) -> list[Mat]:
    return solve_linear_maps(backend.field, backend.dim(b), backend.dim(a), backend.morphism_constraints(a, b))


def regular_bimodule(r: AlgebraData) -> Bimodule:
    """``R`` over itself: left multiplication and the right one turned left."""
    return Bimodule.from_right_action(r.carrier, r.mult, r.mult, r, r, name=r.name)


def restrict(y: Bimodule, phi: AlgebraMorphism) -> Bimodule:
    """Restriction of the first action along ``phi``."""
    iy = Mat.identity(y.backend.field, y.dim)
    return Bimodule(y.carrier, y.act @ kron(phi.matrix, iy), y.act0, phi.source, y.second, y.name + "|phi")


def regular_tr_bimodule(phi: AlgebraMorphism) -> Bimodule:
    """``T`` as a ``(T, R)``-bimodule, with ``R`` acting on the right through ``phi``."""
    t, r = phi.target, phi.source
    right = t.mult @ kron(t.identity(), phi.matrix)
    return Bimodule.from_right_action(t.carrier, t.mult, right, t, r, name=t.name)


def _built(x: Bimodule, what: str) -> Bimodule:
    require_valid(validate_bimodule(x), what)
    return x


def inside_structure(y: Bimodule, phi: AlgebraMorphism, validate: bool = True) -> Bimodule:
    """``x_i = (T y) (chi_{R,T} Y)`` and ``x_i^0 = (t Y)(T phi Y)(chi_{R,T} Y)`` on ``T (x) Y``."""
    r, t = phi.source, phi.target
    b = r.backend
    iy = Mat.identity(b.field, y.dim)
    lr = kron(b.braid(r.carrier, t.carrier), iy)
    act = kron(t.identity(), y.act) @ lr
    act0 = kron(t.mult, iy) @ kron(kron(t.identity(), phi.matrix), iy) @ lr
    out = Bimodule(b.tensor(t.carrier, y.carrier), act, act0, r, r, f"T_i({y.name})")
    return _built(out, "inside structure") if validate else out


def outside_structure(y: Bimodule, phi: AlgebraMorphism, validate: bool = True) -> Bimodule:
    """``x_o = (t Y)(phi T Y)`` and ``x_o^0 = (T y^0)(chi_{R,T} Y)`` on ``T (x) Y``."""
    r, t = phi.source, phi.target
    b = r.backend
    iy = Mat.identity(b.field, y.dim)
    act = kron(t.mult, iy) @ kron(kron(phi.matrix, t.identity()), iy)
    act0 = kron(t.identity(), y.act0) @ kron(b.braid(r.carrier, t.carrier), iy)
    out = Bimodule(b.tensor(t.carrier, y.carrier), act, act0, r, r, f"T_o({y.name})")
    return _built(out, "outside structure") if validate else out


def lift_R_tilde(y: Bimodule, validate: bool = True) -> Bimodule:
    """Both actions on ``R (x) Y`` pass the acting ``R`` under the first factor by ``chi_{R,R}``."""
    r, b = y.second, y.backend
    iy = Mat.identity(b.field, y.dim)
    rr = kron(b.braid(r.carrier, r.carrier), iy)
    out = Bimodule(b.tensor(r.carrier, y.carrier), kron(r.identity(), y.act) @ rr,
                   kron(r.identity(), y.act0) @ rr, y.first, r, f"R~({y.name})")
    return _built(out, "lift") if validate else out


def lift_R_tilde0(y: Bimodule, validate: bool = True) -> Bimodule:
    """Mirror lift built from ``chi^{-1}_{R,R}``."""
    r, b = y.second, y.backend
    iy = Mat.identity(b.field, y.dim)
    rr = kron(b.braid_inv(r.carrier, r.carrier), iy)
    out = Bimodule(b.tensor(r.carrier, y.carrier), kron(r.identity(), y.act) @ rr,
                   kron(r.identity(), y.act0) @ rr, y.first, r, f"R~0({y.name})")
    return _built(out, "mirror lift") if validate else out


def free_module(v, a: AlgebraData) -> Module:
    b = a.backend
    out = Module(a, b.tensor(a.carrier, v), kron(a.mult, Mat.identity(b.field, b.dim(v))))
    require_valid(validate_module(out), "free module")
    return out


def check_distributive_law(name: str, first: AlgebraData, second: AlgebraData, law: Mat, x=None) -> LawReport:
    """The four axioms for ``law: A B -> B A`` between monads ``A (x) -`` and ``B (x) -``.

    The two interchange-with-``A`` axioms are the ones spelled out for
    distributive laws; the ``B`` axioms are their standard mirror images.
    """
    b = first.backend
    x = b.unit_object() if x is None else x
    ix = Mat.identity(b.field, b.dim(x))
    ia, ib = first.identity(), second.identity()
    da, db, dx = first.dim, second.dim, b.dim(x)

    def k(*ms):
        out = ms[0]
        for m in ms[1:]:
            out = kron(out, m)
        return kron(out, ix)

    lx = k(law)
    rep = LawReport()
    lhs = lx @ k(first.mult, ib)
    rhs = k(ib, first.mult) @ k(law, ia) @ k(ia, law)
    rep.add(_compare_indexed(f"{name}/first-mult", lhs, rhs, (da, da, db, dx)))
    rep.add(_compare_indexed(f"{name}/first-unit", lx @ k(first.unit, ib), k(ib, first.unit), (db, dx)))
    lhs = lx @ k(ia, second.mult)
    rhs = k(second.mult, ia) @ k(ib, law) @ k(law, ib)
    rep.add(_compare_indexed(f"{name}/second-mult", lhs, rhs, (da, db, db, dx)))
    rep.add(_compare_indexed(f"{name}/second-unit", lx @ k(ia, second.unit), k(second.unit, ia), (da, dx)))
    return rep


def check_braiding_laws(phi: AlgebraMorphism, x=None) -> LawReport:
    """Distributive-law axioms for the braiding-induced laws, plus Yang-Baxter for the endo-laws."""
    r, t = phi.source, phi.target
    b = r.backend
    rep = LawReport()
    rep.extend(check_distributive_law("law-l", r, t, b.braid(r.carrier, t.carrier), x))
    rep.extend(check_distributive_law("law-r", r, r, b.braid(r.carrier, r.carrier), x))
    rep.extend(check_distributive_law("law-t", t, t, b.braid(t.carrier, t.carrier), x))
    for nm, a in (("law-r", r), ("law-t", t)):
        lhs, rhs = yang_baxter_sides(b, a.carrier, a.carrier, a.carrier)
        rep.add(compare(f"{nm}/yang-baxter", lhs, rhs))
    return rep


def check_structure_naturality(f: Mat, y: Bimodule, z: Bimodule, phi: AlgebraMorphism) -> LawReport:
    """``T (x) f`` intertwines the inside and the outside structures."""
    tf = kron(phi.target.identity(), f)
    rep = LawReport()
    rep.extend(is_bimodule_map(tf, inside_structure(y, phi), inside_structure(z, phi), "naturality/inside"))
    rep.extend(is_bimodule_map(tf, outside_structure(y, phi), outside_structure(z, phi), "naturality/outside"))
    return rep


def check_lift_interchange(y: Bimodule, phi: AlgebraMorphism) -> LawReport:
    """``chi_{R,T} (x) Y`` is a bimodule map from the lift of ``T_o Y`` to ``T_o`` of the lift."""
    r, t = phi.source, phi.target
    b = r.backend
    law = kron(b.braid(r.carrier, t.carrier), Mat.identity(b.field, y.dim))
    src = lift_R_tilde(outside_structure(y, phi))
    dst = outside_structure(lift_R_tilde(y), phi)
    return is_bimodule_map(law, src, dst, "naturality/lift-outside")
