"""Relative tensor products, the cyclic quotient and induced maps.

Every construction here is a cokernel of the difference of two actions:

* ``T (x)_R Y`` coequalizes the inside actions of ``T (x) Y`` and keeps the
  outside ones;
* ``T (x)_{R^chi} Y`` coequalizes the outside actions and keeps the inside ones;
* the cyclic quotient of a bimodule coequalizes its two own actions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braided_algebra import (AlgebraMorphism, Bimodule, Module, inside_structure, outside_structure,
                              require_valid, validate_bimodule, validate_module)
from .exactlinalg import Mat, QuotientSpace, cokernel, induce_on_quotients, kron, same_column_space
from .report import Check, LawReport, compare


@dataclass(frozen=True, eq=False)
class RelTensor:
    """``T (x) Y`` modulo one pair of actions, with the other pair inherited."""

    quotient: QuotientSpace
    flavor: str
    bimodule: Bimodule
    base: Bimodule
    coequalized: Bimodule
    inherited_from: Bimodule

    @property
    def proj(self) -> Mat:
        return self.quotient.proj

    @property
    def sect(self) -> Mat:
        return self.quotient.sect

    @property
    def dim(self) -> int:
        return self.quotient.q_dim


def _inherit(ambient: Bimodule, q: QuotientSpace, name: str) -> Bimodule:
    r = ambient.second
    qr = q.tensor_left(ambient.first.dim)
    qr0 = q.tensor_left(r.dim)
    act = induce_on_quotients(ambient.act, qr, q)
    act0 = induce_on_quotients(ambient.act0, qr0, q)
    carrier = ambient.backend.quotient(ambient.carrier, q)
    out = Bimodule(carrier, act, act0, ambient.first, r, name)
    require_valid(validate_bimodule(out), name)
    return out


def _relative(y: Bimodule, phi: AlgebraMorphism, flavor: str) -> RelTensor:
    ins, out = inside_structure(y, phi), outside_structure(y, phi)
    if flavor == "over-R":
        coeq, keep, name = ins, out, f"T(x)_R {y.name}"
    else:
        coeq, keep, name = out, ins, f"T(x)_Rchi {y.name}"
    q = cokernel(coeq.act - coeq.act0)
    return RelTensor(q, flavor, _inherit(keep, q, name), y, coeq, keep)


def tensor_over_R(y: Bimodule, phi: AlgebraMorphism) -> RelTensor:
    return _relative(y, phi, "over-R")


def tensor_over_Rchi(y: Bimodule, phi: AlgebraMorphism) -> RelTensor:
    return _relative(y, phi, "over-Rchi")


def closed_relations_over_R(y: Bimodule, phi: AlgebraMorphism) -> Mat:
    """``t phi(r) (x) y - t (x) r y`` on ``T (x) R (x) Y``."""
    t = phi.target
    iy = Mat.identity(t.field, y.dim)
    return kron(t.mult @ kron(t.identity(), phi.matrix), iy) - kron(t.identity(), y.act)


def closed_relations_over_Rchi(y: Bimodule, phi: AlgebraMorphism) -> Mat:
    """``t (x) (y . r) - (t chi_{T,T} (T phi)) (x) y`` on ``T (x) R (x) Y``."""
    t, b = phi.target, phi.target.backend
    iy = Mat.identity(t.field, y.dim)
    twisted = t.mult @ b.braid(t.carrier, t.carrier) @ kron(t.identity(), phi.matrix)
    return kron(t.identity(), y.act0) - kron(twisted, iy)


def check_closed_forms(y: Bimodule, phi: AlgebraMorphism) -> LawReport:
    """Relation spaces from the coequalizer data against the closed presentations."""
    rep = LawReport()
    o, i = tensor_over_R(y, phi), tensor_over_Rchi(y, phi)
    rep.add(Check("closed-form/over-R", same_column_space(o.quotient.relations, closed_relations_over_R(y, phi))))
    rep.add(Check("closed-form/over-Rchi",
                  same_column_space(i.quotient.relations, closed_relations_over_Rchi(y, phi))))
    return rep


def check_projection_equivariant(rt: RelTensor) -> LawReport:
    """The projection intertwines the ambient actions with the inherited ones."""
    rep = LawReport()
    amb, bim, p = rt.inherited_from, rt.bimodule, rt.proj
    rep.add(compare(f"projection[{rt.flavor}]/first", p @ amb.act, bim.act @ kron(amb.first.identity(), p)))
    rep.add(compare(f"projection[{rt.flavor}]/second", p @ amb.act0, bim.act0 @ kron(amb.second.identity(), p)))
    return rep


@dataclass(frozen=True, eq=False)
class PiSpace:
    quotient: QuotientSpace
    base: Bimodule

    @property
    def proj(self) -> Mat:
        return self.quotient.proj

    @property
    def dim(self) -> int:
        return self.quotient.q_dim


def pi_functor(y: Bimodule) -> PiSpace:
    return PiSpace(cokernel(y.act - y.act0), y)


def pi_map(f: Mat, src: PiSpace, dst: PiSpace) -> Mat:
    """The map on cyclic quotients induced by a bimodule map."""
    return induce_on_quotients(f, src.quotient, dst.quotient)


def iterated_tensor(x: Bimodule, phi: AlgebraMorphism, k: int) -> list[RelTensor]:
    """Stages ``T (x)_R ... (x)_R X`` with ``1 .. k`` copies of ``T``."""
    stages, y = [], x
    for _ in range(k):
        rt = tensor_over_R(y, phi)
        stages.append(rt)
        y = rt.bimodule
    return stages


def cyclic_tensor(n: int, x: Bimodule, phi: AlgebraMorphism) -> PiSpace:
    """The braided cyclic tensor product of ``n + 1`` copies of ``T`` with ``X``."""
    stages = iterated_tensor(x, phi, n + 1)
    return pi_functor(stages[-1].bimodule)


def coequalize_modules(f: Mat, g: Mat, target: Module) -> tuple[Module, QuotientSpace]:
    """Coequalizer of two module maps into ``target``, with its induced action.

    The quotient of the target by the image of ``f - g`` inherits a unique
    action making the projection a module map.
    """
    q = cokernel(f - g)
    a, b = target.algebra, target.algebra.backend
    act = induce_on_quotients(target.act, q.tensor_left(a.dim), q)
    out = Module(a, b.quotient(target.carrier, q), act)
    require_valid(validate_module(out), "coequalizer module")
    return out, q
