"""Modules over a finite-dimensional quasitriangular Hopf algebra.

With ``R^{-1} = sum c_j (x) d_j`` the braiding is
``m (x) n -> sum (c_j . n) (x) (d_j . m)``; tensor products carry the
diagonal action through the comultiplication.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .braided_backend import BraidedBackend
from .errors import NotInverse, NotWellDefined, ValidationError
from .exactlinalg import Field, Mat, QuotientSpace, induce_on_quotients, kron, permutation
from .report import Check, LawReport, compare


def flip(field: Field, m: int, n: int) -> Mat:
    """The plain swap ``K^m (x) K^n -> K^n (x) K^m``."""
    return permutation(field, [j * m + i for i in range(m) for j in range(n)])


@dataclass(frozen=True, eq=False)
class HopfAlgebraData:
    """Structure maps on the basis ``h_0 .. h_{d-1}`` as matrices.

    ``mult`` is ``d x d^2``, ``comult`` is ``d^2 x d``, ``unit`` is ``d x 1``,
    ``counit`` is ``1 x d`` and ``antipode`` is ``d x d``.
    """

    field: Field
    dim: int
    mult: Mat
    unit: Mat
    comult: Mat
    counit: Mat
    antipode: Mat

    @classmethod
    def from_tables(cls, field: Field, dim: int, mult, unit, comult, counit, antipode) -> "HopfAlgebraData":
        d = dim
        m = Mat.from_entries(field, d, d * d, ((k, i * d + j, field(c)) for i, j, k, c in mult))
        dl = Mat.from_entries(field, d * d, d, ((j * d + k, i, field(c)) for i, j, k, c in comult))
        return cls(field, d, m, Mat.column(field, unit), dl,
                   Mat.from_rows(field, [counit]), Mat.from_rows(field, antipode))

    @classmethod
    def group_algebra(cls, field: Field, n: int) -> "HopfAlgebraData":
        """``K Z_n`` with basis ``g^0 .. g^{n-1}``."""
        mult = [(i, j, (i + j) % n, 1) for i in range(n) for j in range(n)]
        comult = [(i, i, i, 1) for i in range(n)]
        anti = [[1 if (i + j) % n == 0 else 0 for j in range(n)] for i in range(n)]
        return cls.from_tables(field, n, mult, [1] + [0] * (n - 1), comult, [1] * n, anti)

    def basis(self, i: int) -> Mat:
        return Mat.from_entries(self.field, self.dim, 1, [(i, 0, self.field.one)])

    def mult2(self) -> Mat:
        """Multiplication of ``H (x) H`` with itself."""
        d, f = self.dim, self.field
        mid = kron(kron(Mat.identity(f, d), flip(f, d, d)), Mat.identity(f, d))
        return kron(self.mult, self.mult) @ mid


def validate_hopf(h: HopfAlgebraData) -> LawReport:
    f, d = h.field, h.dim
    i1 = Mat.identity(f, d)
    one = Mat.identity(f, 1)
    rep = LawReport()
    rep.add(compare("hopf/associative", h.mult @ kron(h.mult, i1), h.mult @ kron(i1, h.mult)))
    rep.add(compare("hopf/unit-left", h.mult @ kron(h.unit, i1), i1))
    rep.add(compare("hopf/unit-right", h.mult @ kron(i1, h.unit), i1))
    rep.add(compare("hopf/coassociative", kron(h.comult, i1) @ h.comult, kron(i1, h.comult) @ h.comult))
    rep.add(compare("hopf/counit-left", kron(h.counit, i1) @ h.comult, i1))
    rep.add(compare("hopf/counit-right", kron(i1, h.counit) @ h.comult, i1))
    rep.add(compare("hopf/comult-multiplicative", h.comult @ h.mult, h.mult2() @ kron(h.comult, h.comult)))
    rep.add(compare("hopf/comult-unital", h.comult @ h.unit, kron(h.unit, h.unit)))
    rep.add(compare("hopf/counit-multiplicative", h.counit @ h.mult, kron(h.counit, h.counit)))
    rep.add(compare("hopf/counit-unital", h.counit @ h.unit, one))
    ue = h.unit @ h.counit
    rep.add(compare("hopf/antipode-left", h.mult @ kron(h.antipode, i1) @ h.comult, ue))
    rep.add(compare("hopf/antipode-right", h.mult @ kron(i1, h.antipode) @ h.comult, ue))
    return rep


@dataclass(frozen=True, eq=False)
class RMatrixData:
    """``R`` and ``R^{-1}`` as column vectors in ``H (x) H``."""

    R: Mat
    R_inv: Mat

    @classmethod
    def from_terms(cls, field: Field, dim: int, r_terms, rinv_terms) -> "RMatrixData":
        def vec(terms):
            return Mat.from_entries(field, dim * dim, 1, ((i * dim + j, 0, field(c)) for i, j, c in terms))

        return cls(vec(r_terms), vec(rinv_terms))

    def terms(self, which: str = "R") -> list[tuple[int, int, object]]:
        v = self.R if which == "R" else self.R_inv
        d = int(round(v.rows ** 0.5))
        return [(k // d, k % d, v[k, 0]) for k in range(v.rows) if v[k, 0]]


def _leg_embedding(h: HopfAlgebraData, legs: tuple[int, int]) -> Mat:
    """``H (x) H -> H^{(x)3}`` placing the two factors in ``legs`` and 1 elsewhere."""
    f, d = h.field, h.dim
    entries = []
    for i in range(d):
        for j in range(d):
            for k in range(d):  # leftover position takes the unit element
                u = h.unit[k, 0]
                if not u:
                    continue
                idx = [0, 0, 0]
                idx[legs[0]], idx[legs[1]] = i, j
                rest = 3 - legs[0] - legs[1]
                idx[rest] = k
                entries.append((idx[0] * d * d + idx[1] * d + idx[2], i * d + j, u))
    return Mat.from_entries(f, d ** 3, d * d, entries)


def _mult3(h: HopfAlgebraData, a: Mat, b: Mat) -> Mat:
    """Product of two elements of ``H^{(x)3}`` given as column vectors."""
    f, d = h.field, h.dim
    out = [f.zero] * (d ** 3)
    for p in range(d ** 3):
        x = a[p, 0]
        if not x:
            continue
        for q in range(d ** 3):
            y = b[q, 0]
            if not y:
                continue
            ps, qs = (p // (d * d), p // d % d, p % d), (q // (d * d), q // d % d, q % d)
            prods = [h.mult.col(ps[t] * d + qs[t]) for t in range(3)]
            for i, j, k in itertools.product(range(d), repeat=3):
                c = prods[0][i] * prods[1][j] * prods[2][k]
                if c:
                    out[i * d * d + j * d + k] = f.reduce(out[i * d * d + j * d + k] + x * y * c)
    return Mat.column(f, out)


def validate_quasitriangular(h: HopfAlgebraData, r: RMatrixData) -> LawReport:
    f, d = h.field, h.dim
    m2 = h.mult2()
    one2 = kron(h.unit, h.unit)
    if m2 @ kron(r.R, r.R_inv) != one2 or m2 @ kron(r.R_inv, r.R) != one2:
        raise NotInverse("R * R_inv is not 1 (x) 1")
    rep = LawReport()
    sw = flip(f, d, d)
    bad = None
    for i in range(d):
        delta = h.comult @ h.basis(i)
        lhs = sw @ delta
        rhs = m2 @ kron(m2 @ kron(r.R, delta), r.R_inv)
        if lhs != rhs:
            bad = {"basis": i}
            break
    rep.add(Check("quasitriangular/conjugates-coproduct", bad is None, bad))
    i1 = Mat.identity(f, d)
    r13, r23, r12 = (_leg_embedding(h, legs) @ r.R for legs in ((0, 2), (1, 2), (0, 1)))
    rep.add(compare("quasitriangular/delta-left", kron(h.comult, i1) @ r.R, _mult3(h, r13, r23)))
    rep.add(compare("quasitriangular/delta-right", kron(i1, h.comult) @ r.R, _mult3(h, r13, r12)))
    rep.info["triangular"] = r.R_inv == sw @ r.R
    return rep


@dataclass(frozen=True, eq=False)
class HModuleSpace:
    """A left ``H``-module given by one action matrix per basis element of ``H``."""

    dim: int
    action: tuple[Mat, ...]

    def rho(self, i: int) -> Mat:
        return self.action[i]

    def key(self) -> tuple:
        return (self.dim, tuple(m.data for m in self.action))

    def __eq__(self, other):
        return isinstance(other, HModuleSpace) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def check_module(m: HModuleSpace, h: HopfAlgebraData) -> LawReport:
    f, d = h.field, h.dim
    rep = LawReport()
    bad = None
    for i in range(d):
        for j in range(d):
            prod = h.mult.col(i * d + j)
            rhs = Mat.zeros(f, m.dim, m.dim)
            for k, c in enumerate(prod):
                if c:
                    rhs = rhs + m.rho(k).scale(c)
            if m.rho(i) @ m.rho(j) != rhs:
                bad = {"h": [i, j]}
                break
        if bad:
            break
    rep.add(Check("module/multiplicative", bad is None, bad))
    one = Mat.zeros(f, m.dim, m.dim)
    for k in range(d):
        if h.unit[k, 0]:
            one = one + m.rho(k).scale(h.unit[k, 0])
    rep.add(compare("module/unital", one, Mat.identity(f, m.dim)))
    return rep


def module_tensor(a: HModuleSpace, b: HModuleSpace, h: HopfAlgebraData) -> HModuleSpace:
    f, d = h.field, h.dim
    acts = []
    for i in range(d):
        delta = h.comult.col(i)
        acc = Mat.zeros(f, a.dim * b.dim, a.dim * b.dim)
        for k, c in enumerate(delta):
            if c:
                acc = acc + kron(a.rho(k // d), b.rho(k % d)).scale(c)
        acts.append(acc)
    return HModuleSpace(a.dim * b.dim, tuple(acts))


def _linear_combo(f: Field, terms, dim_out: int, dim_in: int) -> Mat:
    acc = Mat.zeros(f, dim_out, dim_in)
    for m, c in terms:
        acc = acc + m.scale(c)
    return acc


def braid_modules(m: HModuleSpace, n: HModuleSpace, h: HopfAlgebraData, r: RMatrixData) -> Mat:
    """``m (x) n -> sum_j (c_j . n) (x) (d_j . m)`` for ``R^{-1} = sum c_j (x) d_j``."""
    f = h.field
    sw = flip(f, m.dim, n.dim)
    terms = [(kron(n.rho(c), m.rho(dd)) @ sw, v) for c, dd, v in r.terms("R_inv")]
    return _linear_combo(f, terms, m.dim * n.dim, m.dim * n.dim)


def braid_modules_inverse(m: HModuleSpace, n: HModuleSpace, h: HopfAlgebraData, r: RMatrixData) -> Mat:
    """``n (x) m -> sum_i (b_i . m) (x) (a_i . n)`` for ``R = sum a_i (x) b_i``."""
    f = h.field
    sw = flip(f, n.dim, m.dim)
    terms = [(kron(m.rho(b), n.rho(a)) @ sw, v) for a, b, v in r.terms("R")]
    return _linear_combo(f, terms, m.dim * n.dim, m.dim * n.dim)


class HopfBackend(BraidedBackend):
    kind = "hopf"

    def __init__(self, h: HopfAlgebraData, r: RMatrixData):
        self.hopf = h
        self.rmatrix = r
        self.field = h.field
        self._cache: dict = {}

    def module(self, action_matrices) -> HModuleSpace:
        acts = tuple(a if isinstance(a, Mat) else Mat.from_rows(self.field, a) for a in action_matrices)
        dim = acts[0].rows if acts else 0
        return HModuleSpace(dim, acts)

    def unit_object(self) -> HModuleSpace:
        f = self.field
        return HModuleSpace(1, tuple(Mat(f, 1, 1, [[self.hopf.counit[0, i]]]) for i in range(self.hopf.dim)))

    def trivial_module(self, dim: int) -> HModuleSpace:
        f = self.field
        return HModuleSpace(dim, tuple(Mat.identity(f, dim).scale(self.hopf.counit[0, i])
                                       for i in range(self.hopf.dim)))

    def tensor(self, a: HModuleSpace, b: HModuleSpace) -> HModuleSpace:
        key = ("t", a, b)
        if key not in self._cache:
            self._cache[key] = module_tensor(a, b, self.hopf)
        return self._cache[key]

    def braid(self, a: HModuleSpace, b: HModuleSpace) -> Mat:
        key = ("b", a, b)
        if key not in self._cache:
            self._cache[key] = braid_modules(a, b, self.hopf, self.rmatrix)
        return self._cache[key]

    def braid_inv(self, a: HModuleSpace, b: HModuleSpace) -> Mat:
        key = ("bi", a, b)
        if key not in self._cache:
            self._cache[key] = braid_modules_inverse(a, b, self.hopf, self.rmatrix)
        return self._cache[key]

    def morphism_witness(self, f: Mat, a: HModuleSpace, b: HModuleSpace):
        for i in range(self.hopf.dim):
            if b.rho(i) @ f != f @ a.rho(i):
                return {"h": i, "reason": "not H-linear"}
        return None

    def morphism_constraints(self, a: HModuleSpace, b: HModuleSpace) -> list:
        return [lambda m, i=i: b.rho(i) @ m - m @ a.rho(i) for i in range(self.hopf.dim)]

    def quotient(self, obj: HModuleSpace, q: QuotientSpace) -> HModuleSpace:
        try:
            acts = tuple(induce_on_quotients(obj.rho(i), q, q) for i in range(self.hopf.dim))
        except NotWellDefined as exc:
            raise ValidationError(f"relations are not a submodule: {exc}", "submodule") from exc
        return HModuleSpace(q.q_dim, acts)

    def describe(self) -> dict:
        return {"kind": "hopf", "dim": self.hopf.dim}


def check_h_linearity(backend: HopfBackend, m: HModuleSpace, n: HModuleSpace) -> Check:
    chi = backend.braid(m, n)
    w = backend.morphism_witness(chi, backend.tensor(m, n), backend.tensor(n, m))
    return Check("braid/h-linear", w is None, w)
