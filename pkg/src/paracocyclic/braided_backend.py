"""Group-graded vector spaces braided by a bi-character.

For ``v`` of degree ``h`` and ``w`` of degree ``k`` the braiding is
``v (x) w -> gamma(k, h) w (x) v``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import GroupMismatch, LinalgError, ZeroValue
from .exactlinalg import Field, Mat, QuotientSpace, kron
from .report import Check, LawReport, compare

MAX_GROUP_ORDER = 64


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """``Z_{n1} x ... x Z_{nk}``; elements are tuples of least residues."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(int(n) for n in self.invariant_factors))
        if any(n < 2 for n in self.invariant_factors):
            raise ValueError("invariant factors must be at least 2")
        if self.order > MAX_GROUP_ORDER:
            raise ValueError(f"groups are limited to order {MAX_GROUP_ORDER}")

    @classmethod
    def cyclic(cls, n: int) -> "FiniteAbelianGroup":
        return cls((n,))

    @property
    def order(self) -> int:
        out = 1
        for n in self.invariant_factors:
            out *= n
        return out

    @property
    def exponent(self) -> int:
        from math import lcm

        return lcm(*self.invariant_factors) if self.invariant_factors else 1

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.invariant_factors)

    def elements(self) -> list[tuple[int, ...]]:
        return [tuple(e) for e in itertools.product(*(range(n) for n in self.invariant_factors))]

    def canon(self, g) -> tuple[int, ...]:
        if isinstance(g, int):
            g = (g,)
        g = tuple(g)
        if len(g) != len(self.invariant_factors):
            raise GroupMismatch(f"{g} is not an element of Z{self.invariant_factors}")
        return tuple(a % n for a, n in zip(g, self.invariant_factors))

    def add(self, g, h) -> tuple[int, ...]:
        return tuple((a + b) % n for a, b, n in zip(g, h, self.invariant_factors))

    def neg(self, g) -> tuple[int, ...]:
        return tuple(-a % n for a, n in zip(g, self.invariant_factors))

    def index(self, g) -> int:
        idx = 0
        for a, n in zip(self.canon(g), self.invariant_factors):
            idx = idx * n + a
        return idx

    def sum(self, gs) -> tuple[int, ...]:
        out = self.identity
        for g in gs:
            out = self.add(out, g)
        return out


@dataclass(frozen=True)
class BiCharacter:
    """Dense table ``gamma(g, h)`` indexed by element positions."""

    group: FiniteAbelianGroup
    field: Field
    table: tuple[tuple, ...]

    def __post_init__(self):
        n = self.group.order
        table = tuple(tuple(self.field(v) for v in row) for row in self.table)
        if len(table) != n or any(len(r) != n for r in table):
            raise ValueError(f"bi-character table must be {n}x{n}")
        object.__setattr__(self, "table", table)

    @classmethod
    def trivial(cls, group: FiniteAbelianGroup, field: Field) -> "BiCharacter":
        n = group.order
        return cls(group, field, tuple((1,) * n for _ in range(n)))

    @classmethod
    def from_generators(cls, group: FiniteAbelianGroup, field: Field, values: Sequence[Sequence]) -> "BiCharacter":
        """Extend ``gamma(e_i, e_j) = values[i][j]`` bilinearly."""
        k = len(group.invariant_factors)
        vals = [[field(v) for v in row] for row in values]
        if len(vals) != k or any(len(r) != k for r in vals):
            raise ValueError(f"generator table must be {k}x{k}")
        els = group.elements()
        table = []
        for g in els:
            row = []
            for h in els:
                c = field.one
                for i in range(k):
                    for j in range(k):
                        if g[i] and h[j]:
                            c = field.reduce(c * field.power(vals[i][j], g[i] * h[j]))
                row.append(c)
            table.append(tuple(row))
        return cls(group, field, tuple(table))

    def __call__(self, g, h):
        return self.table[self.group.index(g)][self.group.index(h)]


@dataclass(frozen=True)
class GradedSpace:
    group: FiniteAbelianGroup
    degrees: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.group.canon(d) for d in self.degrees))

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def component(self, g) -> list[int]:
        g = self.group.canon(g)
        return [i for i, d in enumerate(self.degrees) if d == g]


@dataclass(frozen=True)
class GradedMap:
    matrix: Mat
    dom: GradedSpace
    cod: GradedSpace

    def __post_init__(self):
        if self.matrix.shape != (self.cod.dim, self.dom.dim):
            raise ValueError("matrix shape does not match the graded spaces")

    def is_homogeneous(self) -> bool:
        return homogeneity_witness(self.matrix, self.dom, self.cod) is None


def homogeneity_witness(m: Mat, dom: GradedSpace, cod: GradedSpace) -> tuple[int, int] | None:
    for i, row in enumerate(m.data):
        for j, a in enumerate(row):
            if a and cod.degrees[i] != dom.degrees[j]:
                return (i, j)
    return None


def validate_bicharacter(gamma: BiCharacter) -> LawReport:
    f, grp = gamma.field, gamma.group
    els = grp.elements()
    for row in gamma.table:
        for v in row:
            if not v:
                raise ZeroValue("bi-character takes the value 0")
    rep = LawReport()

    def first(pred):
        for g, h, k in itertools.product(els, repeat=3):
            if not pred(g, h, k):
                return [list(g), list(h), list(k)]
        return None

    red = f.reduce
    w = first(lambda g, h, k: gamma(grp.add(g, h), k) == red(gamma(g, k) * gamma(h, k)))
    rep.add(Check("bicharacter/multiplicative-left", w is None, w))
    w = first(lambda g, h, k: gamma(g, grp.add(h, k)) == red(gamma(g, h) * gamma(g, k)))
    rep.add(Check("bicharacter/multiplicative-right", w is None, w))
    e = grp.identity
    bad = next(([list(g)] for g in els if gamma(e, g) != f.one or gamma(g, e) != f.one), None)
    rep.add(Check("bicharacter/normalized", bad is None, bad))
    ex = grp.exponent
    bad = next(([list(g), list(h)] for g in els for h in els if f.power(gamma(g, h), ex) != f.one), None)
    rep.add(Check("bicharacter/roots-of-unity", bad is None, bad))
    rep.info["symmetric"] = all(red(gamma(g, h) * gamma(h, g)) == f.one for g in els for h in els)
    return rep


def tensor(v: GradedSpace, w: GradedSpace) -> GradedSpace:
    if v.group != w.group:
        raise GroupMismatch("graded spaces over different groups")
    add = v.group.add
    return GradedSpace(v.group, tuple(add(a, b) for a in v.degrees for b in w.degrees))


def _braid_matrix(v: GradedSpace, w: GradedSpace, gamma: BiCharacter, inverse: bool) -> Mat:
    f = gamma.field
    n, m = v.dim, w.dim
    if inverse:
        # W (x) V -> V (x) W, undoing the coefficient gamma(deg w, deg v)
        entries = ((i * m + j, j * n + i, f.inv(gamma(w.degrees[j], v.degrees[i])))
                   for i in range(n) for j in range(m))
        return Mat.from_entries(f, n * m, n * m, entries)
    entries = ((j * n + i, i * m + j, gamma(w.degrees[j], v.degrees[i])) for i in range(n) for j in range(m))
    return Mat.from_entries(f, n * m, n * m, entries)


def braid(v: GradedSpace, w: GradedSpace, gamma: BiCharacter) -> GradedMap:
    if v.group != w.group or v.group != gamma.group:
        raise GroupMismatch("braiding across different groups")
    return GradedMap(_braid_matrix(v, w, gamma, False), tensor(v, w), tensor(w, v))


def braid_inverse(v: GradedSpace, w: GradedSpace, gamma: BiCharacter) -> GradedMap:
    """Inverse of ``braid(v, w)``, as a map ``W (x) V -> V (x) W``."""
    return GradedMap(_braid_matrix(v, w, gamma, True), tensor(w, v), tensor(v, w))


def yang_baxter_sides(backend, v, w, u) -> tuple[Mat, Mat]:
    """Both hexagon composites ``V W U -> U W V`` for any backend."""
    iv, iw, iu = (Mat.identity(backend.field, backend.dim(o)) for o in (v, w, u))
    lhs = (kron(backend.braid(w, u), iv) @ kron(iw, backend.braid(v, u)) @ kron(backend.braid(v, w), iu))
    rhs = (kron(iu, backend.braid(v, w)) @ kron(backend.braid(v, u), iw) @ kron(iv, backend.braid(w, u)))
    return lhs, rhs


def check_yang_baxter(v: GradedSpace, w: GradedSpace, u: GradedSpace, gamma: BiCharacter) -> LawReport:
    lhs, rhs = yang_baxter_sides(GradedBackend(gamma), v, w, u)
    return LawReport([compare("yang-baxter", lhs, rhs)])


class BraidedBackend:
    """Shared contract of the graded and the Hopf-module backends.

    Objects carry a dimension; the backend supplies tensor products, the
    braiding and its inverse as exact matrices, a morphism test and the
    object structure on quotients.
    """

    kind = "abstract"
    field: Field

    def dim(self, obj) -> int:
        return obj.dim

    def identity(self, obj) -> Mat:
        return Mat.identity(self.field, self.dim(obj))

    def tensor_all(self, objs: Sequence):
        out = objs[0]
        for o in objs[1:]:
            out = self.tensor(out, o)
        return out

    def power(self, obj, n: int):
        if n == 0:
            return self.unit_object()
        return self.tensor_all([obj] * n)

    def morphism_witness(self, f: Mat, a, b):
        raise NotImplementedError

    def is_morphism(self, f: Mat, a, b) -> bool:
        return self.morphism_witness(f, a, b) is None

    def morphism_constraints(self, a, b) -> list:
        """Linear maps ``f -> residual`` whose common kernel is ``Hom(a, b)``."""
        raise NotImplementedError

    def describe(self) -> dict:
        raise NotImplementedError


class GradedBackend(BraidedBackend):
    kind = "graded"

    def __init__(self, gamma: BiCharacter):
        self.gamma = gamma
        self.group = gamma.group
        self.field = gamma.field
        self._braids: dict = {}

    def space(self, degrees) -> GradedSpace:
        return GradedSpace(self.group, tuple(degrees))

    def unit_object(self) -> GradedSpace:
        return GradedSpace(self.group, (self.group.identity,))

    def tensor(self, a: GradedSpace, b: GradedSpace) -> GradedSpace:
        return tensor(a, b)

    def braid(self, a: GradedSpace, b: GradedSpace) -> Mat:
        key = (a, b, False)
        if key not in self._braids:
            self._braids[key] = _braid_matrix(a, b, self.gamma, False)
        return self._braids[key]

    def braid_inv(self, a: GradedSpace, b: GradedSpace) -> Mat:
        key = (a, b, True)
        if key not in self._braids:
            self._braids[key] = _braid_matrix(a, b, self.gamma, True)
        return self._braids[key]

    def morphism_witness(self, f: Mat, a: GradedSpace, b: GradedSpace):
        w = homogeneity_witness(f, a, b)
        return None if w is None else {"entry": list(w), "reason": "not degree-preserving"}

    def morphism_constraints(self, a: GradedSpace, b: GradedSpace) -> list:
        bad = [(i, j) for i in range(b.dim) for j in range(a.dim) if b.degrees[i] != a.degrees[j]]
        if not bad:
            return []
        f = self.field

        def residual(m: Mat) -> Mat:
            return Mat(f, len(bad), 1, [[m[i, j]] for i, j in bad])

        return [residual]

    def quotient(self, obj: GradedSpace, q: QuotientSpace) -> GradedSpace:
        """Grading of a quotient by homogeneous relations.

        Quotient basis vectors are classes of coordinate vectors, so each
        takes the degree of the coordinate chosen by the section.
        """
        degs = []
        for k in range(q.q_dim):
            col = q.sect.col(k)
            ds = {obj.degrees[i] for i, a in enumerate(col) if a}
            if len(ds) != 1:
                raise LinalgError("quotient section is not homogeneous")
            degs.append(ds.pop())
        out = GradedSpace(self.group, tuple(degs))
        if homogeneity_witness(q.proj, obj, out) is not None:
            raise LinalgError("relations are not homogeneous")
        return out

    def describe(self) -> dict:
        return {"kind": "graded", "group": list(self.group.invariant_factors)}
