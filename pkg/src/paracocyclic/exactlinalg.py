"""Exact fields, dense matrices and explicitly presented quotient spaces.

Every coequalizer in the engine is a cokernel of an exact matrix; this module
is the only place where Gaussian elimination happens.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import LinalgError, NotWellDefined


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """The rationals, or the prime field of residues mod ``p``."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind == "rationals":
            if self.p:
                raise ValueError("rationals take no modulus")
        elif self.kind == "prime":
            if not (2 <= self.p < 2**31) or not is_prime(self.p):
                raise ValueError(f"modulus {self.p} is not a prime below 2^31")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "Field":
        return cls("rationals")

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls("prime", p)

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def __call__(self, value):
        """Coerce an int, Fraction or string (``"3"``, ``"-1/2"``) into the field."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        elif isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot read {value!r} as a scalar")
        if self.p == 0:
            return Fraction(value)
        value = Fraction(value)
        if value.denominator % self.p == 0:
            raise ValueError(f"denominator of {value} vanishes in characteristic {self.p}")
        return value.numerator * pow(value.denominator, -1, self.p) % self.p

    def reduce(self, x):
        return x if self.p == 0 else x % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero in field")
        if self.p == 0:
            return 1 / Fraction(a)
        return pow(a, -1, self.p)

    def neg(self, a):
        return self.reduce(-a)

    def power(self, a, k: int):
        if k < 0:
            a, k = self.inv(a), -k
        if self.p == 0:
            return Fraction(a) ** k
        return pow(a, k, self.p)

    def elements(self) -> list:
        if self.p == 0:
            raise ValueError("the rationals are infinite")
        return list(range(self.p))

    def roots_of_unity(self, m: int) -> list:
        """All ``a`` with ``a**m == 1``, in a fixed deterministic order."""
        if m < 1:
            raise ValueError("order must be positive")
        if self.p == 0:
            return [Fraction(1), Fraction(-1)] if m % 2 == 0 else [Fraction(1)]
        return [a for a in range(1, self.p) if pow(a, m, self.p) == 1]

    def random(self, rng, nonzero: bool = False):
        if self.p == 0:
            while True:
                v = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                if v or not nonzero:
                    return v
        return rng.randrange(1 if nonzero else 0, self.p)

    def format(self, a) -> str:
        return str(a)

    def describe(self) -> dict:
        return {"kind": self.kind, "p": self.p} if self.p else {"kind": self.kind}


class Mat:
    """Immutable dense matrix over a :class:`Field` (row-major)."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows: int, cols: int, data: Sequence[Sequence]):
        data = tuple(tuple(r) for r in data)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"entries do not form a {rows}x{cols} table")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], cols: int | None = None) -> "Mat":
        rows = [[field(v) for v in r] for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(field, len(rows), cols, rows)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Mat":
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        z, o = field.zero, field.one
        return cls(field, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, field: Field, values: Sequence) -> "Mat":
        return cls(field, len(values), 1, [[field(v)] for v in values])

    @classmethod
    def from_columns(cls, field: Field, nrows: int, columns: Sequence[Sequence]) -> "Mat":
        return cls(field, nrows, len(columns), [[c[i] for c in columns] for i in range(nrows)])

    @classmethod
    def from_entries(cls, field: Field, rows: int, cols: int, entries: Iterable[tuple[int, int, object]]) -> "Mat":
        """Build from ``(row, col, value)`` triples; repeated positions accumulate."""
        table = [[field.zero] * cols for _ in range(rows)]
        for i, j, v in entries:
            table[i][j] = field.reduce(table[i][j] + v)
        return cls(field, rows, cols, table)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, {[list(map(str, r)) for r in self.data]})"

    def _check_same(self, other: "Mat"):
        if self.field != other.field:
            raise ValueError("matrices over different fields")
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        red = self.field.reduce
        return Mat(self.field, self.rows, self.cols,
                   [[red(a + b) for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same(other)
        red = self.field.reduce
        return Mat(self.field, self.rows, self.cols,
                   [[red(a - b) for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __neg__(self) -> "Mat":
        red = self.field.reduce
        return Mat(self.field, self.rows, self.cols, [[red(-a) for a in r] for r in self.data])

    def scale(self, c) -> "Mat":
        red = self.field.reduce
        return Mat(self.field, self.rows, self.cols, [[red(c * a) for a in r] for r in self.data])

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.field != other.field:
            raise ValueError("matrices over different fields")
        if self.cols != other.rows:
            raise ValueError(f"cannot compose {self.shape} after {other.shape}")
        red = self.field.reduce
        brows = [[(j, b) for j, b in enumerate(r) if b] for r in other.data]
        out = []
        for row in self.data:
            acc = [0] * other.cols
            for k, a in enumerate(row):
                if a:
                    for j, b in brows[k]:
                        acc[j] += a * b
            out.append([red(x) if x else self.field.zero for x in acc])
        return Mat(self.field, self.rows, other.cols, out)

    @property
    def T(self) -> "Mat":
        return Mat(self.field, self.cols, self.rows, list(zip(*self.data)) if self.rows else
                   [[] for _ in range(self.cols)])

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.data)

    def select_columns(self, idx: Sequence[int]) -> "Mat":
        return Mat(self.field, self.rows, len(idx), [[r[j] for j in idx] for r in self.data])

    def hstack(self, other: "Mat") -> "Mat":
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return Mat(self.field, self.rows, self.cols + other.cols,
                   [r + s for r, s in zip(self.data, other.data)])

    def vstack(self, other: "Mat") -> "Mat":
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return Mat(self.field, self.rows + other.rows, self.cols, self.data + other.data)

    def first_difference(self, other: "Mat") -> int | None:
        """Index of the first column where ``self`` and ``other`` differ."""
        self._check_same(other)
        for j in range(self.cols):
            if any(r[j] != s[j] for r, s in zip(self.data, other.data)):
                return j
        return None

    def to_lists(self) -> list[list[str]]:
        return [[self.field.format(a) for a in r] for r in self.data]


def _eliminate(field: Field, rows: list[list], ncols: int) -> list[int]:
    """In-place reduced row echelon form; returns pivot columns."""
    red, inv = field.reduce, field.inv
    pivots: list[int] = []
    r = 0
    m = len(rows)
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        iv = inv(rows[r][c])
        prow = [red(x * iv) for x in rows[r]]
        rows[r] = prow
        nz = [(j, b) for j, b in enumerate(prow) if b]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                row = rows[i]
                for j, b in nz:
                    row[j] = red(row[j] - f * b)
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Mat) -> tuple[Mat, list[int]]:
    rows = [list(r) for r in m.data]
    pivots = _eliminate(m.field, rows, m.cols)
    return Mat(m.field, m.rows, m.cols, rows), pivots


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def kernel(m: Mat) -> Mat:
    """Columns form a basis of the null space of ``m``."""
    r, pivots = rref(m)
    free = [j for j in range(m.cols) if j not in set(pivots)]
    f = m.field
    cols = []
    for j in free:
        v = [f.zero] * m.cols
        v[j] = f.one
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(r.data[i][j])
        cols.append(v)
    return Mat.from_columns(f, m.cols, cols)


def inverse(m: Mat) -> Mat:
    if m.rows != m.cols:
        raise LinalgError("only square matrices have inverses")
    n = m.rows
    aug = m.hstack(Mat.identity(m.field, n))
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise LinalgError("matrix is singular")
    return Mat(m.field, n, n, [row[n:] for row in r.data])


def same_column_space(a: Mat, b: Mat) -> bool:
    if a.rows != b.rows:
        return False
    ra = rank(a)
    return ra == rank(b) and rank(a.hstack(b)) == ra


def kron(f: Mat, g: Mat) -> Mat:
    """Kronecker product; basis (i, j) of V (x) W sits at flat index i*dim(W) + j."""
    if f.field != g.field:
        raise ValueError("matrices over different fields")
    red = f.field.reduce
    rows = []
    for frow in f.data:
        for grow in g.data:
            rows.append([red(a * b) if a and b else f.field.zero for a in frow for b in grow])
    return Mat(f.field, f.rows * g.rows, f.cols * g.cols, rows)


def kron_all(mats: Sequence[Mat]) -> Mat:
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


def permutation(field: Field, images: Sequence[int]) -> Mat:
    """Matrix sending basis vector ``j`` to basis vector ``images[j]``."""
    n = len(images)
    return Mat.from_entries(field, n, n, ((images[j], j, field.one) for j in range(n)))


@dataclass(frozen=True, eq=False)
class QuotientSpace:
    """``ambient / span(relations)`` with a projection and a section.

    Invariants (asserted on construction): ``proj @ sect = I``,
    ``proj @ relations = 0`` and ``rank(relations) + q_dim = ambient_dim``.
    """

    ambient_dim: int
    relations: Mat
    proj: Mat
    sect: Mat

    def __post_init__(self):
        q = self.proj.rows
        if self.proj.cols != self.ambient_dim or self.sect.shape != (self.ambient_dim, q):
            raise LinalgError("projection/section shapes do not match the ambient space")
        if self.relations.rows != self.ambient_dim:
            raise LinalgError("relations do not live in the ambient space")
        if self.proj @ self.sect != Mat.identity(self.proj.field, q):
            raise LinalgError("proj . sect is not the identity")
        if not (self.proj @ self.relations).is_zero():
            raise LinalgError("proj does not annihilate the relations")
        if rank(self.relations) + q != self.ambient_dim:
            raise LinalgError("rank(relations) + q_dim != ambient_dim")

    @property
    def q_dim(self) -> int:
        return self.proj.rows

    @property
    def field(self) -> Field:
        return self.proj.field

    def tensor_left(self, n: int) -> "QuotientSpace":
        """The quotient ``K^n (x) ambient -> K^n (x) quotient``."""
        eye = Mat.identity(self.field, n)
        return QuotientSpace(n * self.ambient_dim, kron(eye, self.relations),
                             kron(eye, self.proj), kron(eye, self.sect))


def cokernel(m: Mat) -> QuotientSpace:
    """Quotient of the target of ``m`` by its image.

    The quotient basis consists of the classes of the non-pivot coordinates of
    the RREF of the relation vectors, so the result is fully deterministic.
    """
    f = m.field
    n = m.rows
    r, pivots = rref(m.T)
    pivset = set(pivots)
    nonpiv = [j for j in range(n) if j not in pivset]
    proj = [[f.zero] * n for _ in nonpiv]
    for k, j in enumerate(nonpiv):
        proj[k][j] = f.one
        for i, pc in enumerate(pivots):
            proj[k][pc] = f.neg(r.data[i][j])
    sect = Mat.from_entries(f, n, len(nonpiv), ((j, k, f.one) for k, j in enumerate(nonpiv)))
    return QuotientSpace(n, m, Mat(f, len(nonpiv), n, proj), sect)


def from_surjection(p: Mat) -> QuotientSpace:
    """Present the codomain of a surjective ``p`` as a quotient of its domain."""
    f = p.field
    q, n = p.shape
    aug = p.hstack(Mat.identity(f, q))
    r, pivots = rref(aug)
    if len([c for c in pivots if c < n]) != q:
        raise LinalgError("map is not surjective")
    e = Mat(f, q, q, [row[n:] for row in r.data])
    sect = Mat.from_entries(f, n, q, ((pc, i, f.one) for i, pc in enumerate(pivots[:q]))) @ e
    return QuotientSpace(n, kernel(p), p, sect)


def identity_quotient(field: Field, n: int) -> QuotientSpace:
    return QuotientSpace(n, Mat.zeros(field, n, 0), Mat.identity(field, n), Mat.identity(field, n))


def induce_on_quotients(f: Mat, dom: QuotientSpace, cod: QuotientSpace) -> Mat:
    """The unique ``g`` with ``g @ dom.proj == cod.proj @ f``.

    Raises :class:`NotWellDefined` when ``f`` does not carry the relations of
    ``dom`` into those of ``cod``.
    """
    if f.shape != (cod.ambient_dim, dom.ambient_dim):
        raise ValueError(f"map of shape {f.shape} does not fit {cod.ambient_dim}x{dom.ambient_dim}")
    pf = cod.proj @ f
    leak = pf @ dom.relations
    for j in range(leak.cols):
        col = leak.col(j)
        if any(col):
            raise NotWellDefined(f"relation {j} is not mapped into the target relations",
                                 column=j, vector=dom.relations.col(j))
    return pf @ dom.sect


def solve_linear_maps(field: Field, rows: int, cols: int, residuals: Sequence) -> list[Mat]:
    """Basis of the ``rows x cols`` matrices ``f`` with ``r(f) == 0`` for every linear ``r``.

    Each residual is evaluated on the elementary matrices, so the result is the
    exact kernel of the stacked constraint system, in a deterministic order.
    """
    n = rows * cols
    if n == 0:
        return []
    if not residuals:
        blocks = []
    else:
        columns = []
        for idx in range(n):
            e = Mat.from_entries(field, rows, cols, [(idx // cols, idx % cols, field.one)])
            col = []
            for r in residuals:
                out = r(e)
                for row in out.data:
                    col.extend(row)
            columns.append(col)
        blocks = columns
    if not blocks or not blocks[0]:
        ker = Mat.identity(field, n)
    else:
        ker = kernel(Mat.from_columns(field, len(blocks[0]), blocks))
    return [Mat(field, rows, cols, [ker.col(k)[i * cols:(i + 1) * cols] for i in range(rows)])
            for k in range(ker.cols)]
