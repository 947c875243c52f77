from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from builders import F5, F7, QQ
from hypothesis import given, settings
from hypothesis import strategies as st

from paracocyclic.errors import LinalgError, NotWellDefined
from paracocyclic.exactlinalg import (Field, Mat, cokernel, from_surjection, identity_quotient, induce_on_quotients,
                                      inverse, is_prime, kernel, kron, permutation, rank, rref, same_column_space,
                                      solve_linear_maps)

FIELDS = [QQ, F5, F7]


@st.composite
def matrices(draw, field=None, max_dim=4, rows=None, cols=None):
    f = field or draw(st.sampled_from(FIELDS))
    r = rows if rows is not None else draw(st.integers(0, max_dim))
    c = cols if cols is not None else draw(st.integers(0, max_dim))
    vals = st.integers(-3, 3) if f.p == 0 else st.integers(0, f.p - 1)
    return Mat.from_rows(f, [[draw(vals) for _ in range(c)] for _ in range(r)]) if r else Mat.zeros(f, 0, c)


def test_primes():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    with pytest.raises(ValueError):
        Field.prime(9)
    with pytest.raises(ValueError):
        Field("rationals", 3)


def test_coercion():
    assert QQ("-1/2") == Fraction(-1, 2)
    assert F7("1/2") == 4
    assert F5(-1) == 4
    with pytest.raises(ValueError):
        F5("1/5")
    with pytest.raises(TypeError):
        QQ(0.5)


def test_roots_of_unity():
    assert QQ.roots_of_unity(4) == [1, -1]
    assert QQ.roots_of_unity(3) == [1]
    assert Field.prime(13).roots_of_unity(3) == [1, 3, 9]
    assert F7.roots_of_unity(2) == [1, 6]


@pytest.mark.parametrize("f", [F5, F7])
def test_field_axioms_exhaustive(f):
    els = f.elements()
    for a in els:
        if a:
            assert f.reduce(a * f.inv(a)) == 1
        assert f.reduce(a + f.neg(a)) == 0
        assert f.power(a, f.p) == a


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)


def test_rref_example():
    m = Mat.from_rows(QQ, [[1, 2, 3], [2, 4, 7]])
    r, piv = rref(m)
    assert piv == [0, 2]
    assert r == Mat.from_rows(QQ, [[1, 2, 0], [0, 0, 1]])


def test_cokernel_example():
    # image spanned by e0 - e1 in K^3: quotient is 2-dimensional
    q = cokernel(Mat.from_rows(QQ, [[1], [-1], [0]]))
    assert q.q_dim == 2
    assert q.proj @ Mat.column(QQ, [1, -1, 0]) == Mat.zeros(QQ, 2, 1)


def test_induce_not_well_defined():
    q = cokernel(Mat.from_rows(QQ, [[1], [0]]))
    swap = permutation(QQ, [1, 0])
    with pytest.raises(NotWellDefined) as ei:
        induce_on_quotients(swap, q, q)
    assert ei.value.column == 0


def test_from_surjection_rejects():
    with pytest.raises(LinalgError):
        from_surjection(Mat.from_rows(QQ, [[1, 0], [2, 0]]))


def _image_size(m: Mat) -> int:
    """Number of distinct vectors ``m v`` over a finite field, by enumeration."""
    f = m.field
    seen = set()
    for v in itertools.product(f.elements(), repeat=m.cols):
        seen.add(tuple((m @ Mat.column(f, list(v))).col(0)))
    return len(seen)


@settings(max_examples=40, deadline=None)
@given(matrices(field=F5, max_dim=3))
def test_rank_against_image_count(m):
    if m.cols == 0:
        assert rank(m) == 0
        return
    assert F5.p ** rank(m) == _image_size(m)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_cokernel_invariants(m):
    q = cokernel(m)
    assert q.q_dim + rank(m) == m.rows
    assert (q.proj @ m).is_zero()
    assert q.proj @ q.sect == Mat.identity(m.field, q.q_dim)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_is_exact(m):
    k = kernel(m)
    assert (m @ k).is_zero()
    assert k.cols + rank(m) == m.cols
    assert rank(k) == k.cols


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_from_surjection_roundtrip(m):
    q = cokernel(m)
    p = from_surjection(q.proj)
    assert p.proj == q.proj
    assert rank(p.relations) == rank(m)
    if m.cols:
        assert same_column_space(p.relations, m)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_induce_is_functorial(data):
    f = data.draw(st.sampled_from(FIELDS))
    n = data.draw(st.integers(1, 4))
    rel = data.draw(matrices(field=f, rows=n, max_dim=2))
    q = cokernel(rel)
    # maps preserving span(rel): polynomials in a map fixing it are the easy source
    a = data.draw(matrices(field=f, rows=n, cols=n))
    try:
        ga = induce_on_quotients(a, q, q)
    except NotWellDefined:
        return
    assert induce_on_quotients(a @ a, q, q) == ga @ ga
    assert induce_on_quotients(Mat.identity(f, n), q, q) == Mat.identity(f, q.q_dim)
    assert ga @ q.proj == q.proj @ a


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_kron_mixed_product(data):
    f = data.draw(st.sampled_from(FIELDS))
    a, b = data.draw(matrices(field=f, rows=2, cols=3)), data.draw(matrices(field=f, rows=3, cols=2))
    c, d = data.draw(matrices(field=f, rows=2, cols=2)), data.draw(matrices(field=f, rows=2, cols=1))
    assert kron(a, c) @ kron(b, d) == kron(a @ b, c @ d)


@settings(max_examples=40, deadline=None)
@given(matrices(field=F7, rows=3, cols=3))
def test_inverse(m):
    if rank(m) < 3:
        with pytest.raises(LinalgError):
            inverse(m)
    else:
        assert inverse(m) @ m == Mat.identity(F7, 3)


def test_tensor_index_convention():
    e = Mat.identity(QQ, 3)
    v = kron(e.select_columns([1]), Mat.identity(QQ, 2).select_columns([0]))
    assert v.col(0).index(1) == 1 * 2 + 0


def test_solve_linear_maps_commutant():
    # maps commuting with diag(1, 2) are diagonal
    d = Mat.from_rows(QQ, [[1, 0], [0, 2]])
    basis = solve_linear_maps(QQ, 2, 2, [lambda f: f @ d - d @ f])
    assert len(basis) == 2
    assert all(b[0, 1] == 0 and b[1, 0] == 0 for b in basis)


def test_identity_quotient():
    q = identity_quotient(F5, 3)
    assert q.q_dim == 3 and q.relations.cols == 0
