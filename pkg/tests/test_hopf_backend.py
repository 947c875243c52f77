from __future__ import annotations

import itertools

import pytest
from builders import F5, QQ, kz2_hopf, sign_module

from paracocyclic.braided_backend import yang_baxter_sides
from paracocyclic.errors import NotInverse
from paracocyclic.exactlinalg import Mat, kron
from paracocyclic.hopf_backend import (HopfAlgebraData, HopfBackend, RMatrixData, braid_modules, braid_modules_inverse,
                                       check_h_linearity, check_module, flip, validate_hopf,
                                       validate_quasitriangular)


@pytest.mark.parametrize("f,n", [(QQ, 2), (F5, 3), (F5, 4)])
def test_group_algebra_is_hopf(f, n):
    assert validate_hopf(HopfAlgebraData.group_algebra(f, n)).passed


def test_broken_antipode_fails():
    h = HopfAlgebraData.group_algebra(QQ, 3)
    bad = HopfAlgebraData(QQ, 3, h.mult, h.unit, h.comult, h.counit, Mat.identity(QQ, 3))
    rep = validate_hopf(bad)
    assert not rep["hopf/antipode-left"].passed


def test_triangular_r():
    b = kz2_hopf()
    rep = validate_quasitriangular(b.hopf, b.rmatrix)
    assert rep.passed and rep.info["triangular"]


def test_r_one_tensor_g_fails():
    h = HopfAlgebraData.group_algebra(QQ, 2)
    r = RMatrixData.from_terms(QQ, 2, [(0, 1, 1)], [(0, 1, 1)])
    rep = validate_quasitriangular(h, r)
    assert not rep["quasitriangular/delta-left"].passed


def test_r_not_invertible():
    h = HopfAlgebraData.group_algebra(QQ, 2)
    r = RMatrixData.from_terms(QQ, 2, [(0, 0, 1)], [(0, 0, 2)])
    with pytest.raises(NotInverse):
        validate_quasitriangular(h, r)


def test_bad_representation_fails():
    b = kz2_hopf()
    m = b.module([Mat.identity(QQ, 2), Mat.identity(QQ, 2).scale(2)])
    assert not check_module(m, b.hopf).passed


def test_sign_representation_braids_to_minus_flip():
    b = kz2_hopf()
    s = sign_module(b)
    v = b.module([Mat.identity(QQ, 2), Mat.from_rows(QQ, [[-1, 0], [0, -1]])])
    assert b.braid(s, s) == Mat.from_rows(QQ, [[-1]])
    assert b.braid(v, v) == flip(QQ, 2, 2).scale(-1)


def test_cocommutative_unit_r_gives_flip():
    h = HopfAlgebraData.group_algebra(F5, 3)
    r = RMatrixData.from_terms(F5, 3, [(0, 0, 1)], [(0, 0, 1)])
    assert validate_quasitriangular(h, r).passed
    b = HopfBackend(h, r)
    g = Mat.from_rows(F5, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    reg = b.module([Mat.identity(F5, 3), g, g @ g])
    assert check_module(reg, h).passed
    assert b.braid(reg, reg) == flip(F5, 3, 3)


def _modules(b):
    f = b.field
    return [b.trivial_module(1), sign_module(b),
            b.module([Mat.identity(f, 2), Mat.from_rows(f, [[0, 1], [1, 0]])])]


def test_braid_inverse_and_h_linearity():
    b = kz2_hopf()
    for m, n in itertools.product(_modules(b), repeat=2):
        c = braid_modules(m, n, b.hopf, b.rmatrix)
        ci = braid_modules_inverse(m, n, b.hopf, b.rmatrix)
        assert ci @ c == Mat.identity(QQ, m.dim * n.dim)
        assert check_h_linearity(b, m, n).passed


def test_yang_baxter_on_modules():
    b = kz2_hopf()
    for u, v, w in itertools.product(_modules(b), repeat=3):
        lhs, rhs = yang_baxter_sides(b, u, v, w)
        assert lhs == rhs


def test_module_tensor_is_module():
    b = kz2_hopf()
    for m, n in itertools.product(_modules(b), repeat=2):
        assert check_module(b.tensor(m, n), b.hopf).passed


def test_morphism_constraints_detect_non_linear():
    b = kz2_hopf()
    triv, sign = _modules(b)[:2]
    assert not b.is_morphism(Mat.identity(QQ, 1), triv, sign)
    assert b.is_morphism(Mat.zeros(QQ, 1, 1), triv, sign)
    reg = _modules(b)[2]
    proj = Mat.from_rows(QQ, [[1, 1]])
    assert b.is_morphism(proj, reg, triv)
    assert b.is_morphism(kron(proj, proj), b.tensor(reg, reg), b.tensor(triv, triv))
