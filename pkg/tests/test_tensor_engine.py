from __future__ import annotations

import pytest
from builders import QQ, grassmann_tower, identity_map, plain, super_tower, trivial_tower

from paracocyclic.braided_algebra import AlgebraData, Module, regular_bimodule
from paracocyclic.errors import NotWellDefined
from paracocyclic.exactlinalg import Mat
from paracocyclic.instance import FIXTURES, load_fixture
from paracocyclic.tensor_engine import (check_closed_forms, check_projection_equivariant, coequalize_modules,
                                        cyclic_tensor, iterated_tensor, pi_functor, pi_map, tensor_over_R,
                                        tensor_over_Rchi)
from paracocyclic.tower import Tower

PASSING = [n for n in FIXTURES if n != "z3_failing_braidpres"]


def matrix_algebra(b, n: int = 2) -> AlgebraData:
    """``M_n(K)`` on the matrix units ``e_ij`` at index ``i n + j``."""
    table = [(i * n + j, j * n + l, i * n + l, 1) for i in range(n) for j in range(n) for l in range(n)]
    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    return AlgebraData.from_table(b, b.space([()] * (n * n)), table, unit, "M")


@pytest.mark.parametrize("name", PASSING)
def test_closed_presentations_agree(name):
    inst = load_fixture(name)
    assert check_closed_forms(inst.X, inst.phi).passed


@pytest.mark.parametrize("name", PASSING)
def test_projections_are_equivariant(name):
    inst = load_fixture(name)
    for rt in (tensor_over_R(inst.X, inst.phi), tensor_over_Rchi(inst.X, inst.phi)):
        assert check_projection_equivariant(rt).passed


def test_dims_over_ground_field():
    t = super_tower(QQ)
    assert [s.dim for s in iterated_tensor(t.X, t.phi, 3)] == [2, 4, 8]


def test_tensor_over_itself_is_itself():
    t = grassmann_tower()
    assert tensor_over_R(t.X, t.phi).dim == 2
    assert tensor_over_Rchi(t.X, t.phi).dim == 2


def test_matrix_algebra_traces():
    """``M_2 / [M_2, M_2]`` is one-dimensional, spanned by the trace class."""
    b = plain(QQ)
    m = matrix_algebra(b)
    x = regular_bimodule(m)
    pi = pi_functor(x)
    assert pi.dim == 1
    trace = Mat.from_rows(QQ, [[1, 0, 0, 1]])
    assert pi.proj[0, 0] != 0
    assert pi.proj == trace.scale(pi.proj[0, 0])
    assert cyclic_tensor(0, x, identity_map(m)).dim == 1
    assert Tower(identity_map(m), x).Z(1).dim == 1


def test_pi_map_identity():
    t = trivial_tower()
    pi = pi_functor(t.X)
    assert pi_map(Mat.identity(QQ, t.X.dim), pi, pi) == Mat.identity(QQ, pi.dim)


def test_cyclic_tensor_matches_tower():
    t = super_tower(QQ)
    for n in range(3):
        assert cyclic_tensor(n, t.X, t.phi).dim == t.Z(n).dim


def test_coequalizer_of_non_module_maps_can_fail():
    b = plain(QQ)
    a = AlgebraData.from_table(b, b.space([(), ()]), [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], [1, 0])
    reg = Module(a, a.carrier, a.mult)
    # the image of e0 is not a submodule of the regular module
    f = Mat.from_rows(QQ, [[1, 0], [0, 0]])
    with pytest.raises(NotWellDefined):
        coequalize_modules(f, Mat.zeros(QQ, 2, 2), reg)
