from __future__ import annotations

import random

import pytest
from builders import (F5, F7, QQ, character_bimodule, dual_numbers, grassmann, graded, ground, group_algebra,
                      identity_map, super_backend, unit_map)
from hypothesis import given, settings
from hypothesis import strategies as st

from paracocyclic.braided_algebra import (AlgebraData, AlgebraMorphism, Bimodule, bimodule_hom_basis, check_braid_preserving,
                                          check_braiding_laws, check_lift_interchange, check_structure_naturality,
                                          inside_structure, inverse_twist, lift_R_tilde, lift_R_tilde0,
                                          opposite_chi, outside_structure, regular_bimodule, regular_tr_bimodule,
                                          restrict, validate_algebra, validate_algebra_morphism, validate_bimodule)
from paracocyclic.errors import ValidationError
from paracocyclic.exactlinalg import Mat, kron
from paracocyclic.instance import FIXTURES, load_fixture


def _e(f, d, i):
    return Mat.from_entries(f, d, 1, [(i, 0, f.one)])


def test_algebras_validate():
    b = super_backend()
    for a in (grassmann(b), ground(b), group_algebra(graded(F5, 3), 3, True), dual_numbers(b)):
        assert validate_algebra(a).passed, a.name


def test_non_associative_witness():
    b = graded(QQ, 2)
    # e1 e1 = e1 but e0 is not a unit on the right
    a = AlgebraData.from_table(b, b.space([0, 0]), [(0, 0, 0, 1), (0, 1, 1, 1), (1, 1, 1, 1)], [1, 0])
    rep = validate_algebra(a)
    bad = rep["algebra[A]/unit-right"]
    assert not bad.passed and bad.witness["indices"] == [1]


def test_odd_unit_is_not_a_morphism():
    b = super_backend()
    a = AlgebraData.from_table(b, b.space([1]), [(0, 0, 0, 1)], [1])
    assert not validate_algebra(a)["algebra[A]/unit-morphism"].passed


def test_opposite_chi_sign():
    b = graded(QQ, 2, -1)
    a = group_algebra(b, 2, True)
    op = opposite_chi(a)
    g = _e(QQ, 2, 1)
    assert op.mult @ kron(g, g) == _e(QQ, 2, 0).scale(-1)
    assert inverse_twist(op).mult == a.mult


def test_morphism_validation():
    b = super_backend()
    t = grassmann(b)
    assert validate_algebra_morphism(unit_map(ground(b), t)).passed
    bad = AlgebraMorphism(ground(b), t, Mat.column(QQ, [2, 0]))
    assert not validate_algebra_morphism(bad)["morphism/unital"].passed


def test_regular_and_character_bimodules():
    b = graded(QQ, 2)
    a = group_algebra(b, 2, False)
    assert validate_bimodule(regular_bimodule(a)).passed
    for v in (1, -1):
        assert validate_bimodule(character_bimodule(a, v)).passed


def test_incompatible_bimodule_fails():
    b = graded(QQ, 2)
    a = group_algebra(b, 2, False)
    swap = Mat.from_rows(QQ, [[0, 1], [1, 0]])
    diag = Mat.from_rows(QQ, [[1, 0], [0, -1]])
    x = b.space([0, 0])
    left = Mat.identity(QQ, 2).hstack(swap)
    right = Mat.identity(QQ, 2).hstack(diag)
    bad = Bimodule.from_right_action(x, left, right, a, a)
    rep = validate_bimodule(bad)
    assert rep["bimodule/first-associative"].passed
    assert not rep["bimodule/compatible"].passed
    assert "indices" in rep["bimodule/compatible"].witness


@pytest.mark.parametrize("name", FIXTURES)
def test_inside_outside_shapes(name):
    inst = load_fixture(name)
    ins = inside_structure(inst.X, inst.phi, validate=False)
    out = outside_structure(inst.X, inst.phi, validate=False)
    assert ins.dim == out.dim == inst.T.dim * inst.X.dim
    if name != "z3_failing_braidpres":
        assert validate_bimodule(ins).passed and validate_bimodule(out).passed


def test_z3_inside_structure_is_rejected():
    inst = load_fixture("z3_failing_braidpres")
    with pytest.raises(ValidationError):
        inside_structure(inst.X, inst.phi)


def test_z3_not_braid_preserving_with_witness():
    inst = load_fixture("z3_failing_braidpres")
    rep = check_braid_preserving(inst.phi)
    assert not rep.passed
    assert all("indices" in c.witness for c in rep.failures())


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([(QQ, 2, -1), (F5, 2, -1), (F7, 2, 1)]), st.booleans(), st.booleans())
def test_symmetric_braiding_is_braid_preserving(params, self_graded, unit):
    f, n, q = params
    b = graded(f, n, q)
    t = group_algebra(b, n, self_graded)
    phi = unit_map(ground(b), t) if unit else identity_map(t)
    assert check_braid_preserving(phi).passed


@pytest.mark.parametrize("name", FIXTURES)
def test_braiding_laws_and_yb(name):
    inst = load_fixture(name)
    rep = check_braiding_laws(inst.phi, inst.X.carrier)
    assert rep.passed
    assert rep["law-t/yang-baxter"].passed


@pytest.mark.parametrize("name", [n for n in FIXTURES if n != "z3_failing_braidpres"])
def test_structure_naturality_on_random_maps(name):
    inst = load_fixture(name)
    x, phi = inst.X, inst.phi
    rng = random.Random(3)
    basis = bimodule_hom_basis(x, x)
    assert basis
    for _ in range(10):
        f = Mat.zeros(inst.field, x.dim, x.dim)
        for m in basis:
            f = f + m.scale(inst.field.random(rng))
        assert check_structure_naturality(f, x, x, phi).passed
    assert check_lift_interchange(x, phi).passed


def test_lifts_validate():
    b = super_backend()
    t = grassmann(b)
    x = regular_bimodule(t)
    assert validate_bimodule(lift_R_tilde(x)).passed
    assert validate_bimodule(lift_R_tilde0(x)).passed


def test_restrict_and_tr_bimodule():
    b = super_backend()
    r, t = ground(b), grassmann(b)
    phi = unit_map(r, t)
    assert validate_bimodule(regular_tr_bimodule(phi)).passed
    assert validate_bimodule(restrict(regular_tr_bimodule(phi), phi)).passed


def test_zero_bimodule_passes():
    b = graded(QQ, 2)
    a = group_algebra(b, 2, False)
    x = Bimodule(b.space([]), Mat.zeros(QQ, 0, 0), Mat.zeros(QQ, 0, 0), a, a)
    assert validate_bimodule(x).passed
