from __future__ import annotations

import itertools

import pytest
from builders import F13, QQ, grassmann_tower, super_tower, trivial_tower

from paracocyclic.errors import UnsupportedBackend, ValidationError
from paracocyclic.exactlinalg import Mat
from paracocyclic.instance import load_fixture
from paracocyclic.tower import Tower, build_cosimplex, check_paracocyclic_relations


def para_oracle(n: int, c: dict, f) -> Mat:
    """``t_0 .. t_n -> (-1)^{|t_0| (|t_1| + .. + |t_n|)} c(|t_0|) t_1 .. t_n t_0`` on ``Lambda(theta)^{n+1}``."""
    size = 2 ** (n + 1)
    entries = []
    for idx in itertools.product((0, 1), repeat=n + 1):
        sign = -1 if idx[0] * sum(idx[1:]) % 2 else 1
        out = idx[1:] + idx[:1]
        col = int("".join(map(str, idx)), 2)
        row = int("".join(map(str, out)), 2)
        entries.append((row, col, f(sign) * f(c[idx[0]])))
    return Mat.from_entries(f, size, size, entries)


@pytest.mark.parametrize("table", [(1, 1), (1, 5), (1, 12)])
def test_para_operator_matches_oracle(table):
    t = super_tower(F13)
    w = t.diagonal_transposition(table)
    for n in range(3):
        assert t.z_projection(n) == Mat.identity(F13, 2 ** (n + 1))
        assert t.para_operator_composed(n, w) == para_oracle(n, dict(enumerate(table)), F13)
        assert t.para_operator_closed_graded(n, w) == para_oracle(n, dict(enumerate(table)), F13)


@pytest.mark.parametrize("make", [super_tower, trivial_tower, grassmann_tower])
def test_monads_and_t_bar(make):
    t = make()
    assert t.check_monads(t.X).passed
    assert t.check_t_bar(t.X).passed
    assert t.check_iso(t.X).passed
    assert t.check_admissible(t.X).passed


@pytest.mark.parametrize("make", [trivial_tower, grassmann_tower])
def test_adjunction_on_builders(make):
    t = make()
    rep = t.check_adjunction(t.X, trials=20)
    assert rep.passed


def test_t_bar_on_higher_levels():
    t = super_tower(F13)
    assert t.check_t_bar(t.O(1), prefix="t-bar[1]").passed


def test_mutation_is_detected():
    t = Tower(super_tower().phi, super_tower().X, mutation="t-bar-sign")
    rep = t.check_t_bar(t.X)
    assert not rep.passed
    assert all(c.witness for c in rep.failures())


def test_super_solver_solutions():
    t = super_tower(F13)
    sols = t.solve_diagonal_transposition(4)
    assert sorted(s.table for s in sols) == sorted((1, c) for c in F13.roots_of_unity(4))
    assert all(t.check_transposition(s).passed for s in sols)


def test_super_identity_transposition_is_cyclic():
    """With ``w = id`` the super instance is actually cyclic, not just para-cocyclic."""
    t = super_tower(F13)
    w = t.identity_transposition()
    assert check_paracocyclic_relations(t, w, 2, relation_set="cyclic").passed


def test_cyclic_relation_is_informational_by_default():
    t = super_tower(F13)
    w = t.diagonal_transposition((1, 5))
    rep = check_paracocyclic_relations(t, w, 2)
    assert rep.passed
    cyc = rep["cyclic/w-power[n=1]"]
    assert cyc.informational and not cyc.passed
    assert not check_paracocyclic_relations(t, w, 2, relation_set="cyclic").passed


def test_cosimplicial_identities_degree_three():
    t = super_tower(F13)
    rep = check_paracocyclic_relations(t, t.diagonal_transposition((1, 5)), 3)
    assert all(c.passed for c in rep.checks if c.name.startswith("cosimplicial/"))


def test_solver_rejects_hopf_and_non_braid_preserving():
    inst = load_fixture("kz2_triangular_hopf")
    with pytest.raises(UnsupportedBackend):
        Tower(inst.phi, inst.X).solve_diagonal_transposition(2)
    inst = load_fixture("z3_failing_braidpres")
    with pytest.raises(ValidationError) as ei:
        Tower(inst.phi, inst.X).solve_diagonal_transposition(3)
    assert ei.value.law == "braid-preserving"


def test_diagonal_table_length():
    with pytest.raises(ValidationError):
        super_tower().diagonal_transposition((1,))


def test_closed_formula_needs_grading():
    inst = load_fixture("kz2_triangular_hopf")
    t = Tower(inst.phi, inst.X)
    with pytest.raises(UnsupportedBackend):
        t.para_operator_closed_graded(0, t.identity_transposition())


def test_cosimplex_shapes():
    t = super_tower(QQ)
    levels = build_cosimplex(t, t.identity_transposition(), 2)
    assert [lv.dim for lv in levels] == [2, 4, 8]
    assert [len(lv.cofaces) for lv in levels] == [0, 2, 3]
    assert [len(lv.codegeneracies) for lv in levels] == [1, 2, 0]
    for lv in levels[1:]:
        assert all(d.shape == (lv.dim, levels[lv.degree - 1].dim) for d in lv.cofaces)


def test_canonical_projections():
    t = super_tower(F13)
    for n in range(3):
        assert t.check_canonical_projections(n).passed


def test_iso_pair_is_inverse_on_levels():
    t = trivial_tower()
    for k in range(3):
        y = t.O(k)
        assert t.iso_i(y) @ t.iso_j(y) == Mat.identity(QQ, t.Pi(t.To(y)).dim)
