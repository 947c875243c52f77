from __future__ import annotations

from builders import QQ

from paracocyclic.errors import NotWellDefined
from paracocyclic.exactlinalg import Mat
from paracocyclic.report import Check, LawReport, compare, guarded


def test_informational_checks_do_not_fail_reports():
    rep = LawReport([Check("a", True), Check("b", False, {"x": 1}, informational=True)])
    assert rep.passed
    assert [c.name for c in rep.failures()] == []
    rep.add(Check("c", False, {}))
    assert not rep.passed and rep.failures()[0].name == "c"


def test_compare_witness_names_first_column():
    c = compare("m", Mat.from_rows(QQ, [[1, 0], [0, 1]]), Mat.from_rows(QQ, [[1, 0], [0, 2]]))
    assert not c.passed and c.witness["basis"] == 1


def test_guarded_converts_engine_errors():
    def boom():
        raise NotWellDefined("nope", column=0, vector=[])

    c = guarded("g", boom)
    assert not c.passed and c.witness["error"] == "NotWellDefined"


def test_json_is_sorted():
    rep = LawReport([Check("z", True), Check("a", True)])
    assert [c["name"] for c in rep.to_json()["checks"]] == ["a", "z"]
