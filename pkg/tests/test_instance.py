from __future__ import annotations

import json

import pytest

from paracocyclic.errors import ParseError, ValidationError
from paracocyclic.instance import FIXTURES, fixture_path, load_fixture, parse_instance_text, validate_instance


def _raw(name="trivial_commutative") -> dict:
    return json.loads(fixture_path(name).read_text())


@pytest.mark.parametrize("name", FIXTURES)
def test_fixtures_parse_and_validate(name):
    inst = load_fixture(name)
    assert validate_instance(inst).passed
    assert inst.name == name


def test_empty_text():
    with pytest.raises(ParseError, match="empty"):
        parse_instance_text("  \n")


def test_bad_json_reports_position():
    with pytest.raises(ParseError, match="line 1"):
        parse_instance_text("{oops")


def test_missing_field():
    raw = _raw()
    del raw["morphism"]
    with pytest.raises(ParseError, match="morphism"):
        parse_instance_text(json.dumps(raw))


def test_morphism_shape_checked():
    raw = _raw()
    raw["morphism"] = [[1, 0]]
    with pytest.raises(ParseError, match="shape"):
        parse_instance_text(json.dumps(raw))


def test_bad_scalar():
    raw = _raw()
    raw["algebras"]["R"]["unit"] = ["x", 0]
    with pytest.raises(ParseError):
        parse_instance_text(json.dumps(raw))


def test_index_out_of_range():
    raw = _raw()
    raw["algebras"]["T"]["mult"].append([0, 5, 0, 1])
    with pytest.raises(ParseError, match="out of range"):
        parse_instance_text(json.dumps(raw))


def test_non_prime_field():
    raw = _raw()
    raw["field"] = {"kind": "prime", "p": 6}
    with pytest.raises(ParseError):
        parse_instance_text(json.dumps(raw))


def test_unknown_transposition_kind():
    raw = _raw()
    raw["transposition"] = {"kind": "bogus"}
    with pytest.raises(ParseError):
        parse_instance_text(json.dumps(raw))


def test_zero_bicharacter_value():
    raw = _raw("super_grassmann")
    raw["backend"]["bicharacter"] = {"table": [[1, 1], [1, 0]]}
    with pytest.raises(ValidationError):
        parse_instance_text(json.dumps(raw))


def test_broken_algebra_is_reported_not_raised():
    raw = _raw()
    raw["algebras"]["T"]["unit"] = [0, 1]
    rep = validate_instance(parse_instance_text(json.dumps(raw)))
    assert not rep.passed
    assert any(n.startswith("algebra[T]") for n in (c.name for c in rep.failures()))
