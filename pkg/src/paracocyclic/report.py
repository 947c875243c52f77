"""Pass/fail records produced by every law checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .exactlinalg import Mat


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Any = None
    informational: bool = False

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.informational:
            out["informational"] = True
        return out


@dataclass
class LawReport:
    checks: list[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "LawReport", prefix: str = "") -> "LawReport":
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness, c.informational))
        for k, v in other.info.items():
            self.info[prefix + k] = v
        return self

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed and not c.informational]

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: c.name)],
            "info": {k: self.info[k] for k in sorted(self.info)},
        }


def column_witness(lhs: Mat, rhs: Mat) -> dict | None:
    """Describe the first basis vector on which two maps disagree."""
    if lhs.shape != rhs.shape:
        return {"shape": [list(lhs.shape), list(rhs.shape)]}
    j = lhs.first_difference(rhs)
    if j is None:
        return None
    fmt = lhs.field.format
    return {"basis": j, "lhs": [fmt(a) for a in lhs.col(j)], "rhs": [fmt(a) for a in rhs.col(j)]}


def compare(name: str, lhs: Mat, rhs: Mat, informational: bool = False) -> Check:
    w = column_witness(lhs, rhs)
    return Check(name, w is None, w, informational)


def guarded(name: str, thunk) -> Check:
    """Run ``thunk`` producing a Check; construction errors become failures."""
    from .errors import EngineError

    try:
        return thunk()
    except EngineError as exc:
        return Check(name, False, {"error": type(exc).__name__, "message": str(exc)})
