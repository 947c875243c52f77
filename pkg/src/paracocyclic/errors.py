"""Exception hierarchy shared by every layer of the engine."""

from __future__ import annotations


class EngineError(Exception):
    pass


class LinalgError(EngineError):
    pass


class NotWellDefined(LinalgError):
    """A map does not descend to the requested quotients."""

    def __init__(self, message: str, column: int | None = None, vector=None):
        super().__init__(message)
        self.column = column
        self.vector = vector


class ZeroValue(EngineError):
    pass


class GroupMismatch(EngineError):
    pass


class NotInverse(EngineError):
    pass


class UnsupportedBackend(EngineError):
    pass


class ParseError(EngineError):
    pass


class ValidationError(EngineError):
    """Input parsed but violates a law; ``law`` names the failing check."""

    def __init__(self, message: str, law: str | None = None):
        super().__init__(message)
        self.law = law
