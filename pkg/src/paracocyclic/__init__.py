"""Exact para-cocyclic objects built from braid-preserving algebra morphisms.

The package works in two braided backends (group-graded spaces with a
bi-character, and modules over a quasitriangular Hopf algebra), realizes every
coequalizer as an explicit quotient space, and checks each categorical law as
an exact matrix identity.
"""

from __future__ import annotations

from .errors import (EngineError, GroupMismatch, NotInverse, NotWellDefined, ParseError, UnsupportedBackend,
                     ValidationError, ZeroValue)
from .exactlinalg import Field, Mat, QuotientSpace, cokernel, induce_on_quotients, kron, rref
from .instance import load_fixture, parse_instance
from .tower import Tower, Transposition

__all__ = [
    "EngineError", "Field", "GroupMismatch", "Mat", "NotInverse", "NotWellDefined", "ParseError", "QuotientSpace",
    "Tower", "Transposition", "UnsupportedBackend", "ValidationError", "ZeroValue", "cokernel",
    "induce_on_quotients", "kron", "load_fixture", "parse_instance", "rref",
]
