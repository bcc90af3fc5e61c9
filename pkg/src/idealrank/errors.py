"""Structured errors shared by every layer.

Each failure carries a list of :class:`Violation` records so that callers
(CLI, HTTP service) can render machine-readable diagnostics.  Violation codes
in use:

    EmptyProblem, DimensionMismatch, NonPositiveScore, ZeroColumn,
    WeightSumViolation, DuplicateName, DegenerateProblem, UnknownName,
    SyntaxError, SchemaError, DuplicateEntry, ScoreRangeError, IncompleteSheet
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    code: str
    path: str
    message: str

    def to_document(self) -> dict:
        return {"code": self.code, "path": self.path, "message": self.message}


class IdealrankError(Exception):
    """Base class; carries structured violations."""

    def __init__(self, violations: list[Violation] | None = None, message: str | None = None):
        self.violations = list(violations or [])
        if message is None:
            message = "; ".join(f"{v.code} at {v.path}: {v.message}" for v in self.violations)
        super().__init__(message)


class ParseError(IdealrankError):
    """Input bytes could not be turned into a document (syntax or schema)."""


class InvalidProblemError(IdealrankError):
    """A decision problem violates one or more structural invariants."""


class DegenerateProblemError(IdealrankError):
    """Every alternative is identical after weighting; no ranking exists."""

    def __init__(self, message: str = "all alternatives are identical after weighting"):
        super().__init__([Violation("DegenerateProblem", "", message)], message)
