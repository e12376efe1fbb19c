"""Exception types shared across the package."""

from __future__ import annotations


class QuivalgError(Exception):
    """Base class for all errors raised by this package."""


class DslError(QuivalgError, ValueError):
    """Syntax or reference error in a quiver/triple document."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class NotQuadraticError(QuivalgError, ValueError):
    """An operation that needs length-2 relations got a longer relation."""


class InfiniteDimensionalError(QuivalgError, ValueError):
    """The presentation has infinitely many relation-avoiding paths.

    ``cycle`` is an oriented cycle every repetition of which avoids the
    relations, so the path count cannot be finite.
    """

    def __init__(self, cycle):
        super().__init__(f"infinite-dimensional: relation-avoiding cycle {cycle}")
        self.cycle = cycle


class RadicalConditionError(QuivalgError, ValueError):
    """A precondition required every projective radical to be projective or
    simple, and some vertex violates that."""

    def __init__(self, witness: str):
        super().__init__(f"radical of the projective at vertex {witness!r} "
                         "is neither projective nor simple")
        self.witness = witness


class InvalidTripleError(QuivalgError, ValueError):
    """A triple failed validation where a valid one was required."""

    def __init__(self, clause: str, witness):
        super().__init__(f"invalid triple: clause {clause!r}, witness {witness!r}")
        self.clause = clause
        self.witness = witness


class AdmissibilityError(QuivalgError, ValueError):
    """A sequence operation received a sequence outside its admissible domain."""


class UndetectedPeriodicityError(QuivalgError, RuntimeError):
    """The syzygy iteration neither terminated nor repeated within the bound."""

    def __init__(self, vertex: str, bound: int, entries):
        super().__init__(f"resolution of the simple at {vertex!r} neither "
                         f"terminated nor repeated within degree {bound}")
        self.vertex = vertex
        self.bound = bound
        self.entries = tuple(entries)


class CrossCheckError(QuivalgError, RuntimeError):
    """Two routes that must agree by theory disagreed; both values attached."""

    def __init__(self, message: str, first, second):
        super().__init__(f"{message}: {first!r} vs {second!r}")
        self.first = first
        self.second = second
