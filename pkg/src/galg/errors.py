"""Exception hierarchy shared by all galg modules.

The CLI maps these onto exit codes: parse-time errors exit with 2,
violated preconditions and hypotheses with 3, exhausted search budgets
with 4.
"""

from __future__ import annotations


class GalgError(Exception):
    """Base class for every error raised by this package."""


# ---------------------------------------------------------------- fields

class DivisionByZero(GalgError):
    pass


class FieldMismatch(GalgError):
    pass


class InfiniteField(GalgError):
    """An enumeration was requested over the rationals."""


class NonPrimeModulus(GalgError):
    pass


# ------------------------------------------------------------- freealg

class GeneratorSetMismatch(GalgError):
    pass


# -------------------------------------------------------------- linalg

class AmbientMismatch(GalgError):
    pass


# --------------------------------------------------------- presentation

class InvalidSkewMatrix(GalgError):
    pass


class InhomogeneousRelation(GalgError):
    pass


class DependentElements(GalgError):
    pass


# ------------------------------------------------------------- groebner

class TruncationTooSmall(GalgError):
    pass


class DegreeExceedsTruncation(GalgError):
    pass


# ----------------------------------------------------------- invariants

class NotACharacter(GalgError):
    pass


class BudgetExceeded(GalgError):
    pass


# ------------------------------------------------------------- brackets

class DistinguishedIndexClash(GalgError):
    pass


class InhomogeneousInput(GalgError):
    pass


class ZeroDecomposition(GalgError):
    pass


# ---------------------------------------------------------------- iso

class HypothesisViolated(GalgError):
    pass


# -------------------------------------------------------------- textio

class GalgSyntaxError(GalgError):
    """Parse failure carrying position and the tokens that were legal there."""

    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        loc = f"line {line}, column {column}"
        if self.expected:
            message = f"{message} at {loc} (expected one of: {', '.join(self.expected)})"
        else:
            message = f"{message} at {loc}"
        super().__init__(message)


class UnknownGenerator(GalgError):
    pass


PARSE_ERRORS = (GalgSyntaxError, UnknownGenerator, NonPrimeModulus, InhomogeneousRelation)
