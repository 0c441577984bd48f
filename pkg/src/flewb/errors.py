"""Exception hierarchy shared across the package."""

from __future__ import annotations


class FlewbError(Exception):
    """Base class for every error raised by this package."""


class AlgebraError(FlewbError, ValueError):
    """Raised when supplied tables do not describe a residuated lattice.

    ``witness`` holds the offending element names (or indices) when known.
    """

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = tuple(witness)


class NotAPartialOrder(AlgebraError):
    pass


class NotALattice(AlgebraError):
    pass


class MonoidLawViolation(AlgebraError):
    pass


class NotIntegral(AlgebraError):
    pass


class NoResiduum(AlgebraError):
    pass


class SizeBoundExceeded(FlewbError, ValueError):
    pass


class UnknownFixtureName(FlewbError, KeyError):
    pass


class UnknownOperator(FlewbError, ValueError):
    pass


class InternalInvariantViolation(FlewbError, AssertionError):
    pass


class DNotAvailable(FlewbError, ValueError):
    pass


class InvalidOperatorTable(FlewbError, ValueError):
    """A supplied B, D or Delta table violates its defining conditions."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = tuple(witness)


class NotBoolean(FlewbError, ValueError):
    pass


class DegenerateAlgebra(FlewbError, ValueError):
    pass


class UnboundVariable(FlewbError, KeyError):
    pass


class OperatorNotAvailable(FlewbError, ValueError):
    pass


class FixtureMismatch(FlewbError, AssertionError):
    pass


class FormulaSyntaxError(FlewbError, ValueError):
    """Parse failure; ``pos`` is the 0-based character offset."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        super().__init__(f"{message} at position {pos}")
        self.text = text
        self.pos = pos


class NotInImage(FlewbError, ValueError):
    pass


class ProofDoesNotCheck(FlewbError, ValueError):
    pass


class HypothesisNotFound(FlewbError, IndexError):
    pass


class AlgebraFileError(FlewbError, ValueError):
    """Malformed algebra file (bad JSON, unknown keys, unknown names)."""


class InvalidStep(FlewbError, ValueError):
    """A proof step whose justification does not apply; ``index`` is 0-based."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"step {index + 1}: {reason}")
        self.index = index
        self.reason = reason


class ProofScriptError(FlewbError, ValueError):
    """Malformed proof script; ``line`` is 1-based."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line
