"""Exception types shared by the dimension algebra, unit registry and UDL tools.

Every exception carries a ``code`` matching the diagnostic codes printed by the
checker, and an optional source position that the checker fills in when the
error is raised while walking a program.
"""

from __future__ import annotations


class UnitsError(Exception):
    """Base class for all errors raised by :mod:`unitcheck`."""

    code = "Error"

    def __init__(self, message: str, pos=None) -> None:
        super().__init__(message)
        self.message = message
        self.pos = pos

    def at(self, pos):
        """Attach ``pos`` unless a more precise position is already set."""
        if self.pos is None:
            self.pos = pos
        return self


class ParseError(UnitsError):
    code = "ParseError"


class UnknownUnit(UnitsError):
    code = "UnknownUnit"


class UnknownAxis(UnitsError):
    code = "UnknownAxis"


class Redefinition(UnitsError):
    code = "Redefinition"


class DimensionMismatch(UnitsError):
    """Two operands (or an operand and an annotation) disagree in dimension.

    ``left`` and ``right`` hold the offending dimensions in whatever encoding
    was active, so that callers can render them for diagnostics.
    """

    code = "DimensionMismatch"

    def __init__(self, message: str, left=None, right=None, pos=None) -> None:
        super().__init__(message, pos)
        self.left = left
        self.right = right


class NonIntegerExponent(UnitsError):
    code = "NonIntegerExponent"


class CapacityOverflow(UnitsError):
    code = "CapacityOverflow"


class InvalidFactor(UnitsError):
    code = "InvalidFactor"


class DomainError(UnitsError):
    code = "DomainError"
