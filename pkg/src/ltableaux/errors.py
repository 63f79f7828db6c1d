"""Error taxonomy shared by the whole package.

Every failure mode is one of three kinds: a bad parameter combination, a
structural/validation failure on tableau data (reported with the name of the
violated invariant and, when known, the offending cell), or a dimension
mismatch when placing an object inside a bounding box.
"""

from __future__ import annotations


class LtabError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(LtabError, ValueError):
    """A parameter value or combination is outside the supported domain."""


class DimensionError(LtabError, ValueError):
    """An object does not fit inside the requested bounding box."""


class ValidationError(LtabError, ValueError):
    """Structured data violates a named invariant.

    ``invariant`` is a short stable identifier (e.g. ``"red-rows-strict"``),
    ``cell`` is an optional 1-based (row, col) coordinate pinpointing the
    violation.
    """

    def __init__(self, invariant: str, message: str, cell: tuple[int, int] | None = None):
        self.invariant = invariant
        self.cell = cell
        if cell is not None:
            message = f"{message} (invariant {invariant!r} at row {cell[0]}, col {cell[1]})"
        else:
            message = f"{message} (invariant {invariant!r})"
        super().__init__(message)
