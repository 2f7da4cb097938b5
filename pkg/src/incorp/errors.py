"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed input text; carries the source name and position."""

    def __init__(self, message: str, source: str = "<input>", line: int | None = None,
                 column: int | None = None):
        self.message = message
        self.source = source
        self.line = line
        self.column = column
        where = source
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")


class UniverseError(ValueError):
    """A clause mentions an atom that the valuation does not assign."""


class SignatureError(ValueError):
    """A term uses a symbol that the algebra does not interpret, or the wrong arity."""


class AtomCapExceeded(ValueError):
    """Too many atoms for exhaustive valuation enumeration."""


class MeasureError(AssertionError):
    """The termination measure failed to decrease between two loop iterations."""
