"""Exception hierarchy.

Everything raised on purpose derives from :class:`DiameterError`, so callers
(and the CLI's exit-code mapping) can separate bad input from bugs.
"""


class DiameterError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateDataset(DiameterError, ValueError):
    """The dataset has too few points for the requested operation."""


class InvalidConfig(DiameterError, ValueError):
    pass


class InvalidInput(DiameterError, ValueError):
    pass


class InvalidActual(DiameterError, ValueError):
    pass


class InvalidTime(DiameterError, ValueError):
    pass


class InvalidSpec(DiameterError, ValueError):
    pass


class MissingOracle(DiameterError, ValueError):
    """Accuracy or efficiency was requested without a brute-force diameter."""


class ValidationError(DiameterError, ValueError):
    pass


class ParseError(DiameterError, ValueError):
    """A CSV cell or row could not be parsed.

    ``row`` and ``column`` are 1-based positions in the file (the header line,
    when present, is row 1).
    """

    def __init__(self, message, row=None, column=None):
        self.row = row
        self.column = column
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class IoError(DiameterError, OSError):
    pass


class ManifestError(DiameterError, ValueError):
    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)
