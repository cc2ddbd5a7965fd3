"""Exception hierarchy shared by all kmm modules."""


class KmmError(Exception):
    """Base class for every error raised by kmm."""


class ValidationError(KmmError):
    """Bad input values: wrong shapes, non-normalized states, bad ranges."""


class DimensionMismatchError(ValidationError):
    """Operands act on a different number of qubits."""


class ParseError(ValidationError):
    """Malformed input file.  Carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceCapError(KmmError):
    """A dense or combinatorial computation exceeds its size cap."""


class DegenerateRootsError(KmmError):
    """Majorana root set is degenerate; the Dicke recovery is not unique."""


class NotAvailableError(KmmError):
    """Requested data needs an external file that was not supplied."""
