"""Exception hierarchy shared by all modules."""


class StdFFError(Exception):
    """Base class for errors raised by this package."""


class DomainError(StdFFError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NotInvertibleError(StdFFError, ZeroDivisionError):
    """Inverse requested for a non-unit (zero, or not coprime to the modulus)."""


class IncompatibleFieldsError(StdFFError, ValueError):
    """Operands live in fields that cannot be related (e.g. m does not divide n)."""


class NoSolutionError(StdFFError, ValueError):
    """A discrete logarithm or root does not exist."""


class FactorizationError(StdFFError):
    """A needed prime factorization is unknown or does not validate."""


class TableFormatError(StdFFError, ValueError):
    """Malformed line in a factor/Conway/stdpoly table file."""

    def __init__(self, path, lineno, msg):
        self.path = path
        self.lineno = lineno
        super().__init__(f"{path}:{lineno}: {msg}")


class IntegrityError(StdFFError):
    """Loaded data contradicts a checked invariant (e.g. a wrong Conway table)."""


class ResourceError(StdFFError):
    """A computation exceeded its effort budget."""


class MissingDataError(StdFFError, LookupError):
    """A required external table entry (e.g. a Conway polynomial) is absent."""
