"""Exception types shared across the package."""


class ZirkitError(Exception):
    """Base class for all zirkit errors."""


class GraphFormatError(ZirkitError):
    """Malformed graph6 or edge-list input; carries the failing byte offset."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class SizeCapError(ZirkitError):
    """Graph order exceeds a hard size cap (64 vertices, 62 for graph6)."""


class InvalidSpecError(ZirkitError):
    """Family spec is unknown or a parameter is out of range."""


class BudgetError(ZirkitError):
    """An exact search was requested beyond its enumeration budget."""


class PreconditionError(ZirkitError):
    """An operation was called with arguments violating its contract."""
