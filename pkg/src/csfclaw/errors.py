"""Exception hierarchy shared by every module."""


class CsfError(Exception):
    """Base class for all errors raised by csfclaw."""


class DomainError(CsfError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class ContractError(CsfError, TypeError):
    """Operands violate a structural precondition (e.g. mismatched bases)."""


class CapacityError(CsfError, RuntimeError):
    """A configured work or size cap would be exceeded."""


class Graph6Error(CsfError, ValueError):
    """Malformed graph6 record; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset
