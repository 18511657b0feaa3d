"""Exception hierarchy shared by every module."""


class K3ColoringsError(Exception):
    """Base class for all library errors."""


class SizeLimit(K3ColoringsError):
    """Input exceeds the exhaustive-search size budget."""


class ParseError(K3ColoringsError, ValueError):
    """Malformed graph6 (or JSON) input; ``offset`` is the byte position."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class BudgetExceeded(K3ColoringsError):
    """A search ran past its node budget; ``nodes_visited`` says how far it got."""

    def __init__(self, message: str, nodes_visited: int = 0):
        super().__init__(message)
        self.nodes_visited = nodes_visited


class InvalidPartition(K3ColoringsError, ValueError):
    pass


class InvariantViolation(K3ColoringsError):
    pass


class PreconditionViolation(K3ColoringsError, ValueError):
    pass


class RangeError(K3ColoringsError, ValueError):
    pass


class DomainError(K3ColoringsError, ValueError):
    pass


class Infeasible(K3ColoringsError):
    pass


class Unbounded(K3ColoringsError):
    pass


class DimensionLimit(K3ColoringsError):
    pass


class PrecisionExhausted(K3ColoringsError):
    pass
