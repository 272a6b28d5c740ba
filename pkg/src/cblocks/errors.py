"""Shared exception types, split by how the command line reports them."""


class DomainError(ValueError):
    """A stated precondition fails, so the requested object is undefined."""


class CapacityError(DomainError):
    """Input exceeds a configured size bound for a brute-force routine."""


class ConsistencyError(RuntimeError):
    """An identity that must hold exactly came out false; indicates a bug."""


class ParseError(ValueError):
    """Malformed textual input (weights, curves, partitions)."""
