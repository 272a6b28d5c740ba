"""Exact computations for conformal-block bundles on moduli of pointed rational curves.

Every number produced here is an integer or a fraction; no floating point
enters any code path.
"""

__version__ = "0.1.0"

from .errors import CapacityError, ConsistencyError, DomainError, ParseError
from .young import Partition, SlWeight

__all__ = [
    "CapacityError",
    "ConsistencyError",
    "DomainError",
    "ParseError",
    "Partition",
    "SlWeight",
    "__version__",
]
