"""Exception types raised across the package."""


class GraphMetricError(Exception):
    """Base class for all package errors."""


class FormatError(GraphMetricError, ValueError):
    """Malformed text input."""


class EnumerationTooLarge(GraphMetricError):
    """An exhaustive enumeration would exceed its guard."""


class SearchTooLarge(GraphMetricError):
    """A combinatorial search would exceed its guard."""


class Singular(GraphMetricError, ArithmeticError):
    """Attempt to invert a singular linear map."""


class NotAnIsometry(GraphMetricError):
    pass


class NotApplicable(GraphMetricError):
    """Preconditions of a closed-form computation do not hold."""


class ZeroCode(GraphMetricError):
    pass


class InconsistentOracle(GraphMetricError):
    pass


class MissingRequiredWeight(GraphMetricError, KeyError):
    pass


class NotSingleLevel(GraphMetricError):
    pass


class UdpViolated(GraphMetricError):
    pass


class NotHierarchical(GraphMetricError):
    """Raised for graphs whose poset is not hierarchical.

    ``witness`` optionally carries a one-dimensional code that admits no
    canonical decomposition.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
