"""Exception types shared across the package."""


class PathcircError(Exception):
    """Base class for all domain errors raised by pathcirc."""


class WidthError(PathcircError):
    """Wire counts of two circuits (or a circuit and an input) disagree."""


class BudgetError(PathcircError):
    """An operation would exceed a configured size or width budget."""


class ParseError(PathcircError):
    """Malformed textual input (graph JSON, circuit document, bitstring)."""


class ValidationError(PathcircError):
    """A structural invariant is violated (bad arity, dangling wire, ...)."""


class CapacityError(PathcircError):
    """A graph does not fit the requested vertex/edge capacity."""


class LengthError(PathcircError):
    """A path is too long for the requested verifier length."""
