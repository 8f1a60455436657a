from __future__ import annotations


class CBOError(Exception):
    """Base class for errors raised by this package."""


class GraphError(CBOError, ValueError):
    """Malformed graph: self-loop, duplicate edge, or vertex out of range."""


class OrderingError(CBOError, ValueError):
    """An edge ordering is not a permutation of the graph's edge ids."""


class ParameterError(CBOError, ValueError):
    """Family or construction parameters violate a precondition."""


class NotMaximal2DegenerateError(CBOError, ValueError):
    pass


class FormatError(CBOError, ValueError):
    """A graph or ordering file could not be parsed.

    ``lineno`` is 1-based and refers to the physical line in the input.
    """

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
