"""Exception hierarchy shared by every module."""


class HosoyaError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(HosoyaError, ValueError):
    """Malformed edge-list line."""

    def __init__(self, message: str, line_no: int | None = None, line: str | None = None):
        self.line_no = line_no
        self.line = line
        if line_no is not None:
            message = f"line {line_no}: {message}: {line!r}"
        super().__init__(message)


class LoopEdge(ParseError):
    """An edge joins a vertex to itself."""


class DisconnectedGraph(HosoyaError, ValueError):
    """The graph has more than one connected component."""


class NonzeroRemainder(HosoyaError, ArithmeticError):
    """Polynomial division that was expected to be exact left a remainder."""


class InvalidSpec(HosoyaError, ValueError):
    """A construction description is inconsistent."""


class InvalidPartition(HosoyaError, ValueError):
    """A caller-supplied partition is not a point-attaching decomposition."""


class InvalidParams(HosoyaError, ValueError):
    """Family parameters are out of range."""


class FormulaMismatch(HosoyaError, AssertionError):
    """Two evaluation routes that must agree produced different polynomials."""
