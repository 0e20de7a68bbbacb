"""Exception hierarchy.

Every error raised by the library derives from :class:`SwapCritError`, which
is itself a ``ValueError`` so callers validating user input can catch either.
"""


class SwapCritError(ValueError):
    pass


class SelfLoop(SwapCritError):
    pass


class DuplicateEdge(SwapCritError):
    pass


class VertexOutOfRange(SwapCritError):
    pass


class Disconnected(SwapCritError):
    pass


class NotATree(SwapCritError):
    pass


class NotATreeEdge(SwapCritError):
    pass


class NotInTX(SwapCritError):
    pass


class NotASwapEdge(SwapCritError):
    pass


class OrientationMismatch(SwapCritError):
    pass


class SideViolation(SwapCritError):
    pass


class EmptySwapSet(SwapCritError):
    pass


class InfeasibleSpec(SwapCritError):
    pass


class TooLarge(SwapCritError):
    pass


class ParseError(SwapCritError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(SwapCritError):
    pass
