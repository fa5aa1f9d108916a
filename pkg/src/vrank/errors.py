"""Exception types raised across the package."""


class VrankError(Exception):
    """Base class for all package errors."""


class EndpointOutOfRange(VrankError):
    pass


class SelfLoop(VrankError):
    pass


class Disconnected(VrankError):
    pass


class ColoringIncomplete(VrankError):
    pass


class InvalidColor(VrankError):
    """A color that is not a positive integer."""


class BudgetExceeded(VrankError):
    """Path enumeration ran past its step budget."""


class SearchBudgetExceeded(VrankError):
    """An exhaustive search ran past its node budget."""


class Infeasible(VrankError):
    """No valid coloring exists within the allowed number of colors."""

    def __init__(self, kind, max_k):
        super().__init__(f"no {kind} coloring with at most {max_k} colors")
        self.kind = kind
        self.max_k = max_k


class SetsOverlap(VrankError):
    pass


class NoSeparatorFound(VrankError):
    pass


class NotATree(VrankError):
    pass


class SizeOverflow(VrankError):
    pass


class ParseError(VrankError):
    def __init__(self, line, reason):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
