"""Exception types shared across the package."""


class AdianError(Exception):
    """Base class for all errors raised by this package."""


class WordSyntaxError(AdianError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ExpansionOverflow(AdianError, OverflowError):
    """An expanded word would be longer than the configured cap."""


class EmptyWord(AdianError, ValueError):
    pass


class NotLeftCycleFree(AdianError, ValueError):
    pass


class IdenticalSides(AdianError, ValueError):
    pass


class NotEqualEvidence(AdianError):
    """Raised by a pair step when the first component has a headless decomposition.

    The two words of the pair are then provably distinct in the monoid.
    """

    def __init__(self, state):
        super().__init__(f"headless decomposition at ({state.u}, {state.v})")
        self.state = state


class SearchBoundExceeded(AdianError, RuntimeError):
    pass


class InvalidK(AdianError, ValueError):
    pass


class ShapeMismatch(AdianError, ValueError):
    pass


class InternalMismatch(AdianError, AssertionError):
    """Two independent computations that must agree did not."""
