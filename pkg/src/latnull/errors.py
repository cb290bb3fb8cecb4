"""Exception types raised across the package."""


class LatticeError(ValueError):
    """Base class for every error raised by latnull."""


class _Located(LatticeError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownLabel(_Located):
    pass


class DuplicateElement(_Located):
    pass


class CycleError(LatticeError):
    pass


class RedundantCover(LatticeError):
    pass


class BadBounds(LatticeError):
    pass


class NotALattice(LatticeError):
    """Some pair has no meet or no join.

    ``pair`` holds the labels of the first offending pair (id order) and
    ``missing`` is ``"meet"`` or ``"join"``.
    """

    def __init__(self, message, pair=None, missing=None):
        super().__init__(message)
        self.pair = pair
        self.missing = missing


class NotComparable(LatticeError):
    pass


class GenerationExhausted(LatticeError):
    pass


class BadZero(LatticeError):
    """The designated zero element is the bottom or the top."""


class WrongIaSize(LatticeError):
    def __init__(self, message, size=None):
        super().__init__(message)
        self.size = size


class PreconditionFailed(LatticeError):
    """A construction was requested where its precondition does not hold.

    ``condition`` names the failed condition and ``lhs``/``rhs`` carry the
    evaluated labels of both sides.
    """

    def __init__(self, message, condition=None, lhs=None, rhs=None):
        super().__init__(message)
        self.condition = condition
        self.lhs = lhs
        self.rhs = rhs


class SearchSpaceTooLarge(LatticeError):
    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class NotApplicable(LatticeError):
    pass


class ParseError(_Located):
    pass
