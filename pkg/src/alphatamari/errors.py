"""Exception hierarchy shared by every module of the package."""


class AlphaTamariError(Exception):
    """Base class for domain errors (the CLI maps these to exit status 1)."""


class EmptyComposition(AlphaTamariError, ValueError):
    pass


class NonPositivePart(AlphaTamariError, ValueError):
    pass


class IndexOutOfRange(AlphaTamariError, IndexError):
    pass


class CompositionMismatch(AlphaTamariError, ValueError):
    pass


class NotAnAlphaPermutation(AlphaTamariError, ValueError):
    pass


class SizeCapExceeded(AlphaTamariError):
    pass


class UnsupportedFormat(AlphaTamariError, ValueError):
    pass


class InvalidVector(AlphaTamariError, ValueError):
    """A vector failed its validity check; ``report`` holds the first violation."""

    def __init__(self, report):
        super().__init__(report.message)
        self.report = report


class InvalidCode(InvalidVector):
    pass


class InvalidReducedVector(InvalidVector):
    pass


class InvalidBracketVector(InvalidVector):
    pass


class NotALattice(AlphaTamariError):
    def __init__(self, op, x, y, candidates):
        self.op = op
        self.x = x
        self.y = y
        self.candidates = tuple(candidates)
        super().__init__(
            f"{op} of {x!r} and {y!r} is not unique: candidates {list(self.candidates)!r}"
        )


class PosetConstructionError(AlphaTamariError):
    """Internal cross-check failed while materializing a poset."""
