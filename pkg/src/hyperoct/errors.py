"""Exception types shared across the package."""


class CapExceeded(RuntimeError):
    """An enumeration or search ran past its configured bound.

    ``progress`` records how far the computation got before it stopped.
    """

    def __init__(self, message: str, progress: int | None = None):
        super().__init__(message)
        self.progress = progress


class HypothesisViolation(ValueError):
    """The input lies outside the regime where the column description is valid."""


class InternalError(AssertionError):
    """A proven structural property failed to hold; indicates a bug."""
