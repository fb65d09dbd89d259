"""Exception types shared across the library."""


class LinformError(Exception):
    """Base class for all library-specific failures."""


class IntegerOverflowError(LinformError):
    """An exact computation left the signed 64-bit range."""


class ProblemFormatError(LinformError):
    """A problem document violated the input schema."""


class InconsistentWindowError(LinformError):
    """No membership bit can satisfy the recursion at the reported index.

    Raised while stepping the window recursion, and also when a detected
    repeat is only eventually periodic: in both cases no t-complementing
    set is compatible with the seed.
    """

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"no consistent membership bit at index {index}")


class DegenerateGapError(LinformError):
    """The recursion gap is zero, so window stepping is undefined."""


class GapTooLargeError(LinformError):
    """The recursion gap exceeds the configured state-search limit."""
