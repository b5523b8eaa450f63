"""Exception types shared across the package.

Every semantic error raised by library code derives from MlqkitError so the
CLI and service layers can render the error name uniformly.
"""


class MlqkitError(Exception):
    """Base class for all mlqkit errors."""


class ShapeError(MlqkitError):
    """Ball configuration is not a valid multiline queue (row sizes must weakly decrease)."""


class DominanceSizeError(MlqkitError):
    """Dominance comparison requested for partitions of different sizes."""


class TooFewPositionsError(MlqkitError):
    """Rearrangement length is smaller than the number of parts."""


class TooFewColumnsError(MlqkitError):
    """Number of columns is too small for the bottom row of the shape."""


class NoActiveRegionError(MlqkitError):
    """Active region requested where the column raising operator acts trivially."""


class InvalidPairError(MlqkitError):
    """(nonwrapping queue, recording tableau) pair has no collapse preimage."""


class SizeError(MlqkitError):
    """Shape/content size mismatch."""


class ContentError(MlqkitError):
    """Charge requires the tableau content to be a partition."""


class FillingError(MlqkitError):
    """Composition-diagram filling violates a row constraint."""


class NotNonwrappingError(MlqkitError):
    """Operation requires a nonwrapping multiline queue (maj = 0)."""


class TheoremViolationError(MlqkitError):
    """The two independent coefficient computations disagree; never expected to fire."""


class UsageError(MlqkitError):
    """Unknown suite, flag, or operator token."""


class ParseError(MlqkitError):
    """Malformed JSON input; carries line/column when available."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column
