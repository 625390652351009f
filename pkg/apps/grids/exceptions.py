"""
Grid errors.
Mirror the malformed-completion classes scored by the validity metric.
"""

from core.errors import BenchmarkError


class GridError(BenchmarkError):
    """Base error for grid construction and parsing."""


class EmptyGrid(GridError):
    pass


class RaggedRows(GridError):
    """Rows carry unequal token counts."""


class BadToken(GridError):
    """A token is not an admissible symbol for the difficulty."""


class OutOfRange(GridError):
    """A numeric token lies outside [0, 1]."""


class VoidPresent(GridError):
    """Operation requires a grid without masked cells."""
