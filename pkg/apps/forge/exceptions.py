from core.errors import BenchmarkError


class ForgeError(BenchmarkError):
    """Base error for masking and prompt rendering."""


class NotEnoughMaskable(ForgeError):
    pass


class EmptyPool(ForgeError):
    """Few-shot examples were requested but no candidate exists."""
