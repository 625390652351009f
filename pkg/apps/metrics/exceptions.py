from core.errors import BenchmarkError


class MetricError(BenchmarkError):
    """Base error for metric computation."""


class ZeroMass(MetricError):
    """Ground truth has no numeric mass while the prediction differs from it."""


class NoLoads(MetricError):
    pass
