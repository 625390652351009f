"""
Root of the loadpath-bench error hierarchy.
Kept free of Django imports so numeric modules can raise it in worker processes.
"""


class BenchmarkError(Exception):
    """Base class for every domain error raised by the benchmark apps."""

    status_code = 400

    def __init__(self, message="", **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def __str__(self):
        return self.message or self.__class__.__name__


class ConfigError(BenchmarkError):
    """Run configuration could not be loaded or validated."""
