from core.errors import BenchmarkError


class SolverError(BenchmarkError):
    """Base error for the topology optimization solver."""


class SolverConfigError(SolverError):
    pass


class SingularSystem(SolverError):
    """Stiffness system cannot be solved, usually from missing supports."""


class BisectionFailure(SolverError):
    """The volume multiplier could not be bracketed."""
