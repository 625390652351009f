"""
Solver configuration.
Defaults reproduce the benchmark's published optimization parameters.
"""

from dataclasses import asdict, dataclass

from .exceptions import SolverConfigError


@dataclass(frozen=True)
class SolverConfig:
    target_density: float = 0.1
    penalization: float = 3.0
    iterations: int = 10
    smoothing: float = 0.1
    min_density: float = 0.001
    delete_threshold: float = 0.5
    self_weight: float = 0.0
    move_limit: float = 0.2
    youngs_modulus: float = 1.0
    poisson_ratio: float = 0.3
    repair_load_paths: bool = True
    remove_floating: bool = True

    def __post_init__(self):
        if not 0.0 < self.target_density <= 1.0:
            raise SolverConfigError("target_density must be in (0, 1]")
        if self.penalization < 1.0:
            raise SolverConfigError("penalization must be >= 1")
        if self.iterations < 1:
            raise SolverConfigError("iterations must be >= 1")
        if not 0.0 < self.min_density < self.delete_threshold:
            raise SolverConfigError("min_density must be in (0, delete_threshold)")
        if not 0.0 < self.delete_threshold <= 1.0:
            raise SolverConfigError("delete_threshold must be in (0, 1]")
        if self.smoothing < 0 or self.self_weight < 0:
            raise SolverConfigError("smoothing and self_weight must be non-negative")
        if not 0.0 < self.move_limit <= 1.0:
            raise SolverConfigError("move_limit must be in (0, 1]")
        if self.youngs_modulus <= 0 or not -1.0 < self.poisson_ratio < 0.5:
            raise SolverConfigError(
                "youngs_modulus must be positive and poisson_ratio in (-1, 0.5)"
            )

    def filter_radius(self, nx, ny):
        """Smoothing maps to a sensitivity-filter radius in cells, never below one cell."""
        return max(1.0, self.smoothing * max(nx, ny))

    def to_dict(self):
        return asdict(self)
