"""
Metric configuration.
"""

from dataclasses import asdict, dataclass, field

from .exceptions import MetricError


@dataclass(frozen=True)
class ForcePathConfig:
    """Angle buckets in degrees; the last cost applies past the last threshold."""

    angle_thresholds: tuple = (15.0, 45.0, 100.0)
    angle_costs: tuple = (1.0, 1.2, 1.5, 3.0)
    upward_dot_cutoff: float = -0.5
    depth_coeff: float = 0.05

    def __post_init__(self):
        thresholds = tuple(float(t) for t in self.angle_thresholds)
        costs = tuple(float(c) for c in self.angle_costs)
        object.__setattr__(self, "angle_thresholds", thresholds)
        object.__setattr__(self, "angle_costs", costs)
        if len(costs) != len(thresholds) + 1:
            raise MetricError("angle_costs needs exactly one more entry than angle_thresholds")
        if list(thresholds) != sorted(thresholds):
            raise MetricError("angle_thresholds must be increasing")
        if costs[0] <= 0 or any(b < a for a, b in zip(costs, costs[1:])):
            raise MetricError("angle_costs must be positive and nondecreasing")
        if self.depth_coeff < 0:
            raise MetricError("depth_coeff must be non-negative")

    def angular_weight(self, angle):
        for threshold, cost in zip(self.angle_thresholds, self.angle_costs):
            if angle < threshold:
                return cost
        return self.angle_costs[-1]


@dataclass(frozen=True)
class MetricConfig:
    penalty_weight: float = 3.0
    cmax: float = 1e6
    clip_fpceff: bool = True
    connectivity_solid_threshold: float = 0.0
    difficulty_strategy: str = "category_diversity"
    force_path: ForcePathConfig = field(default_factory=ForcePathConfig)

    def __post_init__(self):
        if self.penalty_weight < 1:
            raise MetricError("penalty_weight must be >= 1")
        if self.cmax <= 0:
            raise MetricError("cmax must be positive")
        if not 0.0 <= self.connectivity_solid_threshold < 1.0:
            raise MetricError("connectivity_solid_threshold must be in [0, 1)")

    def to_dict(self):
        data = asdict(self)
        data["force_path"] = {
            key: list(value) if isinstance(value, tuple) else value
            for key, value in data["force_path"].items()
        }
        return data
