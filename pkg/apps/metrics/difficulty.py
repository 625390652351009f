"""
Difficulty weights for masked cells, computed from the ground-truth neighbourhood.
"""

from dataclasses import dataclass, field

from apps.grids.cells import Grid

from .exceptions import MetricError

EMPTY, SOLID, MARKER = "empty", "solid", "marker"
MIN_WEIGHT, MAX_WEIGHT = 1, 3

NEIGHBOURS_8 = [(di, dj) for di in (-1, 0, 1) for dj in (-1, 0, 1) if (di, dj) != (0, 0)]
NEIGHBOURS_4 = [(-1, 0), (1, 0), (0, -1), (0, 1)]


@dataclass(frozen=True)
class DifficultyMap:
    weights: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.weights)

    @property
    def mean(self):
        if not self.weights:
            return None
        return sum(self.weights.values()) / len(self.weights)


def category(cell):
    if cell.is_marker:
        return MARKER
    if cell.is_numeric and cell.density > 0:
        return SOLID
    return EMPTY


def _clamp(value):
    return max(MIN_WEIGHT, min(MAX_WEIGHT, value))


def _neighbours(gt: Grid, position, offsets):
    i, j = position
    return [gt.at(i + di, j + dj) for di, dj in offsets if gt.in_bounds(i + di, j + dj)]


def category_diversity(gt: Grid, position):
    """Distinct categories among the in-bounds 8-neighbours."""
    return _clamp(len({category(cell) for cell in _neighbours(gt, position, NEIGHBOURS_8)}))


def boundary_contrast(gt: Grid, position):
    """4-neighbours whose category differs from the cell's own."""
    own = category(gt[position])
    differing = sum(1 for cell in _neighbours(gt, position, NEIGHBOURS_4) if category(cell) != own)
    return _clamp(differing)


STRATEGIES = {
    "category_diversity": category_diversity,
    "boundary_contrast": boundary_contrast,
}


def difficulty_map(instance, strategy="category_diversity"):
    try:
        rule = STRATEGIES[strategy]
    except KeyError as e:
        raise MetricError(
            f"Unknown difficulty strategy '{strategy}'. Expected one of: {', '.join(STRATEGIES)}"
        ) from e
    gt = instance.ground_truth
    return DifficultyMap({position: rule(gt, position) for position in sorted(instance.mask)})
