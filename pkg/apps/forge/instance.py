"""
Task instances and prompt styles.
"""

import re
from dataclasses import dataclass, replace
from enum import Enum

from apps.grids.cells import DOWN, CellKind, Difficulty, GravityVector, Grid
from apps.grids.transforms import rotate90, rotate_gravity, rotate_position
from apps.scenarios.subjects import Subject

from .exceptions import ForgeError


class Style(str, Enum):
    BASE = "base"
    PHYSICS_ENHANCED = "physics_enhanced"
    PHYSICS_NEUTRAL = "physics_neutral"


ALLOWED_SHOTS = (0, 1, 3)
ROTATION_SUFFIX = re.compile(r"-r[1-3]$")


@dataclass(frozen=True)
class PromptStyle:
    style: Style = Style.BASE
    shots: int = 0

    def __post_init__(self):
        if self.shots not in ALLOWED_SHOTS:
            raise ForgeError(f"shots must be one of {ALLOWED_SHOTS}, got {self.shots}")

    @classmethod
    def build(cls, style="base", shots=0):
        try:
            return cls(Style(style), int(shots))
        except ValueError as e:
            raise ForgeError(f"Unknown prompt style '{style}'") from e


@dataclass(frozen=True)
class TaskInstance:
    id: str
    subject: Subject
    difficulty: Difficulty
    input: Grid
    ground_truth: Grid
    mask: frozenset
    rotation: int = 0
    gravity: GravityVector = DOWN
    scenario: object = None

    def __post_init__(self):
        if self.input.shape != self.ground_truth.shape:
            raise ForgeError(f"{self.id}: input and ground truth shapes differ")
        voids = frozenset(self.input.voids())
        if voids != self.mask:
            raise ForgeError(f"{self.id}: mask does not match the V cells of the input")
        for position in self.input.positions():
            if position in self.mask:
                if self.ground_truth[position].is_marker:
                    raise ForgeError(f"{self.id}: marker cell {position} is masked")
            elif self.input[position] != self.ground_truth[position]:
                raise ForgeError(f"{self.id}: input differs from ground truth at {position}")

    @property
    def sorted_mask(self):
        return sorted(self.mask)

    @property
    def base_id(self):
        """Id of the unrotated dataset instance."""
        return ROTATION_SUFFIX.sub("", self.id)


def rotate_instance(instance: TaskInstance, k: int):
    """Rotate grids, mask and gravity together by k clockwise quarter-turns."""
    k %= 4
    if k == 0:
        return instance
    shape = instance.input.shape
    rotation = (instance.rotation + k) % 4
    return replace(
        instance,
        id=f"{instance.base_id}-r{rotation}" if rotation else instance.base_id,
        input=rotate90(instance.input, k),
        ground_truth=rotate90(instance.ground_truth, k),
        mask=frozenset(rotate_position(position, shape, k) for position in instance.mask),
        rotation=rotation,
        gravity=rotate_gravity(instance.gravity, k),
    )


def marker_free_lines(grid: Grid, axis):
    """Indices of rows (axis 0) or columns (axis 1) that contain no L/S cell."""
    kinds = grid.kind_array()
    markers = (kinds == CellKind.LOAD.value) | (kinds == CellKind.SUPPORT.value)
    has_marker = markers.any(axis=1 - axis)
    return [index for index, flagged in enumerate(has_marker) if not flagged]
