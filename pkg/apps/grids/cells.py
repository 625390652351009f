"""
Grid data model for loadpath-bench.
Cells, grids, difficulty levels and gravity vectors shared by every app.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .exceptions import GridError, OutOfRange, RaggedRows

Position = tuple[int, int]


class CellKind(str, Enum):
    LOAD = "L"
    SUPPORT = "S"
    VOID = "V"
    VALUE = "#"


class Difficulty(str, Enum):
    """Easy grids hold binary densities, Hard grids one-decimal densities."""

    EASY = "easy"
    HARD = "hard"

    @classmethod
    def parse(cls, value):
        try:
            return cls(str(value).lower())
        except ValueError as e:
            raise GridError(f"Unknown difficulty '{value}'") from e


@dataclass(frozen=True, slots=True)
class Cell:
    kind: CellKind
    density: float | None = None

    @classmethod
    def value(cls, density):
        density = float(density)
        if not 0.0 <= density <= 1.0:
            raise OutOfRange(f"Density {density} outside [0, 1]")
        return cls(CellKind.VALUE, density)

    @classmethod
    def unchecked(cls, density):
        """Numeric cell without the [0, 1] bound, used to score raw completions."""
        return cls(CellKind.VALUE, float(density))

    @property
    def is_marker(self):
        return self.kind in (CellKind.LOAD, CellKind.SUPPORT)

    @property
    def is_numeric(self):
        return self.kind is CellKind.VALUE

    @property
    def is_void(self):
        return self.kind is CellKind.VOID

    def is_solid(self, threshold=0.0):
        if self.is_marker:
            return True
        return self.is_numeric and self.density > threshold


LOAD = Cell(CellKind.LOAD)
SUPPORT = Cell(CellKind.SUPPORT)
VOID = Cell(CellKind.VOID)


@dataclass(frozen=True, slots=True)
class GravityVector:
    """Axis-aligned unit vector (row step, column step)."""

    dr: int = 1
    dc: int = 0

    def __post_init__(self):
        if self.dr not in (-1, 0, 1) or self.dc not in (-1, 0, 1):
            raise GridError(f"Gravity components must be in {{-1, 0, 1}}, got {self.as_tuple()}")
        if abs(self.dr) + abs(self.dc) != 1:
            raise GridError(f"Gravity must be axis-aligned, got {self.as_tuple()}")

    def as_tuple(self):
        return (self.dr, self.dc)

    def as_array(self):
        return np.array([self.dr, self.dc], dtype=float)

    @classmethod
    def from_sequence(cls, values):
        dr, dc = values
        return cls(int(dr), int(dc))


DOWN = GravityVector(1, 0)


@dataclass(frozen=True)
class Grid:
    """
    Rectangular lattice of cells stored row-major.
    Position (i, j) is row i from the top, column j from the left.
    """

    rows: int
    cols: int
    cells: tuple[Cell, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise GridError(f"Grid must be at least 1x1, got {self.rows}x{self.cols}")
        if len(self.cells) != self.rows * self.cols:
            raise RaggedRows(
                f"Expected {self.rows * self.cols} cells for {self.rows}x{self.cols}, "
                f"got {len(self.cells)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Cell]]):
        if not rows:
            raise GridError("Grid needs at least one row")
        width = len(rows[0])
        for index, row in enumerate(rows):
            if len(row) != width:
                raise RaggedRows(f"Row {index} has {len(row)} cells, expected {width}")
        return cls(len(rows), width, tuple(cell for row in rows for cell in row))

    @classmethod
    def from_densities(cls, values, markers: Mapping[Position, Cell] | None = None):
        """Build a grid from a 2D array of densities, overlaying marker cells."""
        array = np.asarray(values, dtype=float)
        markers = markers or {}
        rows = [
            [markers.get((i, j)) or Cell.value(array[i, j]) for j in range(array.shape[1])]
            for i in range(array.shape[0])
        ]
        return cls.from_rows(rows)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def at(self, i, j):
        return self.cells[i * self.cols + j]

    def __getitem__(self, position: Position):
        i, j = position
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"Position {position} outside {self.rows}x{self.cols} grid")
        return self.at(i, j)

    def in_bounds(self, i, j):
        return 0 <= i < self.rows and 0 <= j < self.cols

    def to_rows(self):
        return [self.cells[i * self.cols : (i + 1) * self.cols] for i in range(self.rows)]

    def positions(self) -> Iterator[Position]:
        for i in range(self.rows):
            for j in range(self.cols):
                yield (i, j)

    def find(self, kind: CellKind) -> list[Position]:
        return [(i, j) for (i, j) in self.positions() if self.at(i, j).kind is kind]

    def loads(self):
        return self.find(CellKind.LOAD)

    def supports(self):
        return self.find(CellKind.SUPPORT)

    def voids(self):
        return self.find(CellKind.VOID)

    def replace(self, updates: Mapping[Position, Cell]):
        cells = list(self.cells)
        for (i, j), cell in updates.items():
            cells[i * self.cols + j] = cell
        return Grid(self.rows, self.cols, tuple(cells))

    def with_void(self, positions: Iterable[Position]):
        return self.replace({position: VOID for position in positions})

    def density_array(self, fill=np.nan):
        """Densities as a float array; non-numeric cells take `fill`."""
        values = [cell.density if cell.is_numeric else fill for cell in self.cells]
        return np.array(values, dtype=float).reshape(self.rows, self.cols)

    def kind_array(self):
        return np.array([cell.kind.value for cell in self.cells]).reshape(self.rows, self.cols)

    def solid_mask(self, threshold=0.0):
        return np.array([cell.is_solid(threshold) for cell in self.cells]).reshape(
            self.rows, self.cols
        )

    def marker_mask(self):
        return np.array([cell.is_marker for cell in self.cells]).reshape(self.rows, self.cols)

    def has_void(self):
        return any(cell.is_void for cell in self.cells)
