"""
Grid transforms: binarization, quarter-turn rotation and mirroring.
Rotation is clockwise; gravity co-rotates so physics metrics stay frame-consistent.
"""

import numpy as np

from .cells import Cell, GravityVector, Grid
from .exceptions import VoidPresent


def binarize(grid: Grid, threshold=0.5):
    if grid.has_void():
        raise VoidPresent("Cannot binarize a grid that still contains V cells")
    cells = tuple(
        Cell.value(1.0 if cell.density >= threshold else 0.0) if cell.is_numeric else cell
        for cell in grid.cells
    )
    return Grid(grid.rows, grid.cols, cells)


def _as_object_array(grid):
    array = np.empty((grid.rows, grid.cols), dtype=object)
    for (i, j) in grid.positions():
        array[i, j] = grid.at(i, j)
    return array


def rotate90(grid: Grid, k=1):
    k %= 4
    if k == 0:
        return grid
    rotated = np.rot90(_as_object_array(grid), -k)
    return Grid.from_rows([list(row) for row in rotated])


def rotate_position(position, shape, k=1):
    """Where cell `position` of a grid with `shape` lands after `k` clockwise turns."""
    i, j = position
    rows, cols = shape
    for _ in range(k % 4):
        i, j = j, rows - 1 - i
        rows, cols = cols, rows
    return (i, j)


def rotate_gravity(gravity: GravityVector, k=1):
    dr, dc = gravity.dr, gravity.dc
    for _ in range(k % 4):
        dr, dc = dc, -dr
    return GravityVector(dr, dc)


def mirror(grid: Grid):
    """Left-right mirror image."""
    return Grid.from_rows([list(reversed(row)) for row in grid.to_rows()])
