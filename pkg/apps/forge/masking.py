"""
Subject-specific masking of ground-truth grids.
Markers are never masked. Row and column subjects pick marker-free lines;
when a grid has too few marker-free columns, any column with maskable
cells qualifies and only its non-marker cells are masked.
"""

from apps.grids.cells import Grid
from apps.grids.exceptions import VoidPresent
from apps.scenarios.subjects import Subject, SubjectKind

from .exceptions import NotEnoughMaskable
from .instance import marker_free_lines


def _maskable(grid):
    return [position for position in grid.positions() if not grid[position].is_marker]


def _pick(rng, candidates, n, what):
    if len(candidates) < n:
        raise NotEnoughMaskable(f"Need {n} {what}, only {len(candidates)} available")
    chosen = rng.choice(len(candidates), size=n, replace=False)
    return sorted(candidates[index] for index in chosen)


def _mask_lines(grid, rng, n, axis):
    what = "rows" if axis == 0 else "columns"
    candidates = marker_free_lines(grid, axis)
    if len(candidates) < n and axis == 1:
        candidates = sorted({j for (_, j) in _maskable(grid)})
    lines = set(_pick(rng, candidates, n, what))
    return [
        position
        for position in _maskable(grid)
        if (position[0] if axis == 0 else position[1]) in lines
    ]


def apply_mask(gt: Grid, subject: Subject, rng):
    """
    Mask a ground truth for one subject.

    Args:
        gt: Ground truth without V cells.
        subject: Which cells to hide.
        rng: numpy Generator; the only source of randomness.

    Returns:
        (input grid with V cells, frozenset of masked positions)

    Raises:
        VoidPresent, NotEnoughMaskable
    """
    if gt.has_void():
        raise VoidPresent("Ground truth already contains V cells")

    if subject.kind is SubjectKind.CELLS:
        mask = _pick(rng, _maskable(gt), subject.n, "cells")
    elif subject.kind is SubjectKind.ROWS:
        mask = _mask_lines(gt, rng, subject.n, axis=0)
    elif subject.kind is SubjectKind.COLUMNS:
        mask = _mask_lines(gt, rng, subject.n, axis=1)
    else:
        rows = set(marker_free_lines(gt, axis=0))
        if not rows:
            raise NotEnoughMaskable("Grid has no marker-free rows to mask")
        mask = [position for position in gt.positions() if position[0] in rows]

    mask = frozenset(mask)
    return gt.with_void(mask), mask
