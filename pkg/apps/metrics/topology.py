"""
Topological metrics: grid validity, load-support connectivity and isolated clusters.
"""

from collections import deque
from typing import NamedTuple

import numpy as np
from scipy import ndimage

from apps.grids.cells import DOWN, Difficulty, GravityVector, Grid

FOUR_CONNECTED = ndimage.generate_binary_structure(2, 1)
EIGHT_MOVES = [(di, dj) for di in (-1, 0, 1) for dj in (-1, 0, 1) if (di, dj) != (0, 0)]


class Connectivity(NamedTuple):
    connected: bool
    reason: str | None = None


def admissible(cell, difficulty=None):
    if cell.is_marker:
        return True
    if not cell.is_numeric or not 0.0 <= cell.density <= 1.0:
        return False
    if difficulty is Difficulty.EASY:
        return cell.density in (0.0, 1.0)
    if difficulty is Difficulty.HARD:
        return abs(cell.density * 10 - round(cell.density * 10)) < 1e-6
    return True


def valid_grid(pred, gt: Grid, difficulty=None):
    """
    False on parse failure, shape mismatch, leftover V cells or inadmissible values.
    Marker positions are not compared with the ground truth.
    """
    if not isinstance(pred, Grid) or pred.shape != gt.shape:
        return False
    difficulty = Difficulty.parse(difficulty) if difficulty is not None else None
    return all(admissible(cell, difficulty) for cell in pred.cells)


def directional_moves(gravity: GravityVector):
    """Straight descent plus the two lateral moves; no diagonals."""
    dr, dc = gravity.as_tuple()
    return [(dr, dc), (dc, dr), (-dc, -dr)]


def check_connectivity(g: Grid, directional=False, gravity: GravityVector = DOWN, threshold=0.0):
    loads, supports = g.loads(), set(g.supports())
    if not loads:
        return Connectivity(False, "no_loads")
    if not supports:
        return Connectivity(False, "no_supports")

    solid = g.solid_mask(threshold)
    moves = directional_moves(gravity) if directional else EIGHT_MOVES
    seen = set(loads)
    queue = deque(loads)
    while queue:
        i, j = queue.popleft()
        if (i, j) in supports:
            return Connectivity(True)
        for di, dj in moves:
            ni, nj = i + di, j + dj
            if g.in_bounds(ni, nj) and solid[ni, nj] and (ni, nj) not in seen:
                seen.add((ni, nj))
                queue.append((ni, nj))
    return Connectivity(False)


def ls_connectivity(g: Grid, directional=False, gravity: GravityVector = DOWN, threshold=0.0):
    return check_connectivity(g, directional, gravity, threshold).connected


def isolated_clusters(g: Grid, threshold=0.0):
    """Count 4-connected numeric solid components with no cell 4-adjacent to an L or S."""
    densities = g.density_array(fill=0.0)
    numeric_solid = (densities > threshold) & ~g.marker_mask()
    labels, count = ndimage.label(numeric_solid, structure=FOUR_CONNECTED)
    if count == 0:
        return 0
    near_marker = ndimage.binary_dilation(g.marker_mask(), structure=FOUR_CONNECTED)
    anchored = set(np.unique(labels[near_marker & numeric_solid]).tolist())
    return sum(1 for label in range(1, count + 1) if label not in anchored)
