"""
Force-path efficiency.

Each load runs a Dijkstra search over solid cells with 8-neighbour moves.
A move is weighted by its angle to gravity and by how far below the load it
ends; moves pointing against gravity are not allowed. The grid's cost is the
mean over loads of the cheapest route to any support, with unsupported
loads charged `cmax`.
"""

import heapq
import math

import numpy as np

from apps.grids.cells import DOWN, GravityVector, Grid

from .config import MetricConfig
from .exceptions import NoLoads

MOVES = [(di, dj) for di in (-1, 0, 1) for dj in (-1, 0, 1) if (di, dj) != (0, 0)]


def move_weight(move, gravity: GravityVector, cfg: MetricConfig):
    """Angular weight of a move, or None when the move points against gravity."""
    direction = np.asarray(move, dtype=float)
    direction /= np.linalg.norm(direction)
    dot = float(direction @ gravity.as_array())
    if dot < cfg.force_path.upward_dot_cutoff:
        return None
    angle = round(math.degrees(math.acos(max(-1.0, min(1.0, dot)))), 6)
    return cfg.force_path.angular_weight(angle)


def load_path_cost(g: Grid, load, gravity: GravityVector = DOWN, cfg: MetricConfig | None = None):
    cfg = cfg or MetricConfig()
    solid = g.solid_mask(cfg.connectivity_solid_threshold)
    supports = set(g.supports())
    weights = {move: move_weight(move, gravity, cfg) for move in MOVES}
    origin = np.asarray(load)
    gvec = gravity.as_array()

    best = {load: 0.0}
    queue = [(0.0, load)]
    while queue:
        cost, node = heapq.heappop(queue)
        if cost > best.get(node, math.inf):
            continue
        if node in supports:
            return cost
        i, j = node
        for move, weight in weights.items():
            if weight is None:
                continue
            ni, nj = i + move[0], j + move[1]
            if not g.in_bounds(ni, nj) or not solid[ni, nj]:
                continue
            depth = abs(float((np.array([ni, nj]) - origin) @ gvec))
            new_cost = cost + weight * (1.0 + cfg.force_path.depth_coeff * depth)
            if new_cost < best.get((ni, nj), math.inf):
                best[(ni, nj)] = new_cost
                heapq.heappush(queue, (new_cost, (ni, nj)))
    return cfg.cmax


def force_path_cost(g: Grid, gravity: GravityVector = DOWN, cfg: MetricConfig | None = None):
    """
    Mean cheapest load-to-support cost over all loads.

    Raises:
        NoLoads: the grid has no L cell.
    """
    loads = g.loads()
    if not loads:
        raise NoLoads("Grid has no loads")
    return sum(load_path_cost(g, load, gravity, cfg) for load in loads) / len(loads)


def fpceff(pred: Grid, gt: Grid, gravity: GravityVector = DOWN, cfg: MetricConfig | None = None):
    cfg = cfg or MetricConfig()
    ratio = force_path_cost(gt, gravity, cfg) / force_path_cost(pred, gravity, cfg)
    return min(1.0, max(0.0, ratio)) if cfg.clip_fpceff else ratio
