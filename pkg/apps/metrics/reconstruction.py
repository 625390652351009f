"""
Reconstruction metrics: exact match and difference ratios.

All ratios share the denominator M, the sum of numeric ground-truth values.
Ratios are not clipped, so hallucinated material drives them below zero.
"""

from typing import NamedTuple

import numpy as np

from apps.grids.cells import Grid

from .config import MetricConfig
from .exceptions import MetricError, ZeroMass

TOLERANCE = 1e-9


class CellErrors(NamedTuple):
    mismatch: np.ndarray
    relative: np.ndarray
    penalized: np.ndarray
    mass: np.ndarray


class Ratios(NamedTuple):
    diff: float
    rel: float
    pen: float


def _cells_equal(a, b):
    if a.kind is not b.kind:
        return False
    if a.is_numeric:
        return abs(a.density - b.density) <= TOLERANCE
    return True


def exact_match(pred, gt: Grid):
    if not isinstance(pred, Grid) or pred.shape != gt.shape:
        return False
    return all(_cells_equal(a, b) for a, b in zip(pred.cells, gt.cells))


def cell_errors(pred: Grid, gt: Grid, penalty_weight=3.0):
    if pred.shape != gt.shape:
        raise MetricError(f"Shape mismatch: prediction {pred.shape}, ground truth {gt.shape}")
    mismatch = np.zeros(gt.shape)
    relative = np.zeros(gt.shape)
    penalized = np.zeros(gt.shape)
    mass = np.zeros(gt.shape)

    for position in gt.positions():
        a, b = pred[position], gt[position]
        if b.is_numeric:
            mass[position] = b.density
        if a.is_numeric and b.is_numeric:
            delta = abs(a.density - b.density)
            if delta > TOLERANCE:
                mismatch[position] = 1.0
                relative[position] = penalized[position] = delta
        elif a.kind is not b.kind:
            mismatch[position] = 1.0
            relative[position] = 1.0
            penalized[position] = penalty_weight
    return CellErrors(mismatch, relative, penalized, mass)


def _ratio(error, mass):
    if mass <= 0:
        if error <= TOLERANCE:
            return 1.0
        raise ZeroMass("Ground truth has no numeric mass")
    return 1.0 - error / mass


def diff_ratios(pred: Grid, gt: Grid, cfg: MetricConfig | None = None):
    """
    Difference, relative and penalized ratios.

    Raises:
        MetricError: shapes differ.
        ZeroMass: M = 0 and the prediction differs.
    """
    cfg = cfg or MetricConfig()
    errors = cell_errors(pred, gt, cfg.penalty_weight)
    mass = errors.mass.sum()
    return Ratios(
        diff=_ratio(errors.mismatch.sum(), mass),
        rel=_ratio(errors.relative.sum(), mass),
        pen=_ratio(errors.penalized.sum(), mass),
    )


def weight_array(shape, weights):
    array = np.ones(shape)
    for position, weight in weights.items():
        array[position] = weight
    return array


def weighted_ratios(pred: Grid, gt: Grid, difficulty, cfg: MetricConfig | None = None):
    """Difference and relative ratios with masked cells scaled by their difficulty weight."""
    cfg = cfg or MetricConfig()
    errors = cell_errors(pred, gt, cfg.penalty_weight)
    w = weight_array(gt.shape, difficulty.weights)
    mass = (w * errors.mass).sum()
    return _ratio((w * errors.mismatch).sum(), mass), _ratio((w * errors.relative).sum(), mass)
