"""
SIMP compliance minimization driver.
Turns a load/support scenario into Hard (one-decimal) and Easy (binary) ground truths.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from apps.grids.cells import LOAD, SUPPORT, Grid
from apps.grids.transforms import binarize

from .config import SolverConfig
from .elements import FEProblem, assemble_and_solve, compliance_sensitivity
from .exceptions import BisectionFailure
from .filters import sensitivity_filter
from .optimality import oc_update
from .repair import drop_floating_material, repair_load_paths

logger = logging.getLogger(__name__)

MONOTONE_SLACK = 1e-9
MAX_MOVE_HALVINGS = 8


@dataclass
class SimpTrace:
    densities: np.ndarray
    compliances: list = field(default_factory=list)


@dataclass
class OptimizationResult:
    hard_grid: Grid
    easy_grid: Grid
    densities: np.ndarray
    compliances: list
    repaired_cells: list
    dropped_cells: list = field(default_factory=list)


def run_simp(problem: FEProblem, cfg: SolverConfig):
    """
    Run cfg.iterations optimality-criteria iterations from a uniform field.

    A step that would raise compliance is retried with a halved move limit;
    if every retry fails the previous field is kept.
    """
    p = cfg.penalization
    radius = cfg.filter_radius(problem.nx, problem.ny)
    x = np.full((problem.ny, problem.nx), cfg.target_density)
    u, compliance = assemble_and_solve(problem, x, p)
    trace = SimpTrace(densities=x, compliances=[compliance])

    for iteration in range(cfg.iterations):
        dc = compliance_sensitivity(problem, x, u, p)
        dc = sensitivity_filter(x, dc, radius)

        move = cfg.move_limit
        for _ in range(MAX_MOVE_HALVINGS + 1):
            try:
                candidate = oc_update(
                    x, dc, cfg.target_density, move=move, min_density=cfg.min_density
                )
            except BisectionFailure:
                move /= 2
                continue
            u_new, c_new = assemble_and_solve(problem, candidate, p)
            if c_new <= compliance * (1 + MONOTONE_SLACK):
                x, u, compliance = candidate, u_new, c_new
                break
            move /= 2
        else:
            logger.debug("Iteration %d kept previous field; no descent step found", iteration)

        trace.compliances.append(compliance)

    trace.densities = x
    return trace


def round_densities(values):
    """Round half away from zero to one decimal; densities are non-negative."""
    return np.floor(np.round(values, 9) * 10 + 0.5) / 10


def optimize_with_trace(scenario, cfg: SolverConfig | None = None):
    cfg = cfg or SolverConfig()
    loads = scenario.load_cells()
    supports = scenario.support_cells()
    problem = FEProblem.from_markers(
        scenario.rows,
        scenario.cols,
        loads,
        supports,
        youngs_modulus=cfg.youngs_modulus,
        poisson_ratio=cfg.poisson_ratio,
        self_weight=cfg.self_weight,
    )
    trace = run_simp(problem, cfg)

    markers = {position: LOAD for position in loads}
    markers.update({position: SUPPORT for position in supports})

    rounded = np.clip(round_densities(trace.densities), 0.0, 1.0)
    repaired_cells = []
    if cfg.repair_load_paths:
        solid = rounded >= cfg.delete_threshold
        for position in markers:
            solid[position] = True
        rounded, repaired_cells = repair_load_paths(
            rounded,
            solid,
            loads,
            supports,
            cfg.delete_threshold,
            symmetric=scenario.is_mirror_symmetric(),
        )

    dropped_cells = []
    if cfg.remove_floating:
        marker_mask = np.zeros(rounded.shape, dtype=bool)
        for position in markers:
            marker_mask[position] = True
        rounded, dropped_cells = drop_floating_material(rounded, marker_mask, cfg.delete_threshold)

    hard = Grid.from_densities(rounded, markers)
    easy = binarize(hard, cfg.delete_threshold)
    return OptimizationResult(
        hard_grid=hard,
        easy_grid=easy,
        densities=trace.densities,
        compliances=trace.compliances,
        repaired_cells=repaired_cells,
        dropped_cells=dropped_cells,
    )


def optimize(scenario, cfg: SolverConfig | None = None):
    """Optimize one scenario; returns (hard_grid, easy_grid)."""
    result = optimize_with_trace(scenario, cfg)
    return result.hard_grid, result.easy_grid
