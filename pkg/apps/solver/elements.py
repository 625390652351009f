"""
Finite-element model for the density solver.
Bilinear plane-stress quadrilaterals, one element per grid cell.

Nodes are numbered column by column from the top-left corner:
node (ix, iy) -> (ny + 1) * ix + iy, with dofs 2n (x) and 2n + 1 (y, positive up).
"""

import logging
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np
from scipy.sparse import csc_array
from scipy.sparse.linalg import MatrixRankWarning, spsolve

from .exceptions import SingularSystem, SolverError

logger = logging.getLogger(__name__)

# Per-element densities shaped (ny, nx), values in [min_density, 1].
DensityField = np.ndarray


@lru_cache(maxsize=8)
def element_stiffness(youngs_modulus=1.0, poisson_ratio=0.3):
    nu = poisson_ratio
    k = np.array(
        [
            1 / 2 - nu / 6,
            1 / 8 + nu / 8,
            -1 / 4 - nu / 12,
            -1 / 8 + 3 * nu / 8,
            -1 / 4 + nu / 12,
            -1 / 8 - nu / 8,
            nu / 6,
            1 / 8 - 3 * nu / 8,
        ]
    )
    order = [
        [0, 1, 2, 3, 4, 5, 6, 7],
        [1, 0, 7, 6, 5, 4, 3, 2],
        [2, 7, 0, 5, 6, 3, 4, 1],
        [3, 6, 5, 0, 7, 2, 1, 4],
        [4, 5, 6, 7, 0, 1, 2, 3],
        [5, 4, 3, 2, 1, 0, 7, 6],
        [6, 3, 4, 1, 2, 7, 0, 5],
        [7, 2, 1, 4, 3, 6, 5, 0],
    ]
    matrix = k[np.array(order)] * youngs_modulus / (1 - nu**2)
    matrix.setflags(write=False)
    return matrix


@lru_cache(maxsize=32)
def element_dofs(nx, ny):
    """(nx*ny, 8) dof table; element e = iy * nx + ix matches a row-major density field."""
    ix, iy = np.meshgrid(np.arange(nx), np.arange(ny))
    ix = ix.ravel()
    iy = iy.ravel()
    n1 = (ny + 1) * ix + iy
    n2 = (ny + 1) * (ix + 1) + iy
    dofs = np.array(
        [2 * n1, 2 * n1 + 1, 2 * n2, 2 * n2 + 1, 2 * n2 + 2, 2 * n2 + 3, 2 * n1 + 2, 2 * n1 + 3]
    ).T
    dofs.setflags(write=False)
    return dofs


def node_index(ix, iy, ny):
    return (ny + 1) * ix + iy


@dataclass(frozen=True)
class FEProblem:
    nx: int
    ny: int
    fixed_dofs: np.ndarray
    load_vector: np.ndarray
    youngs_modulus: float = 1.0
    poisson_ratio: float = 0.3
    self_weight: float = 0.0

    def __post_init__(self):
        if len(self.fixed_dofs) == 0:
            raise SingularSystem("Problem has no fixed degrees of freedom")
        if not np.any(self.load_vector):
            raise SolverError("Problem has no applied load")

    @property
    def ndof(self):
        return 2 * (self.nx + 1) * (self.ny + 1)

    @property
    def free_dofs(self):
        return np.setdiff1d(np.arange(self.ndof), self.fixed_dofs)

    @classmethod
    def from_markers(cls, rows, cols, loads, supports, youngs_modulus=1.0, poisson_ratio=0.3,
                     self_weight=0.0):
        """
        Build the problem for a grid whose cells are elements.

        Args:
            rows, cols: Grid shape; elements are nx = cols by ny = rows.
            loads: Load cell positions; each gets a unit downward force on its top nodes.
            supports: Support cell positions; their bottom nodes are fully fixed.
        """
        nx, ny = cols, rows
        ndof = 2 * (nx + 1) * (ny + 1)
        force = np.zeros(ndof)
        for i, j in loads:
            for ix in (j, j + 1):
                force[2 * node_index(ix, i, ny) + 1] -= 0.5

        fixed = set()
        for i, j in supports:
            for ix in (j, j + 1):
                node = node_index(ix, i + 1, ny)
                fixed.update((2 * node, 2 * node + 1))

        return cls(
            nx=nx,
            ny=ny,
            fixed_dofs=np.array(sorted(fixed), dtype=int),
            load_vector=force,
            youngs_modulus=youngs_modulus,
            poisson_ratio=poisson_ratio,
            self_weight=self_weight,
        )

    def body_force_gradient(self):
        """d(f_e)/d(x_e) per element dof for self-weight; zero when self_weight is 0."""
        gradient = np.zeros(8)
        gradient[1::2] = -self.self_weight / 4
        return gradient

    def total_load(self, rho: DensityField):
        force = self.load_vector.copy()
        if self.self_weight > 0:
            dofs = element_dofs(self.nx, self.ny)
            contributions = rho.ravel()[:, None] * self.body_force_gradient()[None, :]
            np.add.at(force, dofs.ravel(), contributions.ravel())
        return force


class Equilibrium(NamedTuple):
    displacements: np.ndarray
    compliance: float


def assemble_and_solve(problem: FEProblem, rho: DensityField, p=3.0):
    """
    Solve K(rho) u = f with SIMP interpolation E(x) = x^p * E0.

    Returns:
        Equilibrium: nodal displacements and compliance f.u.

    Raises:
        SingularSystem: when the reduced system is rank deficient.
    """
    ke = element_stiffness(problem.youngs_modulus, problem.poisson_ratio)
    dofs = element_dofs(problem.nx, problem.ny)
    xf = np.asarray(rho, dtype=float).ravel()

    values = (ke[None, :, :] * (xf**p)[:, None, None]).ravel()
    row_index = np.repeat(dofs, 8, axis=1).ravel()
    col_index = np.tile(dofs, (1, 8)).ravel()
    stiffness = csc_array((values, (row_index, col_index)), shape=(problem.ndof, problem.ndof))

    force = problem.total_load(rho)
    free = problem.free_dofs
    u = np.zeros(problem.ndof)
    with warnings.catch_warnings():
        warnings.simplefilter("error", MatrixRankWarning)
        try:
            u[free] = spsolve(stiffness[free, :][:, free], force[free])
        except (MatrixRankWarning, RuntimeError) as e:
            raise SingularSystem(f"Stiffness matrix is singular: {e}") from e

    if not np.all(np.isfinite(u)):
        raise SingularSystem("Solution contains non-finite displacements")

    return Equilibrium(u, float(force @ u))


def element_energies(problem: FEProblem, displacements):
    """u_e^T K0 u_e per element, shaped like the density field."""
    ke = element_stiffness(problem.youngs_modulus, problem.poisson_ratio)
    ue = displacements[element_dofs(problem.nx, problem.ny)]
    energy = np.einsum("ni,ij,nj->n", ue, ke, ue)
    return energy.reshape(problem.ny, problem.nx)


def compliance_sensitivity(problem: FEProblem, rho: DensityField, displacements, p=3.0):
    """dc/dx_e, including the design-dependent self-weight term when enabled."""
    sensitivity = -p * rho ** (p - 1) * element_energies(problem, displacements)
    if problem.self_weight > 0:
        ue = displacements[element_dofs(problem.nx, problem.ny)]
        load_term = 2 * ue @ problem.body_force_gradient()
        sensitivity = sensitivity + load_term.reshape(problem.ny, problem.nx)
        sensitivity = np.minimum(sensitivity, -1e-12)
    return sensitivity
