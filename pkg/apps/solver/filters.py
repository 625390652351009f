"""
Sensitivity filter.
Cone-weighted, density-weighted convex average over the closed disk of the radius.
"""

import math
from functools import lru_cache

import numpy as np
from scipy.sparse import coo_array


@lru_cache(maxsize=32)
def filter_weights(nx, ny, radius):
    """Sparse (n, n) matrix of weights H_ef = 1 + r - dist(e, f) for dist <= r."""
    reach = int(math.floor(radius))
    rows, cols, values = [], [], []
    for iy in range(ny):
        for ix in range(nx):
            e = iy * nx + ix
            for jy in range(max(0, iy - reach), min(ny, iy + reach + 1)):
                for jx in range(max(0, ix - reach), min(nx, ix + reach + 1)):
                    dist = math.hypot(ix - jx, iy - jy)
                    if dist <= radius:
                        rows.append(e)
                        cols.append(jy * nx + jx)
                        values.append(1.0 + radius - dist)
    size = nx * ny
    return coo_array((values, (rows, cols)), shape=(size, size)).tocsr()


def sensitivity_filter(rho, dc, radius):
    rho = np.asarray(rho, dtype=float)
    dc = np.asarray(dc, dtype=float)
    if radius <= 0:
        return dc.copy()

    ny, nx = rho.shape
    weights = filter_weights(nx, ny, float(radius))
    x = rho.ravel()
    filtered = weights @ (x * dc.ravel()) / (weights @ x)
    return filtered.reshape(rho.shape)
