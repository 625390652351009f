"""
Load-path repair for generated ground truths.
Ensures the binarized structure carries every load path downward or sideways to a support.
"""

import heapq
import logging

import numpy as np
from scipy import ndimage

logger = logging.getLogger(__name__)

# Down and lateral steps in the unrotated frame (gravity points to increasing rows).
REPAIR_MOVES = ((1, 0), (0, 1), (0, -1))
FOUR_CONNECTED = ndimage.generate_binary_structure(2, 1)


def cheapest_load_path(densities, solid, loads, supports):
    """
    Dijkstra from every load to the nearest support over down/lateral steps.

    Entering an already-solid cell is free; any other cell costs 1 + (1 - density),
    so the path adds as few cells as possible and prefers denser ones.

    Returns:
        list of (i, j) on the path, loads and support included; empty if unreachable.
    """
    rows, cols = densities.shape
    targets = set(supports)
    best = {}
    parent = {}
    heap = []
    for position in sorted(loads):
        best[position] = 0.0
        heapq.heappush(heap, (0.0, position))

    reached = None
    while heap:
        cost, (i, j) = heapq.heappop(heap)
        if cost > best.get((i, j), float("inf")):
            continue
        if (i, j) in targets:
            reached = (i, j)
            break
        for di, dj in REPAIR_MOVES:
            ni, nj = i + di, j + dj
            if not (0 <= ni < rows and 0 <= nj < cols):
                continue
            step = 0.0 if solid[ni, nj] else 1.0 + (1.0 - densities[ni, nj])
            new_cost = cost + step
            if new_cost < best.get((ni, nj), float("inf")):
                best[(ni, nj)] = new_cost
                parent[(ni, nj)] = (i, j)
                heapq.heappush(heap, (new_cost, (ni, nj)))

    if reached is None:
        return []
    path = [reached]
    while path[-1] in parent:
        path.append(parent[path[-1]])
    return path[::-1]


def repair_load_paths(densities, solid, loads, supports, threshold, symmetric=False):
    """
    Raise cells on the cheapest load path to `threshold`.

    Args:
        densities: Rounded density field (markers hold any value).
        solid: Boolean field of cells that binarize to solid, markers included.
        threshold: Density that binarizes to solid.
        symmetric: Also raise the mirrored path so mirror-symmetric fields stay symmetric.

    Returns:
        (repaired densities, sorted list of raised cells)
    """
    path = cheapest_load_path(densities, solid, loads, supports)
    _, cols = densities.shape
    cells = {(i, j) for (i, j) in path if not solid[i, j]}
    if symmetric:
        cells |= {(i, cols - 1 - j) for (i, j) in cells}

    repaired = densities.copy()
    for i, j in cells:
        repaired[i, j] = max(repaired[i, j], threshold)
    if cells:
        logger.debug("Load-path repair raised %d cells", len(cells))
    return repaired, sorted(cells)


def _floating(material, marker_mask):
    labels, _ = ndimage.label(material, structure=FOUR_CONNECTED)
    near_marker = ndimage.binary_dilation(marker_mask, structure=FOUR_CONNECTED)
    anchored = np.unique(labels[near_marker & material])
    return material & ~np.isin(labels, anchored)


def drop_floating_material(densities, marker_mask, threshold):
    """
    Zero material that no 4-connected chain ties to a load or support.

    Solid clusters (>= threshold) are checked first, then every nonzero cluster,
    so neither the field nor its binarization keeps floating islands.

    Returns:
        (cleaned densities, sorted list of zeroed cells)
    """
    cleaned = densities.copy()
    zeroed = np.zeros(densities.shape, dtype=bool)
    for material in (
        lambda field: (field >= threshold) & ~marker_mask,
        lambda field: (field > 0) & ~marker_mask,
    ):
        floating = _floating(material(cleaned), marker_mask)
        cleaned[floating] = 0.0
        zeroed |= floating
    cells = sorted((int(i), int(j)) for i, j in zip(*np.nonzero(zeroed)))
    if cells:
        logger.debug("Dropped %d floating cells", len(cells))
    return cleaned, cells
