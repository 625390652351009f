"""
Optimality-criteria density update.
Log-space bisection on the volume multiplier with per-element move limits.
"""

import logging
import math

import numpy as np

from .exceptions import BisectionFailure

logger = logging.getLogger(__name__)

VOLUME_TOLERANCE = 1e-4
MAX_BISECTIONS = 200


def oc_update(rho, sensitivities, target, *, move=0.2, min_density=1e-3, damping=0.5,
              tolerance=VOLUME_TOLERANCE):
    """
    One optimality-criteria step.

    Args:
        rho: Current density field.
        sensitivities: Compliance sensitivities (non-positive) for the current iterate.
        target: Volume fraction the updated field must average to.
        move: Largest change allowed per element.
        min_density: Lower density bound.

    Returns:
        np.ndarray: updated field with mean within `tolerance` of `target`.

    Raises:
        BisectionFailure: target unreachable within the move limits or bisection stalled.
    """
    rho = np.asarray(rho, dtype=float)
    lower = np.maximum(min_density, rho - move)
    upper = np.minimum(1.0, rho + move)
    if not lower.mean() - tolerance <= target <= upper.mean() + tolerance:
        raise BisectionFailure(
            f"Target {target} outside reachable range [{lower.mean():.6f}, {upper.mean():.6f}]"
        )

    scaled = rho * np.maximum(-np.asarray(sensitivities, dtype=float), 0.0) ** damping

    def candidate(multiplier):
        return np.clip(scaled / multiplier**damping, lower, upper)

    lo, hi = 1e-40, 1e40
    updated = candidate(math.sqrt(lo * hi))
    for _ in range(MAX_BISECTIONS):
        mid = math.sqrt(lo * hi)
        updated = candidate(mid)
        volume = updated.mean()
        if abs(volume - target) <= tolerance * 1e-2:
            break
        if volume > target:
            lo = mid
        else:
            hi = mid

    if abs(updated.mean() - target) > tolerance:
        raise BisectionFailure(
            f"Multiplier bisection ended at volume {updated.mean():.6f}, target {target}"
        )
    return updated
