"""
Brute-force Chebyshev ball for small point sets.

A minimum enclosing ball in R^N is determined by at most N + 1 boundary
points, so enumerating every subset of that size, taking the smallest ball
through it, and keeping the smallest one that encloses everything is
optimal. Cost is exponential in the point count; it exists to check
``chebyshev_ball``.
"""
import logging
from itertools import combinations

import numpy as np

from apps.core.conf import oracle_max_points
from apps.core.exceptions import ContractViolation

from .meb import IllConditionedSupport, circumball
from .types import Ball, ensure_point_set

logger = logging.getLogger(__name__)

ENCLOSURE_SLACK = 1e-12


def chebyshev_oracle(ps) -> Ball:
    """Minimum enclosing ball by support-subset enumeration."""
    ps = ensure_point_set(ps)
    points = np.unique(ps.points, axis=0)
    m = points.shape[0]
    if m > oracle_max_points():
        logger.warning(f'Oracle asked for {m} points; enumeration cost grows exponentially')

    # Absolute slack, scaled up for large coordinates
    slack = ENCLOSURE_SLACK * max(1.0, float(np.max(np.abs(points))))

    best = None
    for size in range(1, min(ps.dim + 1, m) + 1):
        for subset in combinations(range(m), size):
            try:
                center, r2 = circumball(points[list(subset)])
            except IllConditionedSupport:
                # Affinely degenerate: cannot be a minimal support
                continue
            radius = float(np.sqrt(r2))
            if best is not None and not radius < best[1] - ENCLOSURE_SLACK * (1.0 + best[1]):
                continue
            distances = np.linalg.norm(points - center, axis=1)
            if np.all(distances <= radius + slack):
                best = (center, radius)

    if best is None:
        raise ContractViolation(f'oracle found no enclosing support ball among {m} points')
    return Ball(best[0], best[1])
