"""
Diameter and Jung's inequality r/diam in [1/2, sqrt(N / (2N + 2))].
"""
import math

import numpy as np
from scipy.spatial.distance import pdist

from apps.core.conf import resolve_tol

from .meb import chebyshev_ball
from .types import JungReport, ensure_point_set


def jung_factor(dim: int) -> float:
    """Upper Jung constant sqrt(N / (2N + 2))."""
    return math.sqrt(dim / (2.0 * dim + 2.0))


def diameter(ps) -> float:
    """Largest pairwise Euclidean distance (exact O(m^2) scan); 0 for a singleton."""
    ps = ensure_point_set(ps)
    if len(ps) < 2:
        return 0.0
    return float(np.max(pdist(ps.points)))


def jung_report(ps, tol=None, seed=None) -> JungReport:
    ps = ensure_point_set(ps)
    tol = resolve_tol(tol)
    diam = diameter(ps)
    ball = chebyshev_ball(ps, tol=tol, seed=seed)
    return JungReport(
        dim=ps.dim,
        diameter=diam,
        radius=ball.radius,
        lower=0.5 * diam,
        upper=jung_factor(ps.dim) * diam,
        tol=tol,
    )
