"""
Chebyshev (minimum enclosing) ball of a finite point set in R^N.

The primary solver is the move-to-front recursion over support sets with a
seeded random initial order. When a support system is too ill-conditioned,
or the recursion's answer fails its own enclosure check, the solver falls
back to the core-set iteration followed by a minimax polish.
"""
import logging
import math

import numpy as np
from scipy.optimize import minimize

from apps.core.conf import (
    condition_limit,
    coreset_max_iter,
    max_dim,
    resolve_seed,
    resolve_tol,
    welzl_max_dim,
)
from apps.core.exceptions import DomainError

from .types import Ball, ensure_point_set

logger = logging.getLogger(__name__)

# Relative slack for "inside the current ball" during the recursion
INSIDE_SLACK = 1e-12


class IllConditionedSupport(Exception):
    """A support system is too close to affinely dependent to solve reliably."""

    def __init__(self, size, condition):
        self.size = size
        self.condition = condition
        super().__init__(f'support of {size} points has condition estimate {condition:.3g}')


def circumball(support: np.ndarray, limit=None):
    """
    Smallest ball having every row of ``support`` on its boundary.

    The center lies in the affine hull of the rows, which must be affinely
    independent. Returns ``(center, squared_radius)``.
    """
    origin = support[0]
    if len(support) == 1:
        return origin.copy(), 0.0
    edges = support[1:] - origin
    gram = edges @ edges.T
    limit = condition_limit() if limit is None else limit
    condition = np.linalg.cond(gram)
    if not condition <= limit:
        raise IllConditionedSupport(len(support), condition)
    try:
        weights = np.linalg.solve(gram, 0.5 * np.einsum('ij,ij->i', edges, edges))
    except np.linalg.LinAlgError:
        raise IllConditionedSupport(len(support), math.inf)
    offset = weights @ edges
    return origin + offset, float(offset @ offset)


def _move_to_front(points, order, end, support, limit):
    """Ball of ``order[:end]`` with ``support`` on the boundary; reorders ``order`` in place."""
    if support:
        center, r2 = circumball(points[support], limit)
    else:
        center, r2 = None, -1.0
    if len(support) == points.shape[1] + 1:
        return center, r2

    i = 0
    while i < end:
        if center is None:
            j = i
        else:
            diff = points[order[i:end]] - center
            d2 = np.einsum('ij,ij->i', diff, diff)
            outside = np.flatnonzero(d2 > r2 * (1.0 + INSIDE_SLACK) ** 2)
            if outside.size == 0:
                break
            j = i + int(outside[0])
        p = int(order[j])
        center, r2 = _move_to_front(points, order, j, support + [p], limit)
        # Move the new support point to the front of the list
        order[1:j + 1] = order[0:j].copy()
        order[0] = p
        i = j + 1
    return center, r2


def welzl_center(points: np.ndarray, seed=0, limit=None):
    """Move-to-front solve; returns ``(center, radius)`` of the support ball."""
    rng = np.random.default_rng(seed)
    order = rng.permutation(points.shape[0])
    center, r2 = _move_to_front(points, order, points.shape[0], [], limit)
    return center, math.sqrt(max(r2, 0.0))


def coreset_center(points: np.ndarray, tol: float, max_iter=None) -> np.ndarray:
    """
    Core-set iteration c <- c + (p_far - c) / (k + 1), then a minimax polish.

    The iteration stops when the best radius changes by less than ``tol``
    (relative) over a window of steps or at the iteration cap. The polish
    minimises t subject to |p - c|^2 <= t with SLSQP, started at the best
    iterate; whichever center has the smaller true radius is returned.
    """
    max_iter = coreset_max_iter() if max_iter is None else max_iter
    center = points[0].copy()
    best_center = center.copy()
    best_radius = math.inf
    window_start = math.inf

    for k in range(1, max_iter + 1):
        distances = np.linalg.norm(points - center, axis=1)
        far = int(np.argmax(distances))
        if distances[far] < best_radius:
            best_radius = float(distances[far])
            best_center = center.copy()
        if k % 100 == 0:
            if abs(window_start - best_radius) <= tol * best_radius:
                break
            window_start = best_radius
        center = center + (points[far] - center) / (k + 1)

    dim = points.shape[1]

    def objective(z):
        return z[dim]

    def objective_grad(z):
        grad = np.zeros_like(z)
        grad[dim] = 1.0
        return grad

    def slack(z):
        diff = points - z[:dim]
        return z[dim] - np.einsum('ij,ij->i', diff, diff)

    def slack_jac(z):
        jac = np.empty((points.shape[0], dim + 1))
        jac[:, :dim] = 2.0 * (points - z[:dim])
        jac[:, dim] = 1.0
        return jac

    start = np.append(best_center, best_radius ** 2)
    result = minimize(
        objective, start, jac=objective_grad, method='SLSQP',
        constraints=[{'type': 'ineq', 'fun': slack, 'jac': slack_jac}],
        options={'ftol': 1e-16, 'maxiter': 500},
    )
    if np.all(np.isfinite(result.x)):
        polished = result.x[:dim]
        polished_radius = float(np.max(np.linalg.norm(points - polished, axis=1)))
        if polished_radius < best_radius:
            return polished
    return best_center


def chebyshev_ball(ps, tol=None, seed=None) -> Ball:
    """
    Chebyshev center and radius of a finite point set.

    Every point lies within the returned radius of the returned center (the
    radius is the true maximum distance), and the radius exceeds the minimum
    enclosing radius by at most a factor (1 + tol).
    """
    ps = ensure_point_set(ps)
    tol = resolve_tol(tol)
    seed = resolve_seed(seed)
    if ps.dim > max_dim():
        raise DomainError(f'dimension {ps.dim} exceeds the supported maximum {max_dim()}')

    points = np.unique(ps.points, axis=0)
    if points.shape[0] == 1:
        return Ball(points[0], 0.0)

    if ps.dim == 1:
        lo, hi = points[0, 0], points[-1, 0]
        return Ball([0.5 * (lo + hi)], 0.5 * (hi - lo))

    center = None
    if ps.dim <= welzl_max_dim():
        try:
            center, support_radius = welzl_center(points, seed=seed)
        except IllConditionedSupport as e:
            logger.warning(f'Move-to-front solve abandoned ({e}); using core-set fallback')
        else:
            radius = float(np.max(np.linalg.norm(points - center, axis=1)))
            if radius > support_radius * (1.0 + tol):
                logger.warning(
                    f'Move-to-front ball misses a point (radius {radius!r} vs support '
                    f'{support_radius!r}); using core-set fallback'
                )
                center = None

    if center is None:
        center = coreset_center(points, tol)

    radius = float(np.max(np.linalg.norm(points - center, axis=1)))
    logger.debug(f'Chebyshev ball of {points.shape[0]} points in R^{ps.dim}: radius {radius!r}')
    return Ball(center, radius)
