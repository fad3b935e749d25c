"""
Exact metric computations on piecewise-linear paths.

The Euclidean norm of an affine map is convex, so on every segment of a
common refinement the extremes of |f - g| and |f| sit at segment endpoints;
all suprema below are therefore exact maxima over finite knot sets.
"""
import numpy as np

from apps.core.exceptions import DomainError
from apps.geometry.types import PointSet

from .types import Family, Grid, SampledPath


def _check_inside(grid: Grid, xs: np.ndarray):
    outside = (xs < grid.a) | (xs > grid.b)
    if np.any(outside):
        x = float(xs[np.flatnonzero(outside)[0]])
        raise DomainError(f'x={x!r} outside [{grid.a!r}, {grid.b!r}]')


def eval_pl_many(f: SampledPath, xs) -> np.ndarray:
    """Values at every x in ``xs`` as an (len(xs), N) array; knot values are reproduced exactly."""
    xs = np.asarray(xs, dtype=float).reshape(-1)
    _check_inside(f.grid, xs)
    return np.column_stack([np.interp(xs, f.knots, f.values[:, j]) for j in range(f.dim)])


def eval_pl(f: SampledPath, x: float) -> np.ndarray:
    """Linear interpolation on the knot segment containing ``x``."""
    return eval_pl_many(f, [x])[0]


def segment_path(c1, c2, alpha: float = 0.0, beta: float = 1.0) -> SampledPath:
    """Two-knot path x -> ((beta - x) c1 + (x - alpha) c2) / (beta - alpha) on [alpha, beta]."""
    c1 = np.atleast_1d(np.asarray(c1, dtype=float))
    c2 = np.atleast_1d(np.asarray(c2, dtype=float))
    if c1.shape != c2.shape:
        raise DomainError(f'dimension mismatch: {c1.size} vs {c2.size}')
    return SampledPath(Grid([alpha, beta]), np.vstack([c1, c2]))


def _check_comparable(f: SampledPath, g: SampledPath):
    if f.dim != g.dim:
        raise DomainError(f'dimension mismatch: {f.dim} vs {g.dim}')
    if not f.grid.same_interval(g.grid):
        raise DomainError(
            f'paths live on different intervals: [{f.grid.a!r}, {f.grid.b!r}] '
            f'vs [{g.grid.a!r}, {g.grid.b!r}]'
        )


def sup_distance(f: SampledPath, g: SampledPath) -> float:
    """Exact ||f - g||_inf: the maximum of |f - g| over the union of both knot sets."""
    _check_comparable(f, g)
    if f.grid.same_as(g.grid):
        return float(np.max(np.linalg.norm(f.values - g.values, axis=1)))
    knots = np.union1d(f.knots, g.knots)
    diff = eval_pl_many(f, knots) - eval_pl_many(g, knots)
    return float(np.max(np.linalg.norm(diff, axis=1)))


def sup_norm(f: SampledPath) -> float:
    return float(np.max(np.linalg.norm(f.values, axis=1)))


def uniform_bound(fam: Family) -> float:
    """M = max over members and knots of |f(knot)|."""
    return max(sup_norm(member) for member in fam.members)


def image_over_interval(f: SampledPath, lo: float, hi: float) -> PointSet:
    """
    Representative finite image f([lo, hi]): f(lo), f(hi) and every knot value in between.

    Any ball holding these points holds the segments joining them, so the
    Chebyshev ball and diameter of this set are those of the continuous image.
    """
    if lo > hi:
        raise DomainError(f'empty interval: lo={lo!r} > hi={hi!r}')
    _check_inside(f.grid, np.array([lo, hi]))
    start = np.searchsorted(f.knots, lo, side='left')
    stop = np.searchsorted(f.knots, hi, side='right')
    ends = eval_pl_many(f, [lo, hi])
    points = np.vstack([ends[:1], f.values[start:stop], ends[1:]])
    return PointSet(f.dim, np.unique(points, axis=0))


def resample(f: SampledPath, grid: Grid) -> SampledPath:
    """Linear interpolation of ``f`` onto ``grid`` (same interval)."""
    if not f.grid.same_interval(grid):
        raise DomainError(
            f'cannot resample [{f.grid.a!r}, {f.grid.b!r}] onto [{grid.a!r}, {grid.b!r}]'
        )
    if f.grid.same_as(grid):
        return f
    return SampledPath(grid, eval_pl_many(f, grid.knots))


def common_refinement(grids) -> Grid:
    grids = list(grids)
    if not grids:
        raise DomainError('no grids to refine')
    for grid in grids[1:]:
        if not grid.same_interval(grids[0]):
            raise DomainError('grids cover different intervals')
    return Grid(np.unique(np.concatenate([grid.knots for grid in grids])))


def refine_family(paths, labels=()) -> Family:
    """Family of ``paths`` resampled onto the common refinement of their grids."""
    paths = list(paths)
    if not paths:
        raise DomainError('family must have at least one member')
    grid = common_refinement(path.grid for path in paths)
    return Family(grid, tuple(resample(path, grid) for path in paths), tuple(labels))
