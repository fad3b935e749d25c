"""
Canonical test families on [0, 1]: sharpening ramps, a sine sweep and
simplex oscillations.
"""
import logging
import math

import numpy as np

from apps.core.exceptions import DomainError
from apps.function_space.types import Family, Grid
from apps.geometry.shapes import regular_simplex

logger = logging.getLogger(__name__)

KINDS = ('ramp', 'sine_sweep', 'simplex_osc')


def unit_grid(mesh: float) -> Grid:
    """Uniform grid on [0, 1] whose step does not exceed ``mesh``."""
    if not mesh > 0:
        raise DomainError(f'mesh must be positive, got {mesh!r}')
    segments = max(1, math.ceil(1.0 / mesh - 1e-9))
    return Grid.uniform(0.0, 1.0, segments)


def _unresolved(kind, mesh, feature):
    return DomainError(
        f'grid cannot resolve family: {kind} needs mesh < {feature!r}, got {mesh!r}'
    )


def ramp_family(k_max: int, mesh: float) -> Family:
    """Member k is 0 on [0, 1/2] and rises linearly to 1 over width 2^-k."""
    widths = [2.0 ** -k for k in range(1, k_max + 1)]
    if not mesh < widths[-1]:
        raise _unresolved('ramp', mesh, widths[-1])
    grid = unit_grid(mesh)
    x = grid.knots
    values = [np.clip((x - 0.5) / h, 0.0, 1.0)[:, None] for h in widths]
    return Family.from_values(grid, values, [f'ramp-{k}' for k in range(1, k_max + 1)])


def sine_sweep_family(k_max: int, mesh: float) -> Family:
    """x -> sin(t x) for t = 1, 2, 4, ..., 2^k_max."""
    rates = [2.0 ** k for k in range(k_max + 1)]
    quarter = math.pi / (2.0 * rates[-1])
    if not mesh < quarter:
        raise _unresolved('sine_sweep', mesh, quarter)
    grid = unit_grid(mesh)
    values = [np.sin(t * grid.knots)[:, None] for t in rates]
    return Family.from_values(grid, values, [f'sine-{k}' for k in range(k_max + 1)])


def simplex_osc_family(k_max: int, mesh: float, dim: int = 2) -> Family:
    """
    Member k walks the vertices of the unit-side regular simplex in R^dim,
    spending 2^k grid steps on every edge.
    """
    vertices = regular_simplex(dim, 1.0)
    grid = unit_grid(mesh)
    period = (dim + 1) * 2 * (grid.b - grid.a) / (len(grid) - 1)
    if not period <= grid.b - grid.a:
        raise _unresolved('simplex_osc', mesh, (grid.b - grid.a) / (2 * (dim + 1)))
    steps = np.arange(len(grid))
    values = []
    for k in range(1, k_max + 1):
        per_edge = 2 ** k
        edge, offset = np.divmod(steps, per_edge)
        frac = (offset / per_edge)[:, None]
        start = vertices[edge % (dim + 1)]
        stop = vertices[(edge + 1) % (dim + 1)]
        values.append((1.0 - frac) * start + frac * stop)
    return Family.from_values(grid, values, [f'osc-{k}' for k in range(1, k_max + 1)])


def gen_family(kind: str, k_max: int, mesh: float, dim=None) -> Family:
    if kind not in KINDS:
        raise DomainError(f'unknown family kind {kind!r}')
    if k_max < 1:
        raise DomainError(f'k-max must be at least 1, got {k_max}')
    if kind == 'simplex_osc':
        fam = simplex_osc_family(k_max, mesh, dim or 2)
    else:
        if dim not in (None, 1):
            raise DomainError(f'{kind} families are real-valued, got --dim {dim}')
        fam = ramp_family(k_max, mesh) if kind == 'ramp' else sine_sweep_family(k_max, mesh)
    logger.info(f'Generated {kind} family: {len(fam)} members on {len(fam.grid)} knots')
    return fam
