"""
Modulus of continuity omega_F(delta) of a piecewise-linear family, exactly.

On each product of two knot segments |f(x) - f(y)| is convex in (x, y), so
its maximum over {|x - y| <= delta} is attained at a corner of the
constraint region: a pair of knots at most delta apart, or a knot paired
with the point delta away from it (clipped to [a, b]).
"""
import logging

import numpy as np

from apps.core.exceptions import DomainError
from apps.core.workers import ordered_map
from apps.function_space.paths import eval_pl_many
from apps.function_space.types import Family, Grid, SampledPath

from .types import ModulusProfile, UecEstimate
from .windows import range_extremes

logger = logging.getLogger(__name__)


def _knot_pairs_line(f: SampledPath, delta: float) -> float:
    """Largest |v_i - v_j| over knots within delta, N = 1, via window extremes."""
    knots = f.knots
    v = f.values[:, 0]
    stops = np.searchsorted(knots, knots + delta, side='right')
    stops = np.maximum(stops, np.arange(1, knots.size + 1))
    window_max, window_min = range_extremes(v, np.arange(knots.size), stops)
    return float(max(np.max(window_max - v), np.max(v - window_min)))


def _knot_pairs_general(f: SampledPath, delta: float) -> float:
    """Largest |v_i - v_j| over knots within delta, any N, one offset at a time."""
    knots = f.knots
    values = f.values
    stops = np.searchsorted(knots, knots + delta, side='right')
    widest = int(np.max(stops - np.arange(knots.size)))
    best = 0.0
    for offset in range(1, widest):
        close = knots[offset:] - knots[:-offset] <= delta
        if not np.any(close):
            continue
        diff = values[offset:][close] - values[:-offset][close]
        best = max(best, float(np.max(np.linalg.norm(diff, axis=1))))
    return best


def path_modulus(f: SampledPath, delta: float) -> float:
    """sup over |x - y| <= delta of |f(x) - f(y)|."""
    if not delta > 0:
        raise DomainError(f'delta must be positive, got {delta!r}')
    if f.dim == 1:
        best = _knot_pairs_line(f, delta)
    else:
        best = _knot_pairs_general(f, delta)

    # Corners where the band edge meets a knot line
    knots = f.knots
    a, b = f.grid.a, f.grid.b
    ahead = eval_pl_many(f, np.minimum(knots + delta, b))
    behind = eval_pl_many(f, np.maximum(knots - delta, a))
    shifted = max(
        float(np.max(np.linalg.norm(ahead - f.values, axis=1))),
        float(np.max(np.linalg.norm(behind - f.values, axis=1))),
    )
    return max(best, shifted)


def family_modulus(fam: Family, delta: float) -> float:
    """omega_F(delta): the largest path modulus over the members."""
    return max(ordered_map(lambda member: path_modulus(member, delta), fam.members))


def modulus_profile(fam: Family, deltas) -> ModulusProfile:
    deltas = np.asarray(list(deltas), dtype=float).reshape(-1)
    if deltas.size == 0:
        raise DomainError('empty deltas')
    if not np.all(deltas > 0):
        raise DomainError(f'deltas must be positive, got {float(np.min(deltas))!r}')
    if not np.all(np.diff(deltas) > 0):
        raise DomainError('deltas must be sorted strictly ascending')
    omegas = [family_modulus(fam, float(delta)) for delta in deltas]
    return ModulusProfile(deltas, omegas)


def dyadic_deltas(grid: Grid) -> np.ndarray:
    """mesh * 2^k for every such scale below b - a, then b - a itself."""
    span = grid.b - grid.a
    deltas = []
    delta = grid.mesh
    while delta < span:
        deltas.append(delta)
        delta *= 2.0
    deltas.append(span)
    return np.array(deltas)


def mu_uec_estimate(fam: Family) -> UecEstimate:
    """
    omega at the grid mesh, with the dyadic profile it comes from.

    For a finite PL family the true infimum over delta is 0; the mesh-scale
    value is a proxy for the family that was sampled, and the profile is the
    result to read.
    """
    profile = modulus_profile(fam, dyadic_deltas(fam.grid))
    logger.info(
        f'Modulus profile over {len(profile)} scales: omega(mesh)={profile.omegas[0]!r}, '
        f'omega(b-a)={profile.omegas[-1]!r}'
    )
    return UecEstimate(float(profile.omegas[0]), profile)


def plateau_delta(profile: ModulusProfile, tol=1e-9) -> float:
    """Smallest profiled delta whose omega is not exceeded (beyond tol) at the next scale."""
    omegas = profile.omegas
    for k in range(len(profile) - 1):
        if omegas[k + 1] - omegas[k] <= tol:
            return float(profile.deltas[k])
    return float(profile.deltas[-1])
