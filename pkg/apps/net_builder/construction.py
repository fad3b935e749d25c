"""
Construction of a certified finite net for a family of paths.

Per member: Chebyshev centers of f over each partition interval, the plateau
interpolant through them (constant on even segments, an affine bridge on odd
ones), and its lattice rounding. Only the lattice tuples members actually
realise are emitted.
"""
import logging

import numpy as np

from apps.core.conf import resolve_seed, resolve_tol
from apps.core.exceptions import AlphaTooSmallError, DomainError
from apps.core.workers import ordered_map
from apps.function_space.paths import image_over_interval, sup_distance, uniform_bound
from apps.function_space.types import Family, SampledPath
from apps.geometry.jung import diameter, jung_factor
from apps.geometry.meb import chebyshev_ball
from apps.moduli.modulus import family_modulus
from apps.moduli.windows import range_extremes

from .partition import build_partition
from .types import ChebyshevProfile, Lattice, MemberCertificate, NetResult, Partition

logger = logging.getLogger(__name__)


def _line_profile(f: SampledPath, part: Partition) -> ChebyshevProfile:
    """N = 1: the center of each image is the midpoint of its min and max."""
    lows, highs = part.closures()
    knots = f.knots
    v = f.values[:, 0]
    ends_lo = np.interp(lows, knots, v)
    ends_hi = np.interp(highs, knots, v)
    top = np.maximum(ends_lo, ends_hi)
    bottom = np.minimum(ends_lo, ends_hi)

    starts = np.searchsorted(knots, lows, side='left')
    stops = np.searchsorted(knots, highs, side='right')
    inside = stops > starts
    if np.any(inside):
        range_max, range_min = range_extremes(v, starts[inside], stops[inside])
        top[inside] = np.maximum(top[inside], range_max)
        bottom[inside] = np.minimum(bottom[inside], range_min)

    return ChebyshevProfile(
        centers=(0.5 * (bottom + top)).reshape(-1, 1),
        radii=0.5 * (top - bottom),
        diameters=top - bottom,
    )


def chebyshev_profile(f: SampledPath, part: Partition, tol=None, seed=None) -> ChebyshevProfile:
    """Chebyshev ball of f over the closure of every partition interval."""
    if not f.grid.same_interval(part.grid):
        raise DomainError(
            f'path on [{f.grid.a!r}, {f.grid.b!r}] but partition on '
            f'[{part.grid.a!r}, {part.grid.b!r}]'
        )
    if f.dim == 1:
        return _line_profile(f, part)

    tol = resolve_tol(tol)
    centers, radii, diameters = [], [], []
    for lo, hi in zip(*part.closures()):
        image = image_over_interval(f, lo, hi)
        ball = chebyshev_ball(image, tol=tol, seed=seed)
        centers.append(ball.center)
        radii.append(ball.radius)
        diameters.append(diameter(image))
    return ChebyshevProfile(np.array(centers), np.array(radii), np.array(diameters))


def plateau_interpolant(profile: ChebyshevProfile, part: Partition) -> SampledPath:
    """c_k at x_{2k} and x_{2k+1}; linear bridges between plateaus come from interpolation."""
    if len(profile) != part.n + 1:
        raise DomainError(
            f'profile has {len(profile)} centers, partition needs {part.n + 1}'
        )
    return SampledPath(part.grid, np.repeat(profile.centers, 2, axis=0))


def quantize_path(ftilde: SampledPath, lat: Lattice, tol=0.0) -> SampledPath:
    """Round every knot value to the lattice; the sup error is then at most epsilon."""
    if ftilde.dim != lat.dim:
        raise DomainError(f'dimension mismatch: path in R^{ftilde.dim}, lattice in R^{lat.dim}')
    return SampledPath(ftilde.grid, lat.snap(ftilde.values, tol=tol))


def build_net(fam: Family, delta: float, alpha: float, epsilon: float, seed=None, tol=None) -> NetResult:
    """
    Certified net: every member f gets an element L with
    ||L - f|| <= sqrt(N / (2N + 2)) * alpha + epsilon.
    """
    tol = resolve_tol(tol)
    seed = resolve_seed(seed)
    if not delta > 0:
        raise DomainError(f'delta must be positive, got {delta!r}')
    if not epsilon > 0:
        raise DomainError(f'epsilon must be positive, got {epsilon!r}')
    if not alpha >= 0:
        raise DomainError(f'alpha must be nonnegative, got {alpha!r}')

    omega = family_modulus(fam, delta)
    if omega > alpha + tol:
        raise AlphaTooSmallError(omega, alpha, delta)
    bound = uniform_bound(fam)
    if alpha > 2.0 * bound + tol:
        raise DomainError(f'alpha={alpha!r} exceeds twice the uniform bound {bound!r}')

    part = build_partition(fam.grid.a, fam.grid.b, delta)
    lattice = Lattice.for_epsilon(epsilon, 3.0 * bound, fam.dim)
    plateau_bound = jung_factor(fam.dim) * alpha
    logger.info(
        f'Building net for {len(fam)} members: delta={delta!r}, alpha={alpha!r}, '
        f'epsilon={epsilon!r}, n={part.n}, lattice spacing {lattice.spacing!r}'
    )

    def approximate(member):
        profile = chebyshev_profile(member, part, tol=tol, seed=seed)
        ftilde = plateau_interpolant(profile, part)
        element = quantize_path(ftilde, lattice, tol=tol)
        return profile, ftilde, element

    pieces = ordered_map(approximate, fam.members)

    # Deterministic merge: first appearance of each realised tuple
    elements = []
    index_of = {}
    certificates = []
    for label, member, (profile, ftilde, element) in zip(fam.labels, fam.members, pieces):
        key = element.values.tobytes()
        if key not in index_of:
            index_of[key] = len(elements)
            elements.append(element)
        certificate = MemberCertificate(
            member_id=label,
            net_index=index_of[key],
            plateau_err=sup_distance(ftilde, member),
            quant_err=sup_distance(element, ftilde),
            total=sup_distance(element, member),
            plateau_bound=plateau_bound,
            epsilon=float(epsilon),
            max_image_diameter=float(np.max(profile.diameters)),
            tol=tol,
        )
        if not certificate.passed:
            logger.error(
                f'Certificate failed for {label}: plateau {certificate.plateau_err!r}, '
                f'quantization {certificate.quant_err!r}, total {certificate.total!r} '
                f'> bound {certificate.bound!r}'
            )
        certificates.append(certificate)

    net = Family(part.grid, tuple(elements), tuple(f'L{i}' for i in range(len(elements))))
    logger.info(f'Net has {len(net)} elements for {len(fam)} members')
    return NetResult(
        net=net,
        partition=part,
        lattice=lattice,
        certificates=tuple(certificates),
        delta=float(delta),
        alpha=float(alpha),
        epsilon=float(epsilon),
    )
