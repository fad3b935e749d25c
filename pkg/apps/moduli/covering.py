"""
Covering statistics: net radii, which bound the Hausdorff measure from
above, and the equicontinuity transfer behind the lower bound.
"""
import logging

import numpy as np

from apps.core.conf import resolve_tol
from apps.core.exceptions import DomainError
from apps.core.workers import ordered_map
from apps.function_space.paths import sup_distance, uniform_bound
from apps.function_space.types import Family

from .modulus import family_modulus
from .types import TransferReport

logger = logging.getLogger(__name__)


def _check_net(fam: Family, net: Family):
    if net is None or len(net) == 0:
        raise DomainError('empty net')
    if fam.dim != net.dim:
        raise DomainError(f'dimension mismatch: family in R^{fam.dim}, net in R^{net.dim}')
    if not fam.grid.same_interval(net.grid):
        raise DomainError(
            f'family on [{fam.grid.a!r}, {fam.grid.b!r}] but net on [{net.grid.a!r}, {net.grid.b!r}]'
        )


def distance_matrix(fam: Family, net: Family) -> np.ndarray:
    """Exact sup distances, one row per family member and one column per net element."""
    _check_net(fam, net)

    def row(member):
        return [sup_distance(member, g) for g in net.members]

    return np.array(ordered_map(row, fam.members))


def nearest_net_elements(fam: Family, net: Family):
    """Index of, and distance to, the closest net element for every member."""
    distances = distance_matrix(fam, net)
    nearest = np.argmin(distances, axis=1)
    return nearest, distances[np.arange(len(fam)), nearest]


def net_radius(fam: Family, net: Family) -> float:
    """max over members of the distance to the nearest net element; bounds mu_H from above."""
    _, covered = nearest_net_elements(fam, net)
    return float(np.max(covered))


def is_uniformly_bounded(fam: Family, bound: float) -> bool:
    return uniform_bound(fam) <= bound


def equicontinuity_transfer(fam: Family, net: Family, delta: float, tol=None) -> TransferReport:
    """Check omega_F(delta) <= 2 * net_radius(F, net) + omega_net(delta) + tol."""
    tol = resolve_tol(tol)
    report = TransferReport(
        delta=float(delta),
        omega_family=family_modulus(fam, delta),
        net_radius=net_radius(fam, net),
        omega_net=family_modulus(net, delta),
        tol=tol,
    )
    if not report.passed:
        logger.error(
            f'Equicontinuity transfer failed at delta={delta!r}: '
            f'{report.omega_family!r} > {report.bound!r}'
        )
    return report

