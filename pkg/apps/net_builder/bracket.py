"""
The two-sided bracket check: build the certified net at one scale and
compare its covering radius with the bounds implied by the family's modulus.
"""
import logging

from apps.core.conf import resolve_seed, resolve_tol
from apps.core.exceptions import DomainError
from apps.function_space.types import Family
from apps.geometry.jung import jung_factor
from apps.moduli.covering import equicontinuity_transfer, net_radius
from apps.moduli.modulus import family_modulus, mu_uec_estimate, plateau_delta
from apps.moduli.types import Bracket

from .construction import build_net

logger = logging.getLogger(__name__)


def theorem_bracket(fam: Family, epsilon: float, seed=None, delta=None, tol=None) -> Bracket:
    """
    Build the certified net at one scale and place its radius in the bracket.

    alpha is the family's measured omega at ``delta``; without a ``delta``
    the mesh-scale plateau of the dyadic profile is used.
    """
    tol = resolve_tol(tol)
    seed = resolve_seed(seed)
    if not epsilon > 0:
        raise DomainError(f'epsilon must be positive, got {epsilon!r}')

    if delta is None:
        estimate = mu_uec_estimate(fam)
        delta = plateau_delta(estimate.profile, tol)
        logger.info(f'Plateau readout picked delta={delta!r}')
    elif not delta > 0:
        raise DomainError(f'delta must be positive, got {delta!r}')
    alpha = family_modulus(fam, delta)

    result = build_net(fam, delta=delta, alpha=alpha, epsilon=epsilon, seed=seed, tol=tol)
    achieved = net_radius(fam, result.net)
    transfer = equicontinuity_transfer(fam, result.net, delta, tol)

    bracket = Bracket(
        dim=fam.dim,
        delta=float(delta),
        omega_hat=alpha,
        lower=0.5 * alpha,
        upper=jung_factor(fam.dim) * alpha,
        achieved=achieved,
        epsilon=float(epsilon),
        tol=tol,
        net_size=len(result.net),
        transfer=transfer,
    )
    logger.info(
        f'Bracket at delta={delta!r}: [{bracket.lower!r}, {bracket.upper!r}], '
        f'achieved {achieved!r} with {bracket.net_size} net elements'
    )
    return bracket
