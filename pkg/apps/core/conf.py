"""
Lazy access to toolkit settings.

Settings are read at call time so tests can override them with
``override_settings``.
"""
from django.conf import settings

from .exceptions import DomainError


def default_tol() -> float:
    return float(settings.NCK_TOL)


def default_seed() -> int:
    return int(settings.NCK_SEED)


def resolve_tol(tol) -> float:
    """Return ``tol`` or the configured default, rejecting non-positive values."""
    if tol is None:
        return default_tol()
    tol = float(tol)
    if not tol > 0:
        raise DomainError(f'tolerance must be positive, got {tol!r}')
    return tol


def resolve_seed(seed) -> int:
    return default_seed() if seed is None else int(seed)


def worker_count() -> int:
    return max(1, int(settings.NCK_WORKERS))


def welzl_max_dim() -> int:
    return int(settings.NCK_WELZL_MAX_DIM)


def max_dim() -> int:
    return int(settings.NCK_MAX_DIM)


def condition_limit() -> float:
    return float(settings.NCK_CONDITION_LIMIT)


def coreset_max_iter() -> int:
    return int(settings.NCK_CORESET_MAX_ITER)


def oracle_max_points() -> int:
    return int(settings.NCK_ORACLE_MAX_POINTS)
