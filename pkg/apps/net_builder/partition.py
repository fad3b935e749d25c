"""
Uniform admissible partitions: every I_k shorter than delta.
"""
import math

import numpy as np

from apps.core.exceptions import DomainError

from .types import Partition


def build_partition(a: float, b: float, delta: float) -> Partition:
    """
    Uniform points with step h = (b - a) / (2n + 1) and n >= 1 minimal with 3h < delta.

    Middle intervals span three steps and the end intervals two, so every
    interval diameter is at most 3h < delta.
    """
    if not a < b:
        raise DomainError(f'interval must satisfy a < b, got [{a!r}, {b!r}]')
    if not delta > 0:
        raise DomainError(f'delta must be positive, got {delta!r}')

    segments = max(3, math.floor(3.0 * (b - a) / delta) + 1)
    if segments % 2 == 0:
        segments += 1
    # Guard against rounding in the quotient
    while 3.0 * (b - a) / segments >= delta:
        segments += 2
    return Partition(np.linspace(a, b, segments + 1))
