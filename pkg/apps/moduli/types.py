"""
Moduli app domain types: modulus profiles, transfer reports and brackets.
"""
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from apps.core.exceptions import ContractViolation, DomainError

# Rounding allowance when asserting that a profile is nondecreasing
MONOTONE_SLACK = 1e-12


@dataclass(frozen=True, eq=False)
class ModulusProfile:
    """omega(delta) sampled at strictly increasing scales."""

    deltas: np.ndarray
    omegas: np.ndarray

    def __post_init__(self):
        deltas = np.array(self.deltas, dtype=float).reshape(-1)
        omegas = np.array(self.omegas, dtype=float).reshape(-1)
        if deltas.size == 0:
            raise DomainError('profile needs at least one delta')
        if deltas.shape != omegas.shape:
            raise DomainError(f'{deltas.size} deltas but {omegas.size} omegas')
        if not (np.all(deltas > 0) and np.all(np.diff(deltas) > 0)):
            raise DomainError('deltas must be positive and strictly increasing')
        if np.any(omegas < 0):
            raise DomainError('omegas must be nonnegative')
        drops = np.flatnonzero(np.diff(omegas) < -MONOTONE_SLACK)
        if drops.size:
            k = int(drops[0])
            raise ContractViolation(
                f'modulus decreased: omega({deltas[k]!r})={omegas[k]!r} > '
                f'omega({deltas[k + 1]!r})={omegas[k + 1]!r}'
            )
        deltas.setflags(write=False)
        omegas.setflags(write=False)
        object.__setattr__(self, 'deltas', deltas)
        object.__setattr__(self, 'omegas', omegas)

    def __len__(self):
        return self.deltas.size

    def omega_at(self, delta: float) -> Optional[float]:
        """Profiled omega at exactly ``delta``, or None when that scale was not sampled."""
        hits = np.flatnonzero(self.deltas == delta)
        return float(self.omegas[hits[0]]) if hits.size else None

    def rows(self):
        return list(zip(self.deltas.tolist(), self.omegas.tolist()))


class UecEstimate(NamedTuple):
    """omega at the grid mesh together with the dyadic profile it was read from."""

    value: float
    profile: ModulusProfile


@dataclass(frozen=True)
class TransferReport:
    """omega_F(delta) <= 2 * net_radius + omega_net(delta) + tol."""

    delta: float
    omega_family: float
    net_radius: float
    omega_net: float
    tol: float

    @property
    def bound(self) -> float:
        return 2.0 * self.net_radius + self.omega_net

    @property
    def passed(self) -> bool:
        return self.omega_family <= self.bound + self.tol


@dataclass(frozen=True)
class Bracket:
    """Both sides of the Hausdorff-measure bracket for one family."""

    dim: int
    delta: float
    omega_hat: float
    lower: float
    upper: float
    achieved: float
    epsilon: float
    tol: float
    net_size: int
    transfer: TransferReport

    @property
    def passed(self) -> bool:
        return (
            self.achieved <= self.upper + self.epsilon + self.tol
            and self.transfer.passed
        )
