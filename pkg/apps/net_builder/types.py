"""
Net builder app domain types: partitions, Chebyshev profiles, lattices,
per-member certificates and the assembled net.
"""
import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from apps.core.exceptions import DomainError, QuantizationRangeError
from apps.function_space.types import Family, Grid


class Interval(NamedTuple):
    lo: float
    hi: float
    lo_closed: bool
    hi_closed: bool

    @property
    def diameter(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True, eq=False)
class Partition:
    """
    Points a = x_0 < x_1 < ... < x_{2n+1} = b with overlapping intervals
    I_0 = [x_0, x_2), I_k = (x_{2k-1}, x_{2k+2}) and I_n = (x_{2n-1}, x_{2n+1}].
    """

    points: np.ndarray

    def __post_init__(self):
        points = np.array(self.points, dtype=float).reshape(-1)
        if points.size < 4 or points.size % 2:
            raise DomainError(f'partition needs 2n + 2 >= 4 points, got {points.size}')
        if not np.all(np.diff(points) > 0):
            raise DomainError('partition points must be strictly increasing')
        points.setflags(write=False)
        object.__setattr__(self, 'points', points)

    @property
    def n(self) -> int:
        return self.points.size // 2 - 1

    @cached_property
    def grid(self) -> Grid:
        return Grid(self.points)

    def interval(self, k: int) -> Interval:
        if not 0 <= k <= self.n:
            raise DomainError(f'interval index {k} outside 0..{self.n}')
        x = self.points
        lo = x[0] if k == 0 else x[2 * k - 1]
        hi = x[-1] if k == self.n else x[2 * k + 2]
        return Interval(float(lo), float(hi), k == 0, k == self.n)

    @property
    def intervals(self) -> list:
        return [self.interval(k) for k in range(self.n + 1)]

    def closures(self):
        """Closed interval ends as two arrays (lows, highs)."""
        x = self.points
        n = self.n
        lows = np.concatenate([[x[0]], x[1:2 * n:2]])
        highs = np.concatenate([x[2:2 * n + 1:2], [x[-1]]])
        return lows, highs

    @property
    def max_diameter(self) -> float:
        lows, highs = self.closures()
        return float(np.max(highs - lows))


@dataclass(frozen=True, eq=False)
class ChebyshevProfile:
    """Chebyshev centers, radii and image diameters of f over each I_k."""

    centers: np.ndarray
    radii: np.ndarray
    diameters: np.ndarray

    def __len__(self):
        return self.centers.shape[0]


@dataclass(frozen=True)
class Lattice:
    """
    Cubic lattice spacing * Z^N, read lazily.

    With spacing 2 eps / sqrt(N) the half-diagonal of a cell is eps, so every
    z in the covered ball has a lattice point within eps.
    """

    spacing: float
    bound: float
    dim: int

    @classmethod
    def for_epsilon(cls, epsilon: float, bound: float, dim: int) -> 'Lattice':
        if not epsilon > 0:
            raise DomainError(f'epsilon must be positive, got {epsilon!r}')
        # A zero bound (constant zero family) still needs a nondegenerate box
        return cls(spacing=2.0 * epsilon / math.sqrt(dim), bound=max(bound, epsilon), dim=dim)

    @property
    def epsilon(self) -> float:
        return 0.5 * self.spacing * math.sqrt(self.dim)

    def snap(self, values: np.ndarray, tol=0.0) -> np.ndarray:
        """Nearest lattice point per coordinate, ties toward -infinity."""
        values = np.asarray(values, dtype=float)
        norms = np.linalg.norm(values.reshape(-1, self.dim), axis=1)
        worst = int(np.argmax(norms))
        if norms[worst] > self.bound + tol:
            raise QuantizationRangeError(float(norms[worst]), self.bound)
        # Adding 0.0 turns -0.0 into 0.0
        return np.ceil(values / self.spacing - 0.5) * self.spacing + 0.0


@dataclass(frozen=True)
class MemberCertificate:
    """Error budget of one member against its net element."""

    member_id: str
    net_index: int
    plateau_err: float
    quant_err: float
    total: float
    plateau_bound: float
    epsilon: float
    max_image_diameter: float
    tol: float

    @property
    def bound(self) -> float:
        return self.plateau_bound + self.epsilon

    @property
    def passed(self) -> bool:
        return (
            self.plateau_err <= self.plateau_bound + self.tol
            and self.quant_err <= self.epsilon + self.tol
            and self.total <= self.bound + self.tol
        )


@dataclass(frozen=True, eq=False)
class NetResult:
    """The finite net, the objects it was built from and one certificate per member."""

    net: Family
    partition: Partition
    lattice: Lattice
    certificates: tuple
    delta: float
    alpha: float
    epsilon: float

    @property
    def passed(self) -> bool:
        return all(certificate.passed for certificate in self.certificates)
