"""
Function space app domain types: grids, piecewise-linear paths and families.
"""
from dataclasses import dataclass, field

import numpy as np

from apps.core.exceptions import DomainError


@dataclass(frozen=True, eq=False)
class Grid:
    """Strictly increasing knots a = t_0 < ... < t_m = b."""

    knots: np.ndarray

    def __post_init__(self):
        knots = np.array(self.knots, dtype=float).reshape(-1)
        if knots.size < 2:
            raise DomainError(f'grid needs at least 2 knots, got {knots.size}')
        if not np.all(np.isfinite(knots)):
            raise DomainError('grid has non-finite knots')
        gaps = np.diff(knots)
        if not np.all(gaps > 0):
            first = int(np.flatnonzero(gaps <= 0)[0])
            raise DomainError(
                f'knots must be strictly increasing: t[{first}]={knots[first]!r}, '
                f't[{first + 1}]={knots[first + 1]!r}'
            )
        knots.setflags(write=False)
        object.__setattr__(self, 'knots', knots)

    @classmethod
    def uniform(cls, a: float, b: float, segments: int) -> 'Grid':
        if not a < b:
            raise DomainError(f'interval must satisfy a < b, got [{a!r}, {b!r}]')
        if segments < 1:
            raise DomainError(f'grid needs at least one segment, got {segments}')
        return cls(np.linspace(a, b, int(segments) + 1))

    @property
    def a(self) -> float:
        return float(self.knots[0])

    @property
    def b(self) -> float:
        return float(self.knots[-1])

    @property
    def mesh(self) -> float:
        """Largest gap between adjacent knots."""
        return float(np.max(np.diff(self.knots)))

    def __len__(self):
        return self.knots.size

    def same_as(self, other: 'Grid') -> bool:
        return self is other or np.array_equal(self.knots, other.knots)

    def same_interval(self, other: 'Grid') -> bool:
        return self.a == other.a and self.b == other.b

    def contains(self, x: float) -> bool:
        return self.a <= x <= self.b


@dataclass(frozen=True, eq=False)
class SampledPath:
    """Continuous piecewise-linear map [a, b] -> R^N through (knot, value) pairs."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim == 1:
            values = values.reshape(-1, 1)
        if values.ndim != 2 or values.shape[0] != len(self.grid):
            raise DomainError(
                f'path needs one value per knot: {len(self.grid)} knots, values of shape {values.shape}'
            )
        if values.shape[1] < 1:
            raise DomainError('path values must have at least one coordinate')
        if not np.all(np.isfinite(values)):
            raise DomainError('path has non-finite values')
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    @property
    def dim(self) -> int:
        return self.values.shape[1]

    @property
    def knots(self) -> np.ndarray:
        return self.grid.knots


@dataclass(frozen=True, eq=False)
class Family:
    """Nonempty collection of paths sharing one grid and dimension."""

    grid: Grid
    members: tuple
    labels: tuple = field(default=())

    def __post_init__(self):
        members = tuple(self.members)
        if not members:
            raise DomainError('family must have at least one member')
        dim = members[0].dim
        for i, member in enumerate(members):
            if not member.grid.same_as(self.grid):
                raise DomainError(f'member {i} is not on the family grid')
            if member.dim != dim:
                raise DomainError(f'member {i} has dimension {member.dim}, expected {dim}')
        labels = tuple(str(label) for label in self.labels) or tuple(
            f'f{i}' for i in range(len(members))
        )
        if len(labels) != len(members):
            raise DomainError(f'{len(labels)} labels for {len(members)} members')
        if len(set(labels)) != len(labels):
            raise DomainError('member labels must be unique')
        object.__setattr__(self, 'members', members)
        object.__setattr__(self, 'labels', labels)

    @classmethod
    def from_values(cls, grid: Grid, values, labels=()) -> 'Family':
        return cls(grid, tuple(SampledPath(grid, v) for v in values), tuple(labels))

    @property
    def dim(self) -> int:
        return self.members[0].dim

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def subset(self, indices) -> 'Family':
        indices = list(indices)
        return Family(
            self.grid,
            tuple(self.members[i] for i in indices),
            tuple(self.labels[i] for i in indices),
        )

    def stacked(self) -> np.ndarray:
        """Values of all members as one (members, knots, dim) array."""
        return np.stack([member.values for member in self.members])

    def member_records(self) -> list:
        """Members as ``{'id': label, 'values': array}`` records for serialization."""
        return [
            {'id': label, 'values': member.values}
            for label, member in zip(self.labels, self.members)
        ]
