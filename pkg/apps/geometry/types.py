"""
Geometry app domain types: vectors, point sets, balls and Jung reports.
"""
from dataclasses import dataclass

import numpy as np

from apps.core.exceptions import DomainError


def as_vector(coords, dim=None) -> np.ndarray:
    """Validate a coordinate sequence as a finite, read-only float vector."""
    vector = np.array(coords, dtype=float).reshape(-1)
    if vector.size < 1:
        raise DomainError('vector must have at least one coordinate')
    if dim is not None and vector.size != dim:
        raise DomainError(f'dimension mismatch: expected {dim}, got {vector.size}')
    if not np.all(np.isfinite(vector)):
        raise DomainError(f'vector has non-finite coordinates: {vector.tolist()}')
    vector.setflags(write=False)
    return vector


@dataclass(frozen=True, eq=False)
class PointSet:
    """Nonempty finite set of points in R^dim, stored as an (m, dim) array."""

    dim: int
    points: np.ndarray

    def __post_init__(self):
        if int(self.dim) < 1:
            raise DomainError(f'dimension must be positive, got {self.dim}')
        object.__setattr__(self, 'dim', int(self.dim))
        try:
            points = np.array(self.points, dtype=float)
        except ValueError:
            raise DomainError('dimension mismatch among points')
        if points.size == 0:
            raise DomainError('empty point set')
        if points.ndim == 1 and self.dim == 1:
            points = points.reshape(-1, 1)
        if points.ndim != 2 or points.shape[1] != self.dim:
            raise DomainError(
                f'dimension mismatch: points of shape {points.shape} in R^{self.dim}'
            )
        if not np.all(np.isfinite(points)):
            raise DomainError('point set has non-finite coordinates')
        points.setflags(write=False)
        object.__setattr__(self, 'points', points)

    @classmethod
    def from_rows(cls, rows):
        """Build a point set from rows, inferring the dimension from the first row."""
        rows = list(rows)
        if not rows:
            raise DomainError('empty point set')
        lengths = {len(np.atleast_1d(row)) for row in rows}
        if len(lengths) != 1:
            raise DomainError(f'dimension mismatch among points: lengths {sorted(lengths)}')
        return cls(dim=lengths.pop(), points=rows)

    def __len__(self):
        return self.points.shape[0]

    def union(self, other: 'PointSet') -> 'PointSet':
        if other.dim != self.dim:
            raise DomainError(f'dimension mismatch: {self.dim} vs {other.dim}')
        return PointSet(self.dim, np.vstack([self.points, other.points]))

    def unique(self) -> 'PointSet':
        """Exact-equality deduplication, rows in lexicographic order."""
        return PointSet(self.dim, np.unique(self.points, axis=0))


@dataclass(frozen=True, eq=False)
class Ball:
    """Closed ball B*(center, radius)."""

    center: np.ndarray
    radius: float

    def __post_init__(self):
        object.__setattr__(self, 'center', as_vector(self.center))
        radius = float(self.radius)
        if not (np.isfinite(radius) and radius >= 0):
            raise DomainError(f'radius must be finite and nonnegative, got {radius!r}')
        object.__setattr__(self, 'radius', radius)

    @property
    def dim(self) -> int:
        return self.center.size

    def distances(self, ps: PointSet) -> np.ndarray:
        if ps.dim != self.dim:
            raise DomainError(f'dimension mismatch: ball in R^{self.dim}, points in R^{ps.dim}')
        return np.linalg.norm(ps.points - self.center, axis=1)

    def encloses(self, ps: PointSet, tol=0.0) -> bool:
        """True if every point lies within radius * (1 + tol) of the center."""
        return bool(np.all(self.distances(ps) <= self.radius * (1.0 + tol)))


@dataclass(frozen=True)
class JungReport:
    """Diameter, Chebyshev radius and the Jung bounds for one point set."""

    dim: int
    diameter: float
    radius: float
    lower: float
    upper: float
    tol: float

    @property
    def margin(self) -> float:
        """Smallest slack to either bound; negative when a bound is violated."""
        return min(self.radius - self.lower, self.upper - self.radius)

    @property
    def passed(self) -> bool:
        return self.lower - self.tol <= self.radius <= self.upper + self.tol


def ensure_point_set(ps) -> PointSet:
    """Accept a PointSet or anything ``PointSet.from_rows`` understands."""
    if isinstance(ps, PointSet):
        return ps
    return PointSet.from_rows(ps)
