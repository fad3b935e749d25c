"""
Reference configurations used by checks and generators.
"""
import numpy as np

from apps.core.exceptions import DomainError


def regular_simplex(dim: int, side: float = 1.0) -> np.ndarray:
    """
    Vertices of a regular ``dim``-simplex with edge ``side``, centred at the origin of R^dim.

    Built from the scaled standard basis of R^(dim+1), whose points are
    pairwise ``side`` apart, projected onto an orthonormal basis of the
    hyperplane they span.
    """
    if dim < 1:
        raise DomainError(f'simplex dimension must be positive, got {dim}')
    if not side > 0:
        raise DomainError(f'simplex side must be positive, got {side!r}')
    vertices = np.eye(dim + 1) * (side / np.sqrt(2.0))
    centred = vertices - vertices.mean(axis=0)
    _, _, basis = np.linalg.svd(centred)
    return centred @ basis[:dim].T
