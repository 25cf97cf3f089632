"""
Continuous-time classical random walks.

The state evolves as ``P(t) = expm(t H) P(0)`` for a symmetric generator
``H`` whose columns sum to zero.  Every function that takes a generator
also accepts a precomputed :class:`~cayleywalk.linalg.SpectralDecomposition`,
which is the cheap path for time sweeps.
"""

from __future__ import annotations

import enum
from typing import Sequence, Union

import numpy as np

from .errors import ConventionMismatchError, DimensionError, DomainError
from .graphs import Graph, is_regular
from .linalg import SpectralDecomposition, hermitian_eigendecomposition, kron_all, kron_sum

__all__ = [
    "GeneratorConvention",
    "generator",
    "spectral",
    "evolve",
    "trajectory",
    "evolve_product",
    "simple_walk_matrix",
    "lazy_walk_matrix",
    "stationarity_gap",
    "point_mass",
    "uniform",
]

GeneratorLike = Union[np.ndarray, SpectralDecomposition]


class GeneratorConvention(enum.Enum):
    """How a graph is turned into a Kolmogorov generator.

    NORMALIZED_LAPLACIAN
        ``A / k - I`` on a k-regular graph.
    COMBINATORIAL_LAPLACIAN
        ``A - D`` with ``D`` the degree matrix; any graph.
    PRODUCT_NORMALIZED
        Kronecker sum of the factor generators ``A_i / k_i - I``; the generator
        behind every worked product example (hypercube, charter, ...).  Equal
        to NORMALIZED_LAPLACIAN on an atomic graph.
    """

    NORMALIZED_LAPLACIAN = "normalized"
    COMBINATORIAL_LAPLACIAN = "laplacian"
    PRODUCT_NORMALIZED = "product-normalized"


def _normalized(g: Graph) -> np.ndarray:
    k = is_regular(g)
    if k is None:
        raise ConventionMismatchError("normalized Laplacian requires a regular graph")
    if k == 0:
        raise ConventionMismatchError("normalized Laplacian undefined on a graph with degree 0")
    return g.adjacency / k - np.eye(g.vertex_count)


def generator(g: Graph, conv: GeneratorConvention = GeneratorConvention.NORMALIZED_LAPLACIAN) -> np.ndarray:
    """Real symmetric generator of `g` with zero column sums."""
    conv = GeneratorConvention(conv)
    if conv is GeneratorConvention.COMBINATORIAL_LAPLACIAN:
        return g.adjacency - np.diag(g.adjacency.sum(axis=1))
    if conv is GeneratorConvention.NORMALIZED_LAPLACIAN:
        return _normalized(g)
    return kron_sum([_normalized(a) for a in g.atoms()])


def spectral(h: GeneratorLike) -> SpectralDecomposition:
    if isinstance(h, SpectralDecomposition):
        return h
    return hermitian_eigendecomposition(h)


def point_mass(n: int, vertex: int = 0) -> np.ndarray:
    if not 0 <= vertex < n:
        raise DimensionError(f"vertex {vertex} out of range for {n} vertices")
    p = np.zeros(n)
    p[vertex] = 1.0
    return p


def uniform(n: int) -> np.ndarray:
    return np.full(n, 1.0 / n)


def _clean(p: np.ndarray) -> np.ndarray:
    # round-off from the eigensolver must not reach TV computations
    p = np.where(p < 0.0, 0.0, p)
    total = p.sum(axis=-1, keepdims=True)
    return p / total


def trajectory(h: GeneratorLike, p0, times) -> np.ndarray:
    """Distributions at every time in `times`, shape ``(len(times), n)``."""
    decomp = spectral(h)
    p0 = np.asarray(p0, dtype=float)
    if p0.shape != (decomp.dim,):
        raise DimensionError(f"initial distribution of shape {p0.shape} vs generator of dim {decomp.dim}")
    times = np.atleast_1d(np.asarray(times, dtype=float))
    if np.any(times < 0):
        raise DomainError("classical evolution needs t >= 0")
    coeffs = decomp.coefficients(p0)
    decay = np.exp(np.outer(times, decomp.eigenvalues))
    out = _clean(((decay * coeffs) @ decomp.eigenvectors.T).real)
    out[times == 0.0] = p0
    return out


def evolve(h: GeneratorLike, p0, t: float) -> np.ndarray:
    """``expm(t H) @ p0`` for ``t >= 0``."""
    if t < 0:
        raise DomainError(f"classical evolution needs t >= 0, got {t}")
    return trajectory(h, p0, [t])[0]


def evolve_product(factors: Sequence[tuple[GeneratorLike, Sequence[float]]], t: float) -> np.ndarray:
    """Evolve each factor independently and take the tensor product.

    This equals :func:`evolve` on the Kronecker-sum generator started from
    the tensor product of the factor distributions.
    """
    if len(factors) == 0:
        raise DimensionError("evolve_product needs at least one factor")
    return kron_all([evolve(h, p, t) for h, p in factors])


def _check_walkable(g: Graph) -> int:
    k = is_regular(g)
    if k is None or k == 0:
        raise ConventionMismatchError("discrete-time walk matrices require a regular graph of positive degree")
    return k


def simple_walk_matrix(g: Graph) -> np.ndarray:
    """``A / k``: move to a uniformly chosen neighbour."""
    return g.adjacency / _check_walkable(g)


def lazy_walk_matrix(g: Graph) -> np.ndarray:
    """``I/2 + A/(2k)``: stay put or move, each with probability 1/2."""
    return 0.5 * np.eye(g.vertex_count) + 0.5 * simple_walk_matrix(g)


def stationarity_gap(h: GeneratorLike, p0, t: float) -> float:
    """Total variation (plain L1 sum) between ``evolve(h, p0, t)`` and uniform."""
    p = evolve(h, p0, t)
    return float(np.abs(p - 1.0 / p.size).sum())
