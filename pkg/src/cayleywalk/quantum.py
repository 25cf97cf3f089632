"""
Continuous-time quantum walks, ``|psi_t> = expm(-i H t) |psi_0>`` with hbar = 1.

The propagator sign is fixed to ``exp(-iHt)``.  For the real symmetric
Hamiltonians used here the probabilities are even in ``t``, so results
written with the opposite sign give the same distributions.
"""

from __future__ import annotations

import enum
from typing import Sequence, Union

import numpy as np

from .errors import ConventionMismatchError, DimensionError
from .graphs import Graph, is_regular
from .linalg import SpectralDecomposition, hermitian_eigendecomposition, kron_all, kron_sum

__all__ = [
    "HamiltonianConvention",
    "hamiltonian",
    "spectral",
    "basis_state",
    "evolve",
    "amplitude_trajectory",
    "probability_trajectory",
    "measure",
    "evolve_product",
    "average_distribution",
]

HamiltonianLike = Union[np.ndarray, SpectralDecomposition]

DEGENERACY_TOL = 1e-9


class HamiltonianConvention(enum.Enum):
    ADJACENCY = "adjacency"
    NORMALIZED_ADJACENCY = "normalized"
    PRODUCT_AVERAGED = "product-averaged"


def _normalized(g: Graph) -> np.ndarray:
    k = is_regular(g)
    if k is None or k == 0:
        raise ConventionMismatchError("normalized adjacency requires a regular graph of positive degree")
    return g.adjacency / k


def hamiltonian(g: Graph, conv: HamiltonianConvention = HamiltonianConvention.NORMALIZED_ADJACENCY) -> np.ndarray:
    """Real symmetric Hamiltonian of `g`.

    ``PRODUCT_AVERAGED`` is ``(1/d) sum_i I x ... x A_i/k_i x ... x I`` over the
    d atomic factors; on an atomic graph it coincides with ``NORMALIZED_ADJACENCY``.
    """
    conv = HamiltonianConvention(conv)
    if conv is HamiltonianConvention.ADJACENCY:
        return np.array(g.adjacency, dtype=float)
    if conv is HamiltonianConvention.NORMALIZED_ADJACENCY:
        return _normalized(g)
    atoms = g.atoms()
    return kron_sum([_normalized(a) for a in atoms]) / len(atoms)


def spectral(h: HamiltonianLike) -> SpectralDecomposition:
    if isinstance(h, SpectralDecomposition):
        return h
    return hermitian_eigendecomposition(h)


def basis_state(n: int, vertex: int = 0) -> np.ndarray:
    if not 0 <= vertex < n:
        raise DimensionError(f"vertex {vertex} out of range for {n} vertices")
    psi = np.zeros(n, dtype=complex)
    psi[vertex] = 1.0
    return psi


def _check_state(decomp: SpectralDecomposition, psi0) -> np.ndarray:
    psi0 = np.asarray(psi0, dtype=complex)
    if psi0.shape != (decomp.dim,):
        raise DimensionError(f"state of shape {psi0.shape} vs Hamiltonian of dim {decomp.dim}")
    return psi0


def amplitude_trajectory(h: HamiltonianLike, psi0, times) -> np.ndarray:
    """Amplitudes at every time in `times`, shape ``(len(times), n)``."""
    decomp = spectral(h)
    psi0 = _check_state(decomp, psi0)
    times = np.atleast_1d(np.asarray(times, dtype=float))
    coeffs = decomp.coefficients(psi0)
    phases = np.exp(-1j * np.outer(times, decomp.eigenvalues))
    out = (phases * coeffs) @ decomp.eigenvectors.T
    out[times == 0.0] = psi0
    return out


def probability_trajectory(h: HamiltonianLike, psi0, times) -> np.ndarray:
    return measure(amplitude_trajectory(h, psi0, times))


def evolve(h: HamiltonianLike, psi0, t: float) -> np.ndarray:
    """``expm(-i H t) @ psi0``; `t` may be negative."""
    return amplitude_trajectory(h, psi0, [t])[0]


def measure(psi) -> np.ndarray:
    """Collapse amplitudes to probabilities ``|<j|psi>|^2`` (along the last axis)."""
    return np.abs(np.asarray(psi)) ** 2


def evolve_product(factors: Sequence[tuple[HamiltonianLike, Sequence[complex]]], t: float,
                   averaged: bool = True) -> np.ndarray:
    """Tensor product of independently evolved factor amplitudes.

    With ``averaged`` each factor runs for ``t / d``, matching the
    ``PRODUCT_AVERAGED`` Hamiltonian; otherwise for ``t`` (plain Kronecker sum).
    """
    if len(factors) == 0:
        raise DimensionError("evolve_product needs at least one factor")
    tau = t / len(factors) if averaged else t
    return kron_all([evolve(h, psi, tau) for h, psi in factors])


def average_distribution(h: HamiltonianLike, psi0) -> np.ndarray:
    """Exact long-time average of ``measure(evolve(h, psi0, t))``.

    Cross terms between distinct eigenvalues average out, leaving
    ``sum_G |Pi_G psi0|^2`` over the eigenspace projectors ``Pi_G``.
    Eigenvalues closer than 1e-9 are grouped into one eigenspace.
    """
    decomp = spectral(h)
    psi0 = _check_state(decomp, psi0)
    lam = decomp.eigenvalues
    v = decomp.eigenvectors
    coeffs = v.conj().T @ psi0
    breaks = np.flatnonzero(np.diff(lam) > DEGENERACY_TOL) + 1
    out = np.zeros(decomp.dim)
    for idx in np.split(np.arange(decomp.dim), breaks):
        out += np.abs(v[:, idx] @ coeffs[idx]) ** 2
    return out
