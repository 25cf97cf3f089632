"""
Dense linear algebra for walk simulation.

Matrices are plain ``numpy.ndarray`` objects (real or complex, square).
The eigensolver is a cyclic Jacobi method run in parallel (round-robin)
ordering, so each sweep is ``n - 1`` vectorised rounds of disjoint
rotations instead of ``n (n - 1) / 2`` scalar ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import ContractViolation, DimensionError

__all__ = [
    "SpectralDecomposition",
    "as_square",
    "is_hermitian",
    "is_symmetric_real",
    "is_unitary",
    "fourier_matrix",
    "primary_permutation",
    "circulant_matrix",
    "circulant_eigenvalues",
    "hermitian_eigendecomposition",
    "kron",
    "kron_all",
    "kron_sum",
    "expm_action",
]

JACOBI_TOL = 1e-14
HERMITIAN_TOL = 1e-10
MAX_SWEEPS = 60
# above this size the pure-numpy Jacobi sweeps get slow; hand off to LAPACK
JACOBI_MAX_DIM = 128


def as_square(m) -> np.ndarray:
    """Return `m` as a 2-D square array, raising DimensionError otherwise."""
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DimensionError(f"expected a non-empty square matrix, got shape {a.shape}")
    return a


def is_hermitian(m, tol: float = HERMITIAN_TOL) -> bool:
    a = as_square(m)
    return bool(np.max(np.abs(a - a.conj().T)) <= tol)


def is_symmetric_real(m, tol: float = HERMITIAN_TOL) -> bool:
    a = as_square(m)
    if np.iscomplexobj(a) and np.max(np.abs(a.imag)) > tol:
        return False
    return bool(np.max(np.abs(a.real - a.real.T)) <= tol)


def is_unitary(m, tol: float = HERMITIAN_TOL) -> bool:
    a = as_square(m)
    eye = np.eye(a.shape[0])
    return bool(np.max(np.abs(a.conj().T @ a - eye)) <= tol)


def fourier_matrix(n: int) -> np.ndarray:
    """Unitary Fourier matrix ``F[j, k] = omega**(j*k) / sqrt(n)``, ``omega = exp(2 pi i / n)``."""
    if n < 1:
        raise DimensionError(f"Fourier matrix needs n >= 1, got {n}")
    jk = np.outer(np.arange(n), np.arange(n)) % n
    return np.exp(2j * np.pi * jk / n) / np.sqrt(n)


def primary_permutation(n: int) -> np.ndarray:
    """Cyclic shift with ones at ``(j, j+1 mod n)``."""
    if n < 2:
        raise DimensionError(f"primary permutation needs n >= 2, got {n}")
    p = np.zeros((n, n))
    p[np.arange(n), (np.arange(n) + 1) % n] = 1.0
    return p


def circulant_matrix(coeffs: Sequence[float]) -> np.ndarray:
    """Assemble ``sum_k coeffs[k] P**k`` from the shift matrix ``P``."""
    c = np.asarray(coeffs, dtype=float)
    n = c.size
    if n == 0:
        raise DimensionError("circulant needs at least one coefficient")
    j = np.arange(n)
    # (P^k)[j, j+k] = 1
    return c[(j[None, :] - j[:, None]) % n]


def circulant_eigenvalues(coeffs: Sequence[float]) -> np.ndarray:
    """Eigenvalues ``lambda_k = sum_j coeffs[j] omega**(j k)`` of a circulant matrix.

    The k-th value belongs to the k-th column of :func:`fourier_matrix`.
    """
    c = np.asarray(coeffs, dtype=complex)
    n = c.size
    if n == 0:
        raise DimensionError("circulant needs at least one coefficient")
    jk = np.outer(np.arange(n), np.arange(n)) % n
    return np.exp(2j * np.pi * jk / n).T @ c


def kron(a, b) -> np.ndarray:
    """Kronecker product; composite index ``i = i_a * dim(b) + i_b``."""
    return np.kron(np.asarray(a), np.asarray(b))


def kron_all(mats: Sequence) -> np.ndarray:
    """Kronecker product of a sequence, leftmost factor most significant."""
    if len(mats) == 0:
        raise DimensionError("kron_all needs at least one factor")
    out = np.asarray(mats[0])
    for m in mats[1:]:
        out = np.kron(out, np.asarray(m))
    return out


def kron_sum(mats: Sequence) -> np.ndarray:
    """``sum_j I x ... x M_j x ... x I`` with identities of the matching sizes."""
    if len(mats) == 0:
        raise DimensionError("kron_sum needs at least one term")
    mats = [as_square(m) for m in mats]
    dims = [m.shape[0] for m in mats]
    total = int(np.prod(dims))
    dtype = np.result_type(*mats)
    out = np.zeros((total, total), dtype=dtype)
    for j, m in enumerate(mats):
        left = int(np.prod(dims[:j]))
        right = int(np.prod(dims[j + 1:]))
        out += np.kron(np.kron(np.eye(left), m), np.eye(right))
    return out


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenpairs of a Hermitian matrix.

    Attributes
    ----------
    eigenvalues : ndarray, shape (n,)
        Real, ascending.
    eigenvectors : ndarray, shape (n, n)
        Column ``k`` is the unit eigenvector of ``eigenvalues[k]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.eigenvalues.size)

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T

    def coefficients(self, vec) -> np.ndarray:
        """Coordinates of `vec` in the eigenbasis."""
        vec = np.asarray(vec)
        if vec.shape[0] != self.dim:
            raise DimensionError(f"vector of length {vec.shape[0]} vs decomposition of dim {self.dim}")
        return self.eigenvectors.conj().T @ vec


@lru_cache(maxsize=None)
def _round_robin(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Pairings covering every index pair once per sweep (circle method).

    For odd n a phantom index n is paired off and dropped.
    """
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _off_norm(a: np.ndarray) -> float:
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def _jacobi(a: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
    n = a.shape[0]
    real = not np.iscomplexobj(a)
    a = a.astype(float if real else complex, copy=True)
    v = np.eye(n, dtype=a.dtype)
    if n == 1:
        return a.diagonal().real.copy(), v
    scale = max(1.0, float(np.linalg.norm(a)))
    rounds = _round_robin(n)
    for _ in range(MAX_SWEEPS):
        if _off_norm(a) <= tol * scale:
            break
        for p, q in rounds:
            apq = a[p, q]
            if not np.any(np.abs(apq) > 0.0):
                continue
            app = a[p, p].real
            aqq = a[q, q].real
            if real:
                r = apq
                phase = np.ones_like(apq)
            else:
                r = np.abs(apq)
                phase = np.where(r > 0.0, apq / np.where(r > 0.0, r, 1.0), 1.0)
            # smaller root of t^2 + 2 tau t - 1 = 0 keeps |angle| <= pi/4
            # (a denormal r overflows tau to inf, which correctly gives t = 0)
            nz = r != 0.0
            with np.errstate(over="ignore"):
                tau = np.where(nz, (aqq - app) / (2.0 * np.where(nz, r, 1.0)), 0.0)
            sgn = np.where(tau >= 0.0, 1.0, -1.0)
            t = np.where(nz, sgn / (np.abs(tau) + np.hypot(1.0, tau)), 0.0)
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            # G = diag(1, conj(phase)) @ [[c, s], [-s, c]] on the (p, q) plane
            g11, g12 = c, s
            g21, g22 = -s * phase.conj(), c * phase.conj()
            ap, aq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = ap * g11 + aq * g21
            a[:, q] = ap * g12 + aq * g22
            ap, aq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = np.conj(g11)[:, None] * ap + np.conj(g21)[:, None] * aq
            a[q, :] = np.conj(g12)[:, None] * ap + np.conj(g22)[:, None] * aq
            a[p, q] = 0.0
            a[q, p] = 0.0
            vp, vq = v[:, p].copy(), v[:, q].copy()
            v[:, p] = vp * g11 + vq * g21
            v[:, q] = vp * g12 + vq * g22
    else:
        if _off_norm(a) > tol * scale:
            raise ArithmeticError("Jacobi iteration did not converge")
    return a.diagonal().real.copy(), v


def hermitian_eigendecomposition(m, *, tol: float = JACOBI_TOL, method: str = "auto") -> SpectralDecomposition:
    """Diagonalise a Hermitian matrix.

    Parameters
    ----------
    m : array_like
        Square matrix, Hermitian within 1e-10.
    tol : float
        Sweeps stop once the off-diagonal Frobenius mass drops below
        ``tol * max(1, ||m||_F)``.
    method : {"auto", "jacobi", "lapack"}
        ``"lapack"`` delegates to :func:`numpy.linalg.eigh`; ``"auto"`` uses
        Jacobi up to ``JACOBI_MAX_DIM`` and LAPACK beyond.

    Returns
    -------
    SpectralDecomposition
        Eigenvalues ascending, orthonormal eigenvectors as columns.
    """
    a = as_square(m)
    if not is_hermitian(a, HERMITIAN_TOL):
        raise ContractViolation("matrix is not Hermitian within 1e-10")
    a = 0.5 * (a + a.conj().T)
    if np.iscomplexobj(a) and not np.any(a.imag):
        a = a.real
    if method == "auto":
        method = "jacobi" if a.shape[0] <= JACOBI_MAX_DIM else "lapack"
    if method == "jacobi":
        w, v = _jacobi(a, tol)
    elif method == "lapack":
        w, v = np.linalg.eigh(a)
    else:
        raise ValueError(f"unknown eigensolver method {method!r}")
    order = np.argsort(w, kind="stable")
    return SpectralDecomposition(eigenvalues=w[order], eigenvectors=v[:, order])


def expm_action(decomp: SpectralDecomposition, scale: complex, v) -> np.ndarray:
    """Return ``exp(scale * M) @ v`` where ``M`` is the decomposed matrix.

    `v` may be a vector or a matrix whose columns are acted on.
    """
    coeffs = decomp.coefficients(v)
    phases = np.exp(complex(scale) * decomp.eigenvalues)
    if coeffs.ndim == 1:
        return decomp.eigenvectors @ (phases * coeffs)
    return decomp.eigenvectors @ (phases[:, None] * coeffs)
