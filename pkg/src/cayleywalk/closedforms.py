"""
Analytic solutions for the worked families.

Classical values are probabilities under the factorwise normalized
Laplacian (``A_i / k_i - I`` per factor).  Quantum values are amplitudes
under the product-averaged Hamiltonian with propagator ``exp(-iHt)``;
collapse them with :func:`cayleywalk.quantum.measure`.

Every formula is checked against the matrix engines in the test suite.
"""

from __future__ import annotations

import enum
from typing import Sequence

import numpy as np

from .errors import DimensionError, DomainError

__all__ = [
    "ClosedFormFamily",
    "cycle_classical",
    "complete_classical",
    "hypercube_classical",
    "product_position_probability",
    "complete_product_classical",
    "charter_classical",
    "cycle_quantum",
    "complete_quantum",
    "charter_quantum",
    "hypercube_quantum",
    "cycle_distribution",
    "complete_distribution",
]


class ClosedFormFamily(enum.Enum):
    CYCLE_CLASSICAL = "cycle-classical"
    COMPLETE_CLASSICAL = "complete-classical"
    CHARTER_CLASSICAL = "charter-classical"
    HYPERCUBE_CLASSICAL = "hypercube-classical"
    CYCLE_QUANTUM = "cycle-quantum"
    COMPLETE_QUANTUM = "complete-quantum"
    CHARTER_QUANTUM = "charter-quantum"
    HYPERCUBE_QUANTUM = "hypercube-quantum"


def _vertex(k: int, n: int) -> None:
    if not 0 <= k < n:
        raise DimensionError(f"vertex {k} out of range 0..{n - 1}")


def _time(t: float) -> None:
    if t < 0:
        raise DomainError(f"classical closed forms need t >= 0, got {t}")


def cycle_classical(n: int, k: int, t: float) -> float:
    """``(1/n) sum_j exp(t (cos(2 pi j/n) - 1)) cos(2 pi j k/n)``.

    The exponent is the (non-positive) generator eigenvalue; with the
    opposite sign mass would not be conserved.  ``n = 2`` gives the K_2 walk.
    """
    if n < 2:
        raise DimensionError(f"cycle needs n >= 2, got {n}")
    _vertex(k, n)
    _time(t)
    j = np.arange(n)
    theta = 2 * np.pi * j / n
    return float(np.sum(np.exp(t * (np.cos(theta) - 1.0)) * np.cos(theta * k)) / n)


def complete_classical(n: int, k: int, t: float) -> float:
    """``(1 + (n-1) e) / n`` at the start vertex, ``(1 - e) / n`` elsewhere, ``e = exp(-n t/(n-1))``.

    The start-vertex weight ``(n-1)`` is what makes the total 1 and ``P(0)`` a
    point mass; without it the formula is only right for ``n = 2``.
    """
    if n < 2:
        raise DimensionError(f"complete graph needs n >= 2, got {n}")
    _vertex(k, n)
    _time(t)
    decay = np.exp(-n * t / (n - 1))
    return float((1.0 + (n - 1) * decay) / n if k == 0 else (1.0 - decay) / n)


def hypercube_classical(n: int, weight: int, t: float) -> float:
    """Probability of any vertex with Hamming weight `weight` on the n-cube."""
    if not 0 <= weight <= n:
        raise DimensionError(f"Hamming weight {weight} out of range 0..{n}")
    _time(t)
    e = np.exp(-2.0 * t)
    return float(((1 + e) / 2) ** (n - weight) * ((1 - e) / 2) ** weight)


def product_position_probability(factor_values: Sequence[Sequence[float]], position: Sequence[int]) -> float:
    """``prod_i factor_values[i][position[i]]``.

    `factor_values` holds each factor's single-graph distribution.
    """
    if len(factor_values) != len(position):
        raise DimensionError(f"{len(position)} coordinates for {len(factor_values)} factors")
    out = 1.0
    for vals, k in zip(factor_values, position):
        _vertex(k, len(vals))
        out *= float(vals[k])
    return out


def complete_product_classical(n: int, d: int, zeros: int, t: float) -> float:
    """``P_0^zeros * P_other^(d - zeros)`` on the d-fold product of K_n."""
    if not 0 <= zeros <= d:
        raise DimensionError(f"zero count {zeros} out of range 0..{d}")
    return complete_classical(n, 0, t) ** zeros * complete_classical(n, 1, t) ** (d - zeros)


def charter_classical(n: int, k: int, t: float) -> float:
    """Charter ``K_2 x C_n``: vertex ``k`` lies in block ``k // n`` at cycle position ``k % n``."""
    _vertex(k, 2 * n)
    _time(t)
    e = np.exp(-2.0 * t)
    block = (1 + e) / 2 if k < n else (1 - e) / 2
    return float(block * cycle_classical(n, k % n, t))


def cycle_distribution(n: int, t: float) -> np.ndarray:
    return np.array([cycle_classical(n, k, t) for k in range(n)])


def complete_distribution(n: int, t: float) -> np.ndarray:
    return np.array([complete_classical(n, k, t) for k in range(n)])


def cycle_quantum(n: int, k: int, t: float, d: int = 1) -> complex:
    """``(1/n) sum_j exp(-i (t/d) cos(2 pi j/n)) omega^(j k)``.

    Amplitude at position `k` of one C_n factor inside a d-factor
    product-averaged walk, started at 0.
    """
    if n < 2:
        raise DimensionError(f"cycle needs n >= 2, got {n}")
    _vertex(k, n)
    if d < 1:
        raise DimensionError(f"factor count d must be >= 1, got {d}")
    j = np.arange(n)
    theta = 2 * np.pi * j / n
    return complex(np.sum(np.exp(-1j * (t / d) * np.cos(theta)) * np.exp(1j * theta * k)) / n)


def complete_quantum(n: int, zeros: int, d: int, t: float) -> complex:
    """Amplitude on the d-fold product of K_n at a vertex with `zeros` zero coordinates.

    The factor Hamiltonian ``A/(n-1)`` has eigenvalues 1 and ``-1/(n-1)``, so
    the second phase is ``exp(+i t/((n-1) d))``.  Writing it as
    ``exp(-i t/((n-1) d))`` breaks agreement with the engine (already for K_2).
    All factors use ``t/d``.
    """
    if n < 2:
        raise DimensionError(f"complete graph needs n >= 2, got {n}")
    if d < 1:
        raise DimensionError(f"factor count d must be >= 1, got {d}")
    if not 0 <= zeros <= d:
        raise DimensionError(f"zero count {zeros} out of range 0..{d}")
    a = np.exp(-1j * t / d)
    b = np.exp(1j * t / ((n - 1) * d))
    home = (a + (n - 1) * b) / n
    away = (a - b) / n
    return complex(home ** zeros * away ** (d - zeros))


def charter_quantum(n: int, k: int, t: float) -> float:
    """Probability at charter vertex `k` (blocks ``k < n`` and ``n <= k < 2n``).

    Both factors evolve for ``t/2`` under the product-averaged Hamiltonian.
    """
    if n < 2:
        raise DimensionError(f"charter needs n >= 2, got {n}")
    _vertex(k, 2 * n)
    weight = np.cos(t / 2) ** 2 if k < n else np.sin(t / 2) ** 2
    return float(weight * abs(cycle_quantum(n, k % n, t, d=2)) ** 2)


def hypercube_quantum(n: int, weight: int, t: float) -> complex:
    """``cos(t/n)^(n-w) (-i sin(t/n))^w`` at any vertex of Hamming weight `w`."""
    if n < 1:
        raise DimensionError(f"hypercube needs n >= 1, got {n}")
    if not 0 <= weight <= n:
        raise DimensionError(f"Hamming weight {weight} out of range 0..{n}")
    return complex(np.cos(t / n) ** (n - weight) * (-1j * np.sin(t / n)) ** weight)
