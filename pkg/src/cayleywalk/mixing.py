"""
Uniform-mixing analysis for quantum (and classical) walks.

Total variation here is the plain L1 sum ``sum_x |p(x) - q(x)|`` with range
[0, 2]; it is *not* halved.  Non-mixing results are statements about a
finite horizon only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import quantum
from .errors import DimensionError, DomainError
from .graphs import GraphSpec, build

__all__ = [
    "MixingReport",
    "ClaimResult",
    "total_variation",
    "tv_to_uniform",
    "golden_section",
    "instantaneous_mixing_search",
    "exact_mixing_claims",
    "average_mixing_check",
    "balanced_property_check",
]

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def total_variation(p, q) -> float:
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != q.shape:
        raise DimensionError(f"distributions of shape {p.shape} and {q.shape}")
    return float(np.abs(p - q).sum())


def tv_to_uniform(p) -> np.ndarray:
    """Row-wise TV to uniform; accepts one distribution or a stack of them."""
    p = np.asarray(p, dtype=float)
    return np.abs(p - 1.0 / p.shape[-1]).sum(axis=-1)


@dataclass
class MixingReport:
    best_time: float
    best_tv: float
    epsilon_target: float
    achieved: bool
    tv_trace: list[tuple[float, float]] = field(default_factory=list, repr=False)

    def to_dict(self, include_trace: bool = False) -> dict:
        d = {
            "best_time": self.best_time,
            "best_tv": self.best_tv,
            "epsilon_target": self.epsilon_target,
            "achieved": self.achieved,
        }
        if include_trace:
            d["tv_trace"] = [list(x) for x in self.tv_trace]
        return d


def golden_section(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-8) -> tuple[float, float]:
    """Minimise `f` on ``[lo, hi]`` assuming unimodality; returns ``(x, f(x))``."""
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    return (c, fc) if fc <= fd else (d, fd)


def instantaneous_mixing_search(h, psi0, t_max: float, grid_points: int = 20000, epsilon: float = 1e-6,
                                refine: int = 8, tol: float = 1e-8) -> MixingReport:
    """Smallest TV to uniform of the quantum walk over ``(0, t_max]``.

    A uniform grid of `grid_points` times is scanned, then the `refine`
    deepest local minima are polished by golden-section search on their
    neighbouring grid bracket until it is narrower than `tol`.
    """
    if t_max <= 0:
        raise DomainError(f"t_max must be positive, got {t_max}")
    if grid_points < 16:
        raise DomainError(f"grid_points must be >= 16, got {grid_points}")
    decomp = quantum.spectral(h)
    psi0 = np.asarray(psi0, dtype=complex)
    times = np.linspace(t_max / grid_points, t_max, grid_points)
    tv = tv_to_uniform(quantum.probability_trajectory(decomp, psi0, times))

    def tv_at(t: float) -> float:
        return float(tv_to_uniform(quantum.probability_trajectory(decomp, psi0, [t])[0]))

    i_best = int(np.argmin(tv))
    best_t, best_tv = float(times[i_best]), float(tv[i_best])
    interior = np.r_[True, tv[1:] <= tv[:-1]] & np.r_[tv[:-1] <= tv[1:], True]
    candidates = np.flatnonzero(interior)
    candidates = candidates[np.argsort(tv[candidates], kind="stable")[:refine]]
    for i in candidates:
        lo = float(times[i - 1]) if i > 0 else 0.0
        hi = float(times[min(i + 1, grid_points - 1)])
        t_star, v_star = golden_section(tv_at, lo, hi, tol)
        if v_star < best_tv and t_star > 0.0:
            best_t, best_tv = t_star, v_star
    trace = list(zip(times.tolist(), tv.tolist()))
    return MixingReport(best_time=best_t, best_tv=best_tv, epsilon_target=epsilon,
                        achieved=best_tv <= epsilon, tv_trace=trace)


@dataclass
class ClaimResult:
    claim: str
    verified: bool
    evidence: MixingReport


CLAIM_HORIZON = 200.0
CLAIM_GRID = 20000


def _claim_cases() -> list[tuple[str, GraphSpec, bool, float]]:
    yes = [("C_3", GraphSpec.cycle(3)), ("C_4", GraphSpec.cycle(4)), ("K_2", GraphSpec.complete(2)),
           ("K_3", GraphSpec.complete(3)), ("K_4", GraphSpec.complete(4))]
    no = [("C_5", GraphSpec.cycle(5)), ("C_6", GraphSpec.cycle(6)), ("K_5", GraphSpec.complete(5)),
          ("charter(3)", GraphSpec.charter(3)), ("charter(4)", GraphSpec.charter(4)),
          ("charter(5)", GraphSpec.charter(5))]
    return [(name, s, True, 1e-6) for name, s in yes] + [(name, s, False, 1e-3) for name, s in no]


def exact_mixing_claims(t_max: float = CLAIM_HORIZON, grid_points: int = CLAIM_GRID) -> list[ClaimResult]:
    """Run the instantaneous-mixing search on the families with known behaviour.

    C_3, C_4, K_2, K_3 and K_4 are expected to reach TV <= 1e-6; C_5, C_6,
    K_5 and the charter graphs n = 3..5 are expected to stay above 1e-3 on
    ``(0, t_max]``.  Walks use the product-averaged Hamiltonian from vertex 0.
    """
    results = []
    for name, spec, expect, eps in _claim_cases():
        g = build(spec)
        h = quantum.hamiltonian(g, quantum.HamiltonianConvention.PRODUCT_AVERAGED)
        report = instantaneous_mixing_search(h, quantum.basis_state(g.vertex_count), t_max, grid_points, eps)
        verb = "reaches" if expect else "does not reach"
        claim = f"{name} {verb} TV <= {eps:g} on (0, {t_max:g}]"
        results.append(ClaimResult(claim=claim, verified=report.achieved == expect, evidence=report))
    return results


def average_mixing_check(h, psi0, tol: float = 1e-6) -> tuple[np.ndarray, bool]:
    """Time-averaged distribution and whether it is uniform (max deviation <= `tol`)."""
    avg = quantum.average_distribution(h, psi0)
    return avg, bool(np.max(np.abs(avg - 1.0 / avg.size)) <= tol)


def balanced_property_check(n: int, t: float, tol: float = 1e-8) -> tuple[list[list[int]], list[float]]:
    """Group the 2n charter probabilities at time `t` into equal-value classes.

    Returns the vertex groups (ordered by first vertex) and the common value
    of each group.  Values within `tol` of a group's first member join it.
    """
    if n not in (3, 4):
        raise DomainError(f"balanced property is only examined for n in {{3, 4}}, got {n}")
    g = build(GraphSpec.charter(n))
    h = quantum.hamiltonian(g, quantum.HamiltonianConvention.PRODUCT_AVERAGED)
    p = quantum.measure(quantum.evolve(h, quantum.basis_state(g.vertex_count), t))
    return group_values(p, tol)


def group_values(p, tol: float = 1e-8) -> tuple[list[list[int]], list[float]]:
    groups: list[list[int]] = []
    values: list[float] = []
    for i, x in enumerate(np.asarray(p, dtype=float)):
        for grp, v in zip(groups, values):
            if abs(x - v) <= tol:
                grp.append(i)
                break
        else:
            groups.append([i])
            values.append(float(x))
    return groups, values
