"""
Engine-vs-analytic and engine-vs-engine consistency checks.

Each check returns a :class:`Check` carrying the largest absolute deviation
it observed; callers decide the tolerance.  ``walk verify`` and the
acceptance tests both run these.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import classical, closedforms as cf, quantum
from .classical import GeneratorConvention
from .graphs import Graph, GraphSpec, build
from .linalg import kron_all
from .quantum import HamiltonianConvention

__all__ = ["Check", "SUITES", "run_suite", "default_grid"]

CL = GeneratorConvention.PRODUCT_NORMALIZED
QM = HamiltonianConvention.PRODUCT_AVERAGED


@dataclass(frozen=True)
class Check:
    name: str
    max_error: float

    def passed(self, tol: float) -> bool:
        return bool(self.max_error <= tol)


def default_grid(points: int = 50, t_max: float = 20.0) -> np.ndarray:
    return np.linspace(0.0, t_max, points)


def _classical_engine(g: Graph, times) -> np.ndarray:
    h = classical.generator(g, CL)
    return classical.trajectory(h, classical.point_mass(g.vertex_count), times)


def _quantum_engine(g: Graph, times) -> np.ndarray:
    h = quantum.hamiltonian(g, QM)
    return quantum.amplitude_trajectory(h, quantum.basis_state(g.vertex_count), times)


def _tabulate(g: Graph, times, value: Callable[[tuple[int, ...], float], complex],
              key: Callable[[tuple[int, ...]], tuple] = lambda lab: tuple(sorted(lab))) -> np.ndarray:
    """Evaluate `value` at every product vertex; labels sharing `key` share a value."""
    labels = list(itertools.product(*[range(d) for d in g.factor_dims]))
    keys = [key(lab) for lab in labels]
    reps = {k: lab for k, lab in zip(keys, labels)}
    out = np.empty((len(times), g.vertex_count), dtype=complex)
    for i, t in enumerate(times):
        cache = {k: value(lab, float(t)) for k, lab in reps.items()}
        out[i] = [cache[k] for k in keys]
    return out


def _err(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def closed_form_checks(max_n: int = 6, max_d: int = 3, times=None, max_dim: int = 512) -> list[Check]:
    """Every analytic family against the full-matrix engine on its graph."""
    times = default_grid() if times is None else np.asarray(times, dtype=float)
    checks = []

    for d in range(1, max_d + 1):
        for n in range(3, max_n + 1):
            if n ** d > max_dim:
                continue
            g = build(GraphSpec.product([GraphSpec.cycle(n)] * d))
            # classical: product of single-cycle distributions
            got = _tabulate(g, times, lambda lab, t, n=n: np.prod([cf.cycle_classical(n, k, t) for k in lab]))
            checks.append(Check(f"cycle-classical n={n} d={d}", _err(got.real, _classical_engine(g, times))))
            got = _tabulate(g, times, lambda lab, t, n=n, d=d: np.prod([cf.cycle_quantum(n, k, t, d) for k in lab]))
            checks.append(Check(f"cycle-quantum n={n} d={d}", _err(got, _quantum_engine(g, times))))
        for n in range(2, max_n + 1):
            if n ** d > max_dim:
                continue
            g = build(GraphSpec.product([GraphSpec.complete(n)] * d))
            zeros = lambda lab: sum(1 for k in lab if k == 0)
            got = _tabulate(g, times, lambda lab, t, n=n, d=d: cf.complete_product_classical(n, d, zeros(lab), t))
            checks.append(Check(f"complete-classical n={n} d={d}", _err(got.real, _classical_engine(g, times))))
            got = _tabulate(g, times, lambda lab, t, n=n, d=d: cf.complete_quantum(n, zeros(lab), d, t))
            checks.append(Check(f"complete-quantum n={n} d={d}", _err(got, _quantum_engine(g, times))))

    for n in range(2, max_n + 1):
        g = build(GraphSpec.charter(n))
        got = np.array([[cf.charter_classical(n, k, t) for k in range(2 * n)] for t in times])
        checks.append(Check(f"charter-classical n={n}", _err(got, _classical_engine(g, times))))
        got = np.array([[cf.charter_quantum(n, k, t) for k in range(2 * n)] for t in times])
        checks.append(Check(f"charter-quantum n={n}", _err(got, quantum.measure(_quantum_engine(g, times)))))

    for n in range(1, max_n + 1):
        if 2 ** n > max_dim:
            continue
        g = build(GraphSpec.hypercube(n))
        got = _tabulate(g, times, lambda lab, t, n=n: cf.hypercube_classical(n, sum(lab), t))
        checks.append(Check(f"hypercube-classical n={n}", _err(got.real, _classical_engine(g, times))))
        got = _tabulate(g, times, lambda lab, t, n=n: cf.hypercube_quantum(n, sum(lab), t))
        checks.append(Check(f"hypercube-quantum n={n}", _err(got, _quantum_engine(g, times))))
    return checks


FACTOR_SETS: tuple[tuple[GraphSpec, ...], ...] = (
    (GraphSpec.complete(2), GraphSpec.complete(2)),
    (GraphSpec.complete(3), GraphSpec.cycle(4)),
    (GraphSpec.cycle(3), GraphSpec.cycle(5)),
    (GraphSpec.complete(2), GraphSpec.complete(3), GraphSpec.cycle(4)),
    (GraphSpec.cycle(3), GraphSpec.cycle(3), GraphSpec.cycle(3)),
    (GraphSpec.complete(4), GraphSpec.cycle(6)),
)


def factorization_check(factors: Sequence[GraphSpec], times: Iterable[float],
                        start: Sequence[int] | None = None) -> tuple[Check, Check]:
    """Factorwise evolution against the assembled product, classical and quantum."""
    graphs = [build(s) for s in factors]
    start = [0] * len(graphs) if start is None else list(start)
    product = build(GraphSpec.product(list(factors)))
    hc = classical.spectral(classical.generator(product, CL))
    hq = quantum.spectral(quantum.hamiltonian(product, QM))
    fc = [(classical.spectral(classical.generator(g, CL)), classical.point_mass(g.vertex_count, s))
          for g, s in zip(graphs, start)]
    fq = [(quantum.spectral(quantum.hamiltonian(g, QM)), quantum.basis_state(g.vertex_count, s))
          for g, s in zip(graphs, start)]
    p0 = kron_all([p for _, p in fc])
    psi0 = kron_all([p for _, p in fq])
    err_c = err_q = 0.0
    for t in times:
        err_c = max(err_c, _err(classical.evolve_product(fc, t), classical.evolve(hc, p0, t)))
        err_q = max(err_q, _err(quantum.evolve_product(fq, t, averaged=True), quantum.evolve(hq, psi0, t)))
    label = "x".join(_short(s) for s in factors)
    return Check(f"factorization-classical {label}", err_c), Check(f"factorization-quantum {label}", err_q)


def _short(s: GraphSpec) -> str:
    return {"cycle": "C", "complete": "K"}.get(s.family, s.family) + str(s.n)


def factorization_checks(times=(0.1, 1.0, 5.0, 20.0)) -> list[Check]:
    out = []
    for fs in FACTOR_SETS:
        out.extend(factorization_check(fs, times))
    return out


HYGIENE_SPECS = (
    GraphSpec.cycle(3), GraphSpec.cycle(5), GraphSpec.cycle(6), GraphSpec.cycle(8),
    GraphSpec.complete(2), GraphSpec.complete(4), GraphSpec.complete(5),
    GraphSpec.charter(3), GraphSpec.charter(5), GraphSpec.hypercube(3), GraphSpec.hypercube(4),
    GraphSpec.product([GraphSpec.complete(3), GraphSpec.cycle(4)]),
)


def hygiene_checks(times=None) -> list[Check]:
    """Unitarity, mass conservation, semigroup, phase-shift and time-parity invariants.

    Each check reports a deviation that should be ~0.
    """
    times = np.linspace(0.0, 50.0, 26) if times is None else np.asarray(times, dtype=float)
    out = []
    for spec in HYGIENE_SPECS:
        g = build(spec)
        n = g.vertex_count
        name = spec.family + str(spec.n) if spec.n is not None else "x".join(_short(f) for f in spec.factors)
        hc = classical.spectral(classical.generator(g, CL))
        p0 = classical.point_mass(n)
        traj = classical.trajectory(hc, p0, times)
        out.append(Check(f"mass-conservation {name}", float(np.max(np.abs(traj.sum(axis=1) - 1.0)))))
        s, t = 0.7, 2.3
        out.append(Check(f"classical-semigroup {name}",
                         _err(classical.evolve(hc, classical.evolve(hc, p0, s), t), classical.evolve(hc, p0, s + t))))

        h = quantum.hamiltonian(g, QM)
        hq = quantum.spectral(h)
        psi0 = quantum.basis_state(n)
        amps = quantum.amplitude_trajectory(hq, psi0, np.r_[-times, times])
        out.append(Check(f"unitarity {name}", float(np.max(np.abs(np.linalg.norm(amps, axis=1) - 1.0)))))
        out.append(Check(f"quantum-semigroup {name}",
                         _err(quantum.evolve(hq, quantum.evolve(hq, psi0, s), t), quantum.evolve(hq, psi0, s + t))))
        shifted = quantum.spectral(h + 1.7 * np.eye(n))
        out.append(Check(f"phase-shift {name}",
                         _err(quantum.probability_trajectory(shifted, psi0, times),
                              quantum.probability_trajectory(hq, psi0, times))))
        out.append(Check(f"time-parity {name}",
                         _err(quantum.probability_trajectory(hq, psi0, times),
                              quantum.probability_trajectory(hq, psi0, -times))))
    return out


SUITES: dict[str, Callable[[], list[Check]]] = {
    "closedforms": closed_form_checks,
    "factorization": factorization_checks,
    "hygiene": hygiene_checks,
}


def run_suite(names: Sequence[str] | None = None) -> list[Check]:
    names = list(SUITES) if not names else list(names)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s) {unknown}; choose from {sorted(SUITES)}")
    return [c for n in names for c in SUITES[n]()]
