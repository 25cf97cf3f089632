import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cayleywalk import quantum
from cayleywalk.errors import ConventionMismatchError, DimensionError
from cayleywalk.graphs import GraphSpec, build
from cayleywalk.linalg import kron_all
from cayleywalk.quantum import HamiltonianConvention as HC

from oracles import numeric_time_average, taylor_expm_action

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])
FAMILIES = [GraphSpec.cycle(5), GraphSpec.cycle(6), GraphSpec.complete(4), GraphSpec.charter(3),
            GraphSpec.hypercube(3), GraphSpec.product([GraphSpec.complete(3), GraphSpec.cycle(4)])]


def ham(spec, conv=HC.PRODUCT_AVERAGED):
    return quantum.hamiltonian(build(spec), conv)


class TestHamiltonian:
    def test_k2(self):
        np.testing.assert_array_equal(ham(GraphSpec.complete(2), HC.NORMALIZED_ADJACENCY), SIGMA_X)

    @pytest.mark.parametrize("n", [3, 5, 8])
    def test_cycle_spectrum(self, n):
        lam = np.linalg.eigvalsh(ham(GraphSpec.cycle(n), HC.NORMALIZED_ADJACENCY))
        np.testing.assert_allclose(lam, np.sort(np.cos(2 * np.pi * np.arange(n) / n)), atol=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_hypercube_averaged(self, n):
        terms = []
        for i in range(n):
            ops = [np.eye(2)] * n
            ops[i] = SIGMA_X
            terms.append(kron_all(ops))
        np.testing.assert_allclose(ham(GraphSpec.hypercube(n)), sum(terms) / n, atol=1e-15)

    def test_adjacency(self):
        g = build(GraphSpec.charter(3))
        np.testing.assert_array_equal(quantum.hamiltonian(g, HC.ADJACENCY), g.adjacency)

    def test_irregular(self):
        g = build(GraphSpec.explicit([[0, 1, 0], [1, 0, 1], [0, 1, 0]]))
        with pytest.raises(ConventionMismatchError):
            quantum.hamiltonian(g, HC.NORMALIZED_ADJACENCY)


class TestEvolve:
    def test_t0(self):
        psi = np.array([0.6, 0.8j, 0, 0, 0])
        np.testing.assert_array_equal(quantum.evolve(ham(GraphSpec.cycle(5)), psi, 0.0), psi)

    @pytest.mark.parametrize("t", [-1.2, 0.5, 2.0, 7.0])
    def test_sigma_x(self, t):
        psi = quantum.evolve(SIGMA_X, [1, 0], t)
        np.testing.assert_allclose(psi, [np.cos(t), -1j * np.sin(t)], atol=1e-13)
        np.testing.assert_allclose(quantum.measure(psi), [np.cos(t) ** 2, np.sin(t) ** 2], atol=1e-13)

    def test_c5_taylor(self):
        h = ham(GraphSpec.cycle(5))
        psi0 = quantum.basis_state(5)
        assert np.max(np.abs(quantum.evolve(h, psi0, 2.0) - taylor_expm_action(h, -2.0j, psi0))) <= 1e-9

    def test_dim_mismatch(self):
        with pytest.raises(DimensionError):
            quantum.evolve(SIGMA_X, [1, 0, 0], 1.0)

    @pytest.mark.parametrize("spec", FAMILIES)
    def test_norm(self, spec):
        h = quantum.spectral(ham(spec))
        psi0 = quantum.basis_state(h.dim)
        for t in np.linspace(-50, 50, 41):
            assert abs(np.linalg.norm(quantum.evolve(h, psi0, t)) - 1) <= 1e-10

    @given(st.sampled_from(FAMILIES), st.floats(-30, 30))
    @settings(max_examples=30, deadline=None)
    def test_time_parity(self, spec, t):
        h = quantum.spectral(ham(spec))
        psi0 = quantum.basis_state(h.dim)
        a = quantum.measure(quantum.evolve(h, psi0, t))
        b = quantum.measure(quantum.evolve(h, psi0, -t))
        assert np.max(np.abs(a - b)) <= 1e-10

    @given(st.sampled_from(FAMILIES), st.floats(0, 30), st.floats(-5, 5))
    @settings(max_examples=30, deadline=None)
    def test_phase_shift(self, spec, t, c):
        h = ham(spec)
        psi0 = quantum.basis_state(h.shape[0])
        a = quantum.measure(quantum.evolve(h, psi0, t))
        b = quantum.measure(quantum.evolve(h + c * np.eye(h.shape[0]), psi0, t))
        assert np.max(np.abs(a - b)) <= 1e-12


class TestMeasure:
    def test_basis(self):
        np.testing.assert_array_equal(quantum.measure(quantum.basis_state(4, 2)), [0, 0, 1, 0])

    def test_equal_moduli(self):
        np.testing.assert_allclose(quantum.measure([(1 + 1j) / 2, (1 - 1j) / 2]), [0.5, 0.5], atol=1e-15)

    def test_hypercube3_uniform(self):
        p = quantum.measure(quantum.evolve(ham(GraphSpec.hypercube(3)), quantum.basis_state(8), 3 * np.pi / 4))
        np.testing.assert_allclose(p, 1 / 8, atol=1e-10)

    @pytest.mark.parametrize("spec", FAMILIES)
    def test_sums_to_one(self, spec):
        h = ham(spec)
        p = quantum.measure(quantum.evolve(h, quantum.basis_state(h.shape[0]), 3.3))
        assert abs(p.sum() - 1) <= 1e-10


class TestEvolveProduct:
    def test_single(self):
        h = ham(GraphSpec.cycle(5))
        psi = quantum.basis_state(5)
        np.testing.assert_allclose(quantum.evolve_product([(h, psi)], 1.1), quantum.evolve(h, psi, 1.1), atol=1e-15)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_hypercube(self, n):
        t = 1.9
        got = quantum.evolve_product([(SIGMA_X, [1, 0])] * n, t)
        one = np.array([np.cos(t / n), -1j * np.sin(t / n)])
        np.testing.assert_allclose(got, kron_all([one] * n), atol=1e-13)
        weights = [bin(v).count("1") for v in range(2 ** n)]
        expect = [abs(np.cos(t / n)) ** (n - w) * abs(np.sin(t / n)) ** w for w in weights]
        np.testing.assert_allclose(np.abs(got), expect, atol=1e-13)

    def test_k3_c4_averaged(self):
        full = ham(GraphSpec.product([GraphSpec.complete(3), GraphSpec.cycle(4)]))
        f3 = ham(GraphSpec.complete(3))
        f4 = ham(GraphSpec.cycle(4))
        psi3, psi4 = quantum.basis_state(3), quantum.basis_state(4)
        got = quantum.evolve_product([(f3, psi3), (f4, psi4)], 1.7)
        oracle = taylor_expm_action(full, -1.7j, kron_all([psi3, psi4]))
        assert np.max(np.abs(got - oracle)) <= 1e-9

    def test_unaveraged_matches_kron_sum(self):
        f3 = ham(GraphSpec.complete(3))
        f4 = ham(GraphSpec.cycle(4))
        full = np.kron(f3, np.eye(4)) + np.kron(np.eye(3), f4)
        psi = kron_all([quantum.basis_state(3), quantum.basis_state(4)])
        got = quantum.evolve_product([(f3, quantum.basis_state(3)), (f4, quantum.basis_state(4))], 0.9, averaged=False)
        assert np.max(np.abs(got - taylor_expm_action(full, -0.9j, psi))) <= 1e-9

    def test_empty(self):
        with pytest.raises(DimensionError):
            quantum.evolve_product([], 1.0)


class TestAverage:
    def test_diagonal(self):
        psi = np.array([0.6, 0.8j, 0.0])
        np.testing.assert_allclose(quantum.average_distribution(np.diag([1.0, 2.0, 3.0]), psi),
                                   [0.36, 0.64, 0.0], atol=1e-15)

    @pytest.mark.parametrize("spec", [GraphSpec.complete(2), GraphSpec.cycle(3)])
    def test_against_quadrature(self, spec):
        h = quantum.spectral(ham(spec))
        psi0 = quantum.basis_state(h.dim)
        oracle = numeric_time_average(lambda ts: quantum.probability_trajectory(h, psi0, ts))
        np.testing.assert_allclose(quantum.average_distribution(h, psi0), oracle, atol=2e-3)

    def test_k2_is_half_half(self):
        np.testing.assert_allclose(quantum.average_distribution(SIGMA_X, [1, 0]), [0.5, 0.5], atol=1e-12)

    @pytest.mark.parametrize("spec", FAMILIES)
    def test_sums_to_one_and_shift_invariant(self, spec):
        h = quantum.spectral(ham(spec))
        psi0 = quantum.basis_state(h.dim)
        avg = quantum.average_distribution(h, psi0)
        assert abs(avg.sum() - 1) <= 1e-10
        shifted = quantum.average_distribution(h, quantum.evolve(h, psi0, 3.7))
        np.testing.assert_allclose(shifted, avg, atol=1e-10)
