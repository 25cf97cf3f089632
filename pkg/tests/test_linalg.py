import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cayleywalk.errors import ContractViolation, DimensionError
from cayleywalk.linalg import (
    SpectralDecomposition,
    circulant_eigenvalues,
    circulant_matrix,
    expm_action,
    fourier_matrix,
    hermitian_eigendecomposition,
    is_hermitian,
    is_symmetric_real,
    is_unitary,
    kron,
    kron_sum,
    primary_permutation,
)

from oracles import random_hermitian, taylor_expm_action

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])


class TestFourier:
    def test_n1(self):
        np.testing.assert_allclose(fourier_matrix(1), [[1.0]])

    def test_n2(self):
        np.testing.assert_allclose(fourier_matrix(2), np.array([[1, 1], [1, -1]]) / np.sqrt(2), atol=1e-15)

    def test_n4_unitary(self):
        f = fourier_matrix(4)
        assert np.max(np.abs(f.conj().T @ f - np.eye(4))) <= 1e-12

    @pytest.mark.parametrize("n", [3, 7, 16, 33, 64])
    def test_unitary_up_to_64(self, n):
        assert is_unitary(fourier_matrix(n), 1e-10)

    def test_zero_rejected(self):
        with pytest.raises(DimensionError):
            fourier_matrix(0)


class TestPermutation:
    def test_n2_swap(self):
        np.testing.assert_array_equal(primary_permutation(2), [[0, 1], [1, 0]])

    def test_layout(self):
        p = primary_permutation(4)
        assert p[0, 1] == p[1, 2] == p[2, 3] == p[3, 0] == 1
        assert p.sum() == 4

    def test_diagonalized_by_fourier(self):
        f = fourier_matrix(3)
        w = np.exp(2j * np.pi / 3)
        got = f.conj().T @ primary_permutation(3) @ f
        np.testing.assert_allclose(got, np.diag([1, w, w ** 2]), atol=1e-12)

    def test_order(self):
        np.testing.assert_array_equal(np.linalg.matrix_power(primary_permutation(5), 5), np.eye(5))

    def test_too_small(self):
        with pytest.raises(DimensionError):
            primary_permutation(1)


def test_circulant_matrix_is_polynomial_in_shift():
    c = [0, 1, 0, 1, 1]
    p = primary_permutation(5)
    expect = sum(ck * np.linalg.matrix_power(p, k) for k, ck in enumerate(c))
    np.testing.assert_array_equal(circulant_matrix(c), expect)


class TestCirculantEigenvalues:
    def test_cycle6(self):
        lam = circulant_eigenvalues([0, 1, 0, 0, 0, 1])
        np.testing.assert_allclose(lam, 2 * np.cos(2 * np.pi * np.arange(6) / 6), atol=1e-12)

    def test_zero(self):
        np.testing.assert_array_equal(circulant_eigenvalues([0, 0, 0]), 0)

    def test_k4_row(self):
        np.testing.assert_allclose(circulant_eigenvalues([0, 1, 1, 1]), [3, -1, -1, -1], atol=1e-12)

    def test_empty(self):
        with pytest.raises(DimensionError):
            circulant_eigenvalues([])

    def test_pairs_with_fourier_columns(self):
        c = [0, 1, 1, 0, 1, 1]
        f = fourier_matrix(6)
        lam = circulant_eigenvalues(c)
        np.testing.assert_allclose(circulant_matrix(c) @ f, f * lam, atol=1e-12)

    @given(st.integers(1, 12).flatmap(lambda n: st.lists(st.integers(0, 1), min_size=n, max_size=n)))
    @settings(max_examples=40, deadline=None)
    def test_matches_eigensolver(self, half):
        n = len(half)
        c = np.zeros(n)
        for k in range(1, n):
            c[k] = c[n - k] = max(half[k], half[n - k])
        lam = np.sort(circulant_eigenvalues(c).real)
        got = hermitian_eigendecomposition(circulant_matrix(c)).eigenvalues
        np.testing.assert_allclose(got, lam, atol=1e-9)


class TestEigendecomposition:
    def test_identity(self):
        np.testing.assert_allclose(hermitian_eigendecomposition(np.eye(3)).eigenvalues, [1, 1, 1])

    def test_k4_against_characteristic_polynomial(self):
        a = np.ones((4, 4)) - np.eye(4)
        # char poly of K_4 is (x - 3)(x + 1)^3
        np.testing.assert_allclose(np.poly(a), np.poly([3, -1, -1, -1]), atol=1e-10)
        np.testing.assert_allclose(hermitian_eigendecomposition(a).eigenvalues, [-1, -1, -1, 3], atol=1e-12)

    def test_c5(self):
        a = circulant_matrix([0, 1, 0, 0, 1])
        expect = np.sort(2 * np.cos(2 * np.pi * np.arange(5) / 5))
        np.testing.assert_allclose(hermitian_eigendecomposition(a).eigenvalues, expect, atol=1e-12)

    def test_rejects_non_hermitian(self):
        with pytest.raises(ContractViolation):
            hermitian_eigendecomposition(np.array([[0, 1], [0, 0]]))

    def test_rejects_non_square(self):
        with pytest.raises(DimensionError):
            hermitian_eigendecomposition(np.zeros((2, 3)))

    @pytest.mark.parametrize("n", [1, 2, 3, 8, 17, 40])
    @pytest.mark.parametrize("cplx", [False, True])
    def test_reconstruction_and_orthonormality(self, n, cplx):
        m = random_hermitian(np.random.default_rng(n), n, cplx)
        d = hermitian_eigendecomposition(m, method="jacobi")
        v = d.eigenvectors
        assert np.max(np.abs(d.reconstruct() - m)) <= 1e-9 * n
        assert np.max(np.abs(v.conj().T @ v - np.eye(n))) <= 1e-10
        assert np.all(np.diff(d.eigenvalues) >= 0)

    @pytest.mark.parametrize("n", [5, 30, 129])
    def test_jacobi_matches_lapack(self, n):
        m = random_hermitian(np.random.default_rng(100 + n), n)
        a = hermitian_eigendecomposition(m, method="jacobi").eigenvalues
        b = hermitian_eigendecomposition(m, method="lapack").eigenvalues
        np.testing.assert_allclose(a, b, atol=1e-9)

    def test_degenerate_product_spectrum(self):
        k3 = np.ones((3, 3)) - np.eye(3)
        c4 = circulant_matrix([0, 1, 0, 1])
        m = kron_sum([k3, c4, c4])
        d = hermitian_eigendecomposition(m, method="jacobi")
        assert np.max(np.abs(d.reconstruct() - m)) <= 1e-9 * m.shape[0]

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            hermitian_eigendecomposition(np.eye(2), method="qr")


class TestKron:
    def test_identity(self):
        np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_index_convention(self):
        a = np.arange(4).reshape(2, 2)
        b = np.arange(9).reshape(3, 3)
        k = kron(a, b)
        assert k[1 * 3 + 2, 0 * 3 + 1] == a[1, 0] * b[2, 1]

    def test_charter_n2_laplacian_by_hand(self):
        # I (x) (A_2/2 - I) + (sigma_x - I) (x) I, with A_2 = [[0, 2], [2, 0]] for the 2-cycle
        a2 = np.array([[0.0, 2.0], [2.0, 0.0]])
        got = kron(np.eye(2), a2 / 2 - np.eye(2)) + kron(SIGMA_X - np.eye(2), np.eye(2))
        expect = np.array([
            [-2, 1, 1, 0],
            [1, -2, 0, 1],
            [1, 0, -2, 1],
            [0, 1, 1, -2],
        ])
        np.testing.assert_array_equal(got, expect)

    def test_mixed_product(self):
        rng = np.random.default_rng(7)
        a, c = rng.normal(size=(2, 2, 2))
        b, d = rng.normal(size=(2, 3, 3))
        assert np.max(np.abs(kron(a, b) @ kron(c, d) - kron(a @ c, b @ d))) <= 1e-12

    def test_kron_sum_two_terms(self):
        a = np.array([[1.0, 2.0], [2.0, 0.0]])
        b = np.diag([1.0, 2.0, 3.0])
        np.testing.assert_array_equal(kron_sum([a, b]), kron(a, np.eye(3)) + kron(np.eye(2), b))


class TestExpmAction:
    def test_zero_scale(self):
        d = hermitian_eigendecomposition(SIGMA_X)
        v = np.array([0.3, 0.7j])
        np.testing.assert_allclose(expm_action(d, 0, v), v, atol=1e-15)

    @pytest.mark.parametrize("t", [0.0, 0.4, 1.0, 2.5])
    def test_sigma_x(self, t):
        d = hermitian_eigendecomposition(SIGMA_X)
        got = expm_action(d, -1j * t, [1, 0])
        np.testing.assert_allclose(got, [np.cos(t), -1j * np.sin(t)], atol=1e-14)

    def test_taylor_oracle_5x5(self):
        rng = np.random.default_rng(5)
        h = random_hermitian(rng, 5)
        v = rng.normal(size=5) + 1j * rng.normal(size=5)
        d = hermitian_eigendecomposition(h)
        for scale in (-1j * 0.3, -1j * 4.0, 0.7, -2.0 + 1j):
            assert np.max(np.abs(expm_action(d, scale, v) - taylor_expm_action(h, scale, v))) <= 1e-9

    def test_norm_preserved(self):
        rng = np.random.default_rng(11)
        h = random_hermitian(rng, 9)
        d = hermitian_eigendecomposition(h)
        v = rng.normal(size=9) + 1j * rng.normal(size=9)
        v /= np.linalg.norm(v)
        for t in np.linspace(-30, 30, 13):
            assert abs(np.linalg.norm(expm_action(d, -1j * t, v)) - 1) <= 1e-10

    def test_semigroup(self):
        rng = np.random.default_rng(12)
        h = random_hermitian(rng, 6)
        d = hermitian_eigendecomposition(h)
        v = rng.normal(size=6).astype(complex)
        s1, s2 = -0.8j, 0.3 - 1.1j
        lhs = expm_action(d, s1, expm_action(d, s2, v))
        assert np.max(np.abs(lhs - expm_action(d, s1 + s2, v))) <= 1e-9

    def test_dimension_mismatch(self):
        d = hermitian_eigendecomposition(np.eye(3))
        with pytest.raises(DimensionError):
            expm_action(d, 1.0, np.ones(2))

    def test_matrix_argument(self):
        d = hermitian_eigendecomposition(SIGMA_X)
        got = expm_action(d, -1j * 0.5, np.eye(2))
        np.testing.assert_allclose(got, taylor_expm_action(SIGMA_X, -0.5j, np.eye(2)), atol=1e-12)


def test_predicates():
    assert is_hermitian(np.array([[1, 1j], [-1j, 2]]))
    assert not is_symmetric_real(np.array([[1, 1j], [-1j, 2]]))
    assert is_symmetric_real(SIGMA_X)
    assert not is_unitary(np.ones((2, 2)))


def test_spectral_decomposition_is_frozen():
    d = SpectralDecomposition(np.array([1.0]), np.eye(1))
    with pytest.raises(AttributeError):
        d.eigenvalues = np.array([2.0])
