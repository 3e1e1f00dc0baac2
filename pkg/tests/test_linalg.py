import numpy as np
import pytest

from envcap.linalg import (
    binary_entropy,
    bloch_density,
    check_density_matrix,
    entropy,
    haar_unitary,
    herm_eigvals,
    maximally_entangled,
    maximally_mixed,
    partial_trace,
    projector,
    random_density_matrix,
    random_pure_state,
    tensor,
)

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SZ = np.diag([1.0, -1.0]).astype(complex)


def ptrace_index_sum(m, d1, d2, keep):
    """Independent oracle: explicit index summation."""
    m = m.reshape(d1, d2, d1, d2)
    if keep == 0:
        return np.einsum("ijkj->ik", m)
    return np.einsum("ijil->jl", m)


class TestTensor:
    def test_identity(self):
        assert np.array_equal(tensor(np.eye(2), np.eye(2)), np.eye(4))

    def test_projector_block(self):
        out = tensor(projector([1, 0]), SX)
        expected = np.zeros((4, 4), complex)
        expected[:2, :2] = SX
        assert np.abs(out - expected).max() == 0

    def test_mixed_product_identity(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            a, b, c, d = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
                          for _ in range(4))
            lhs = tensor(a, b) @ tensor(c, d)
            rhs = tensor(a @ c, b @ d)
            assert np.abs(lhs - rhs).max() < 1e-12

    def test_associative(self):
        # products are reassociated, so only up to rounding
        rng = np.random.default_rng(12)
        a, b, c = (rng.standard_normal((2, 2)) for _ in range(3))
        assert np.abs(tensor(tensor(a, b), c) - tensor(a, tensor(b, c))).max() < 1e-15


class TestPartialTrace:
    def test_maximally_entangled_reduction(self):
        rho = projector(maximally_entangled(2))
        for keep in (0, 1):
            out = partial_trace(rho, (2, 2), keep)
            assert np.abs(out - np.eye(2) / 2).max() < 1e-14

    def test_product_state(self):
        rng = np.random.default_rng(13)
        rho = random_density_matrix(2, rng)
        sigma = random_density_matrix(2, rng)
        out = partial_trace(tensor(rho, sigma), (2, 2), 0)
        assert np.abs(out - rho).max() < 1e-13

    def test_against_index_sum_oracle(self):
        rng = np.random.default_rng(14)
        for keep in (0, 1):
            m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            m = m + m.conj().T
            out = partial_trace(m, (2, 2), keep)
            assert np.abs(out - ptrace_index_sum(m, 2, 2, keep)).max() < 1e-13

    def test_trace_preserved(self):
        rng = np.random.default_rng(15)
        for dims in ((2, 2), (2, 4), (4, 2)):
            m = rng.standard_normal((dims[0] * dims[1],) * 2) * 1j
            m = m + rng.standard_normal(m.shape)
            for keep in (0, 1):
                out = partial_trace(m, dims, keep)
                assert abs(np.trace(out) - np.trace(m)) < 1e-12

    def test_multi_subsystem(self):
        rng = np.random.default_rng(16)
        rho = random_density_matrix(8, rng)
        a = partial_trace(rho, (2, 2, 2), keep=(0, 2))
        b = partial_trace(partial_trace(rho, (2, 4), 1), (2, 2), 1)
        # keep (0,2) then drop nothing vs trace middle qubit stepwise
        c = partial_trace(rho, (4, 2), 1)
        assert a.shape == (4, 4)
        assert abs(np.trace(a) - 1) < 1e-12
        assert np.abs(b - partial_trace(a, (2, 2), 1)).max() < 1e-12
        assert np.abs(c - partial_trace(a, (2, 2), 1)).max() < 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            partial_trace(np.eye(6), (2, 2), 0)


class TestHermEigvals:
    def test_pauli_z(self):
        assert np.allclose(herm_eigvals(SZ), [-1.0, 1.0])

    def test_maximally_mixed(self):
        assert np.allclose(herm_eigvals(maximally_mixed(2)), [0.5, 0.5])

    def test_quadratic_formula_oracle(self):
        rng = np.random.default_rng(17)
        for _ in range(50):
            h = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
            h = h + h.conj().T
            tr = np.trace(h).real
            det = np.linalg.det(h).real
            disc = np.sqrt(tr * tr / 4 - det)
            expected = np.sort([tr / 2 - disc, tr / 2 + disc])
            assert np.abs(herm_eigvals(h) - expected).max() < 1e-12

    def test_sum_is_trace(self):
        rng = np.random.default_rng(18)
        h = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        h = h + h.conj().T
        assert abs(herm_eigvals(h).sum() - np.trace(h).real) < 1e-10

    def test_projector_spectrum(self):
        rng = np.random.default_rng(19)
        p = projector(random_pure_state(4, rng))
        w = herm_eigvals(p)
        assert np.abs(w - np.round(w)).max() < 1e-9

    def test_non_hermitian_rejected(self):
        with pytest.raises(ValueError):
            herm_eigvals(np.array([[0, 1], [0, 0]], dtype=complex))


class TestEntropy:
    def test_maximally_mixed_qubit(self):
        assert entropy(maximally_mixed(2)) == pytest.approx(1.0, abs=1e-12)

    def test_pure_state(self):
        rng = np.random.default_rng(20)
        assert entropy(projector(random_pure_state(3, rng))) == pytest.approx(0.0, abs=1e-9)

    def test_binary_value(self):
        assert entropy(np.diag([0.75, 0.25]).astype(complex)) == pytest.approx(
            0.811278, abs=1e-6)

    def test_matches_binary_entropy(self):
        for x in (0.1, 0.25, 0.5, 0.9):
            assert entropy(np.diag([x, 1 - x]).astype(complex)) == pytest.approx(
                binary_entropy(x), abs=1e-12)

    def test_invalid_density_rejected(self):
        with pytest.raises(ValueError):
            entropy(np.diag([0.9, 0.3]))
        with pytest.raises(ValueError):
            entropy(np.array([[0.5, 0.5], [0.0, 0.5]]))

    def test_unitary_invariance(self):
        rng = np.random.default_rng(21)
        for _ in range(10):
            rho = random_density_matrix(4, rng)
            u = haar_unitary(4, rng)
            assert entropy(u @ rho @ u.conj().T) == pytest.approx(
                entropy(rho), abs=1e-9)


class TestBinaryEntropy:
    @pytest.mark.parametrize("x,expected", [(0.5, 1.0), (0.0, 0.0), (1.0, 0.0)])
    def test_exact_points(self, x, expected):
        assert binary_entropy(x) == pytest.approx(expected, abs=1e-15)

    def test_quarter(self):
        assert binary_entropy(0.25) == pytest.approx(0.811278, abs=1e-6)

    def test_symmetry(self):
        for x in np.linspace(0, 1, 21):
            assert binary_entropy(x) == pytest.approx(binary_entropy(1 - x), abs=1e-14)

    @pytest.mark.parametrize("x", [-0.1, 1.1])
    def test_domain(self, x):
        with pytest.raises(ValueError):
            binary_entropy(x)


def test_bloch_density_validity():
    rng = np.random.default_rng(22)
    for _ in range(20):
        r = rng.uniform(-2, 2, 3)
        check_density_matrix(bloch_density(r))
