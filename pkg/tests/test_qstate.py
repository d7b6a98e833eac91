import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from entcharge import (
    DensityOperator,
    InvalidInput,
    bell_state,
    gibbs_probabilities,
    gibbs_state,
    hermitian_eig,
    mutual_information,
    partial_trace,
    von_neumann_entropy,
)
from entcharge.ring import ring_hamiltonian
from entcharge.thermal import ModelKind, model_couplings, xyz_hamiltonian

from conftest import random_density

# frozen oracle: -sum(p log2 p) over (0.44040, 0.05960, 0.05960, 0.44040)
ISING_X1_ENTROPY = 1.5270653410031616
# frozen oracle: Gibbs weights of scaled energies (0, 0, 2, -2), ascending
XX_Y1_SPECTRUM = (0.01420934, 0.10499359, 0.10499359, 0.77580349)


class TestDensityOperator:
    def test_rejects_non_hermitian(self):
        m = np.array([[0.5, 0.1], [0.0, 0.5]], dtype=complex)
        with pytest.raises(InvalidInput):
            DensityOperator(m, (2,))

    def test_rejects_bad_trace(self):
        with pytest.raises(InvalidInput):
            DensityOperator(np.eye(2), (2,))

    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(InvalidInput):
            DensityOperator(np.diag([1.5, -0.5]), (2,))

    def test_rejects_dims_mismatch(self):
        with pytest.raises(InvalidInput):
            DensityOperator(np.eye(4) / 4, (2, 3))


class TestPartialTrace:
    def test_bell_marginal_is_maximally_mixed(self):
        rho = bell_state(2).projector()
        red = partial_trace(rho, [0])
        assert np.abs(red.matrix - np.eye(2) / 2).max() < 1e-12

    def test_product_state_factorizes(self, rng):
        rho_a = random_density(rng, (2,))
        rho_b = random_density(rng, (3,))
        joint = DensityOperator(np.kron(rho_a.matrix, rho_b.matrix), (2, 3))
        assert np.abs(partial_trace(joint, [0]).matrix - rho_a.matrix).max() < 1e-12
        assert np.abs(partial_trace(joint, [1]).matrix - rho_b.matrix).max() < 1e-12

    def test_infinite_temperature_ring_pair(self):
        rho = gibbs_state(ring_hamiltonian(4), 0.0, dims=(2, 2, 2, 2))
        red = partial_trace(rho, [0, 1])
        assert np.abs(red.matrix - np.eye(4) / 4).max() < 1e-12
        assert red.dims == (2, 2)

    def test_rejects_bad_keep(self):
        rho = DensityOperator(np.eye(4) / 4, (2, 2))
        with pytest.raises(InvalidInput):
            partial_trace(rho, [])
        with pytest.raises(InvalidInput):
            partial_trace(rho, [0, 1])
        with pytest.raises(InvalidInput):
            partial_trace(rho, [2])


class TestEntropy:
    def test_maximally_mixed(self):
        assert von_neumann_entropy(DensityOperator(np.eye(4) / 4, (2, 2))) == pytest.approx(2.0)

    def test_pure_state(self):
        assert von_neumann_entropy(bell_state(1).projector()) == pytest.approx(0.0, abs=1e-12)

    def test_ising_bell_diagonal(self):
        p = np.array([0.44039854, 0.05960146, 0.05960146, 0.44039854])
        p /= p.sum()
        rho = DensityOperator(np.diag(p), (2, 2))
        assert von_neumann_entropy(rho) == pytest.approx(ISING_X1_ENTROPY, abs=1e-4)


class TestHermitianEig:
    def test_identity_over_four(self):
        sd = hermitian_eig(np.eye(4) / 4)
        assert np.allclose(sd.eigenvalues, 0.25)
        assert sd.degeneracy_groups == [[0, 1, 2, 3]]

    def test_diagonal_ascending(self):
        sd = hermitian_eig(np.diag([0.4, 0.1, 0.3, 0.2]))
        assert np.allclose(sd.eigenvalues, [0.1, 0.2, 0.3, 0.4])
        perm = np.abs(sd.eigenvectors)
        assert np.allclose(perm @ perm.T, np.eye(4))

    def test_xx_thermal_spectrum(self):
        h = xyz_hamiltonian(model_couplings(ModelKind.XX, 1.0))
        rho = gibbs_state(h, 1.0, dims=(2, 2))
        sd = hermitian_eig(rho.matrix)
        assert np.abs(sd.eigenvalues - np.array(XX_Y1_SPECTRUM)).max() < 1e-5

    def test_deterministic_in_degenerate_subspace(self):
        m = np.eye(4) / 4
        a = hermitian_eig(m).eigenvectors
        b = hermitian_eig(m.copy()).eigenvectors
        assert np.array_equal(a, b)

    @pytest.mark.parametrize("dim", [8, 64, 256, 1024])
    def test_reconstruction_residual(self, rng, dim):
        a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        h = (a + a.conj().T) / (2 * np.sqrt(dim))
        sd = hermitian_eig(h)
        recon = (sd.eigenvectors * sd.eigenvalues) @ sd.eigenvectors.conj().T
        assert np.abs(recon - h).max() < 1e-9
        gram = sd.eigenvectors.conj().T @ sd.eigenvectors
        assert np.abs(gram - np.eye(dim)).max() < 1e-9


class TestGibbs:
    def test_equal_energies_uniform(self):
        p = gibbs_probabilities([3.0, 3.0, 3.0])
        assert np.allclose(p, 1 / 3)

    def test_ising_x1(self):
        p = gibbs_probabilities([-1.0, 1.0, 1.0, -1.0])
        assert p[0] == pytest.approx(0.44040, abs=1e-5)
        assert p[1] == pytest.approx(0.05960, abs=1e-5)

    def test_xx_y1(self):
        p = gibbs_probabilities([0.0, 0.0, 2.0, -2.0])
        assert p[3] == pytest.approx(0.77580, abs=1e-5)

    def test_rejects_non_finite(self):
        with pytest.raises(InvalidInput):
            gibbs_probabilities([0.0, np.inf])

    def test_overflow_guard(self):
        p = gibbs_probabilities([-700.0, 700.0])
        assert np.isfinite(p).all() and p.sum() == pytest.approx(1.0, abs=1e-14)

    @given(st.floats(-100, 100), st.integers(0, 2**32 - 1))
    @settings(max_examples=50, deadline=None)
    def test_shift_invariance(self, shift, seed):
        e = np.random.default_rng(seed).uniform(-50, 50, size=6)
        assert np.abs(gibbs_probabilities(e) - gibbs_probabilities(e + shift)).max() < 1e-12

    def test_beta_zero_is_maximally_mixed(self, rng):
        h = rng.normal(size=(8, 8))
        h = h + h.T
        rho = gibbs_state(h, 0.0)
        assert np.abs(rho.matrix - np.eye(8) / 8).max() < 1e-12

    def test_xyz_consistency_with_bell_weights(self):
        from entcharge.thermal import bell_spectrum
        c = model_couplings(ModelKind.HEISENBERG, 0.7)
        rho = gibbs_state(xyz_hamiltonian(c), 1.0, dims=(2, 2))
        expected = np.sort(gibbs_probabilities(np.array(bell_spectrum(c))))
        assert np.abs(np.linalg.eigvalsh(rho.matrix) - expected).max() < 1e-12

    def test_commutes_with_hamiltonian(self, rng):
        h = rng.normal(size=(8, 8))
        h = h + h.T
        rho = gibbs_state(h, 0.3)
        comm = rho.matrix @ h - h @ rho.matrix
        assert np.abs(comm).max() < 1e-9

    def test_m3_ring_low_temperature_support(self):
        h = ring_hamiltonian(3)
        rho = gibbs_state(h, 50.0, dims=(2, 2, 2))
        vals, vecs = np.linalg.eigh(h)
        # Boltzmann weights of the +3J eigenspace are e^{-300}; the assembled
        # matrix can only witness them down to the double-precision floor.
        weights = gibbs_probabilities(50.0 * vals)
        assert weights[vals > 0].max() < 1e-40
        for j in range(len(vals)):
            if vals[j] > 0:
                pop = np.real(vecs[:, j].conj() @ rho.matrix @ vecs[:, j])
                assert abs(pop) < 1e-12

    def test_eigenvalues_match_gibbs_probabilities(self, rng):
        h = rng.normal(size=(6, 6))
        h = h + h.T
        beta = 0.8
        rho = gibbs_state(h, beta)
        expected = np.sort(gibbs_probabilities(beta * np.linalg.eigvalsh(h)))
        assert np.abs(np.linalg.eigvalsh(rho.matrix) - expected).max() < 1e-10


class TestMutualInformation:
    def test_product_state_zero(self, rng):
        rho_a = random_density(rng, (2,))
        rho_b = random_density(rng, (2,))
        joint = DensityOperator(np.kron(rho_a.matrix, rho_b.matrix), (2, 2))
        assert mutual_information(joint) == pytest.approx(0.0, abs=1e-9)

    def test_bell_state_two_bits(self):
        assert mutual_information(bell_state(2).projector()) == pytest.approx(2.0, abs=1e-9)

    def test_maximally_mixed_zero(self):
        rho = DensityOperator(np.eye(4) / 4, (2, 2))
        assert mutual_information(rho) == pytest.approx(0.0, abs=1e-12)


@given(st.integers(0, 2**32 - 1), st.sampled_from([(2, 2), (2, 3), (3, 3), (2, 2, 2)]))
@settings(max_examples=60, deadline=None)
def test_random_state_properties(seed, dims):
    rng = np.random.default_rng(seed)
    rho = random_density(rng, dims)
    s = von_neumann_entropy(rho)
    assert 0.0 <= s <= np.log2(rho.dim) + 1e-9
    red = partial_trace(rho, [0])
    assert abs(np.trace(red.matrix).real - 1.0) < 1e-10
    assert np.abs(red.matrix - red.matrix.conj().T).max() < 1e-12
    assert mutual_information(rho) >= -1e-9
