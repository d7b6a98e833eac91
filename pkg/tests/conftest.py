import numpy as np
import pytest

from entcharge import DensityOperator, Ket, OrthogonalPureEnsemble


def random_density(rng: np.random.Generator, dims) -> DensityOperator:
    d = int(np.prod(dims))
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    rho = a @ a.conj().T
    rho /= np.trace(rho).real
    return DensityOperator(rho, dims)


def random_ket(rng: np.random.Generator, dims) -> Ket:
    d = int(np.prod(dims))
    v = rng.normal(size=d) + 1j * rng.normal(size=d)
    return Ket(v / np.linalg.norm(v), dims)


def random_orthogonal_ensemble(rng: np.random.Generator, split=(2, 2),
                               n_members=None) -> OrthogonalPureEnsemble:
    d = split[0] * split[1]
    n = n_members or int(rng.integers(2, d + 1))
    a = rng.normal(size=(d, n)) + 1j * rng.normal(size=(d, n))
    q, _ = np.linalg.qr(a)
    probs = rng.random(n)
    probs /= probs.sum()
    members = tuple((probs[k], Ket(q[:, k], split)) for k in range(n))
    return OrthogonalPureEnsemble(members, split)


@pytest.fixture
def rng():
    return np.random.default_rng(20260827)
