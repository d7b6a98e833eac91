"""Dense quantum-state primitives.

Tensor convention: subsystem index 0 is the leftmost Kronecker factor and
the most significant digit of the computational-basis index. All entropies
are in bits (log base 2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInput, NumericalFailure

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
EIGVAL_FLOOR = -1e-9
NORM_TOL = 1e-12
DEGENERACY_GAP = 1e-9


def _as_complex_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInput(f"expected a square matrix, got shape {a.shape}")
    return a


@dataclass(frozen=True)
class DensityOperator:
    """Hermitian, unit-trace, PSD matrix with a subsystem-dimension annotation."""

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        m = _as_complex_matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if int(np.prod(dims)) != m.shape[0]:
            raise InvalidInput(f"dims {dims} do not match matrix dimension {m.shape[0]}")
        if np.abs(m - m.conj().T).max() > HERMITICITY_TOL:
            raise InvalidInput("matrix is not Hermitian within 1e-10")
        if abs(np.trace(m).real - 1.0) > TRACE_TOL or abs(np.trace(m).imag) > TRACE_TOL:
            raise InvalidInput("trace differs from 1 beyond 1e-10")
        if np.linalg.eigvalsh(m).min() < EIGVAL_FLOOR:
            raise InvalidInput("matrix has an eigenvalue below -1e-9")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class Ket:
    """Unit vector with a subsystem-dimension annotation."""

    amplitudes: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        a = np.asarray(self.amplitudes, dtype=complex).ravel()
        object.__setattr__(self, "amplitudes", a)
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if int(np.prod(dims)) != a.size:
            raise InvalidInput(f"dims {dims} do not match vector length {a.size}")
        if abs(np.linalg.norm(a) - 1.0) > NORM_TOL:
            raise InvalidInput("ket is not normalized within 1e-12")

    def projector(self) -> DensityOperator:
        return DensityOperator(np.outer(self.amplitudes, self.amplitudes.conj()), self.dims)


@dataclass(frozen=True)
class SpectralDecomposition:
    eigenvalues: np.ndarray             # real, ascending
    eigenvectors: np.ndarray            # columns, orthonormal, phase-fixed
    degeneracy_groups: list = field(default_factory=list)

    @property
    def is_degenerate(self) -> bool:
        return len(self.degeneracy_groups) < len(self.eigenvalues)


def _fix_phase(v: np.ndarray) -> np.ndarray:
    for a in v:
        if abs(a) > 1e-12:
            return v * (a.conj() / abs(a))
    return v


def hermitian_eig(matrix) -> SpectralDecomposition:
    """Eigendecomposition with deterministic ordering.

    Eigenvalues ascending; within a degenerate group, vectors are phase-fixed
    (first nonzero amplitude real positive) and sorted lexicographically by
    their (real, imag) amplitude sequences.
    """
    m = _as_complex_matrix(matrix)
    if np.abs(m - m.conj().T).max() > HERMITICITY_TOL:
        raise InvalidInput("matrix is not Hermitian within 1e-10")
    try:
        vals, vecs = np.linalg.eigh(m)
    except np.linalg.LinAlgError as e:
        raise NumericalFailure(f"eigensolver failed: {e}") from e

    scale = max(1.0, float(np.abs(vals).max()))
    gap = DEGENERACY_GAP * scale
    groups = []
    start = 0
    for k in range(1, len(vals) + 1):
        if k == len(vals) or vals[k] - vals[k - 1] > gap:
            groups.append(list(range(start, k)))
            start = k

    vecs = vecs.copy()
    for j in range(vecs.shape[1]):
        vecs[:, j] = _fix_phase(vecs[:, j])
    for g in groups:
        if len(g) > 1:
            order = sorted(
                g,
                key=lambda j: tuple(
                    (round(x.real, 10), round(x.imag, 10)) for x in vecs[:, j]
                ),
            )
            vecs[:, g] = vecs[:, order]
    return SpectralDecomposition(eigenvalues=vals, eigenvectors=vecs, degeneracy_groups=groups)


def partial_trace(rho: DensityOperator, keep) -> DensityOperator:
    """Trace out all subsystems not in `keep`, preserving their order."""
    keep = sorted(set(int(k) for k in keep))
    n = len(rho.dims)
    if not keep or any(k < 0 or k >= n for k in keep) or len(keep) >= n:
        raise InvalidInput(f"keep={keep} must be a nonempty strict subset of range({n})")
    t = rho.matrix.reshape(rho.dims + rho.dims)
    for q in sorted((i for i in range(n) if i not in keep), reverse=True):
        half = t.ndim // 2
        t = np.trace(t, axis1=q, axis2=q + half)
    new_dims = tuple(rho.dims[k] for k in keep)
    d = int(np.prod(new_dims))
    return DensityOperator(t.reshape(d, d), new_dims)


def _clipped_probabilities(vals: np.ndarray) -> np.ndarray:
    p = np.clip(np.real(vals), 0.0, 1.0)
    s = p.sum()
    if s <= 0:
        raise InvalidInput("spectrum sums to zero after clipping")
    return p / s


def entropy_bits(probs) -> float:
    """Shannon entropy in bits, with 0*log(0) = 0."""
    p = np.asarray(probs, dtype=float)
    p = p[p > 0]
    return float(-(p * np.log2(p)).sum()) if p.size else 0.0


def von_neumann_entropy(rho: DensityOperator) -> float:
    """Entropy in bits; eigenvalues clipped to [0, 1] and renormalized."""
    vals = np.linalg.eigvalsh(rho.matrix)
    return entropy_bits(_clipped_probabilities(vals))


def gibbs_probabilities(scaled_energies) -> np.ndarray:
    """Boltzmann weights from dimensionless E_j/kT, overflow-guarded."""
    e = np.asarray(scaled_energies, dtype=float)
    if not np.all(np.isfinite(e)):
        raise InvalidInput("scaled energies must be finite")
    w = np.exp(-(e - e.min()))
    return w / w.sum()


def gibbs_state(hamiltonian, beta: float, dims=None) -> DensityOperator:
    """Thermal state e^{-beta H}/Z via spectral decomposition."""
    if not np.isfinite(beta) or beta < 0:
        raise InvalidInput("beta must be finite and nonnegative")
    sd = hermitian_eig(hamiltonian)
    p = gibbs_probabilities(beta * sd.eigenvalues)
    rho = (sd.eigenvectors * p) @ sd.eigenvectors.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    if dims is None:
        dims = (rho.shape[0],)
    return DensityOperator(rho, dims)


def mutual_information(rho: DensityOperator, cut: int = 1) -> float:
    """I(A;B) = S(A) + S(B) - S(AB), with A the first `cut` subsystems."""
    n = len(rho.dims)
    if not 0 < cut < n:
        raise InvalidInput(f"cut={cut} does not define a bipartition of {n} subsystems")
    rho_a = partial_trace(rho, range(cut))
    rho_b = partial_trace(rho, range(cut, n))
    return von_neumann_entropy(rho_a) + von_neumann_entropy(rho_b) - von_neumann_entropy(rho)
