"""Entanglement charge of orthogonal pure ensembles and bipartite states.

The charge N is bounded by conditional entropies from above and by the
average member entanglement minus the mutual information from below; for
ensembles of mutually orthogonal maximally entangled states all bounds
coincide at S(rho) - log2(d). Positive N marks information nonlocality,
negative N entanglement nonlocality.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidInput
from .qstate import (
    DensityOperator,
    Ket,
    entropy_bits,
    hermitian_eig,
    mutual_information,
    partial_trace,
    von_neumann_entropy,
)

ORTHOGONALITY_TOL = 1e-9
PROB_SUM_TOL = 1e-10
EXACTNESS_TOL = 1e-9
CLASS_DEADBAND = 1e-9
MAX_ENT_TOL = 1e-9
BELL_OFFDIAG_TOL = 1e-10

# Bell basis columns |Phi_1..4> = (|00>-|11>, |00>+|11>, |01>+|10>, |01>-|10>)/sqrt(2)
BELL_BASIS = np.array(
    [
        [1, 1, 0, 0],
        [0, 0, 1, 1],
        [0, 0, 1, -1],
        [-1, 1, 0, 0],
    ],
    dtype=complex,
) / np.sqrt(2.0)


def bell_state(j: int) -> Ket:
    """|Phi_j> for j in 1..4."""
    if j not in (1, 2, 3, 4):
        raise InvalidInput("Bell state index must be in 1..4")
    return Ket(BELL_BASIS[:, j - 1], (2, 2))


class NonlocalityClass(Enum):
    INFORMATION = "Information"
    ENTANGLEMENT = "Entanglement"
    NEITHER = "Neither"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class OrthogonalPureEnsemble:
    """Probability-weighted, mutually orthogonal pure states on A (x) B."""

    members: tuple            # of (prob, Ket)
    split: tuple[int, int]

    def __post_init__(self):
        members = tuple((float(p), k) for p, k in self.members)
        object.__setattr__(self, "members", members)
        split = (int(self.split[0]), int(self.split[1]))
        object.__setattr__(self, "split", split)
        if not members:
            raise InvalidInput("ensemble has no members")
        probs = np.array([p for p, _ in members])
        if probs.min() < -PROB_SUM_TOL or abs(probs.sum() - 1.0) > PROB_SUM_TOL:
            raise InvalidInput("probabilities must be nonnegative and sum to 1")
        d = split[0] * split[1]
        for _, k in members:
            if k.amplitudes.size != d:
                raise InvalidInput("member dimension does not match split")
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                ov = abs(np.vdot(members[i][1].amplitudes, members[j][1].amplitudes))
                if ov > ORTHOGONALITY_TOL:
                    raise InvalidInput(f"members {i},{j} overlap {ov:.2e} > 1e-9")

    def average_state(self) -> DensityOperator:
        rho = np.zeros((self.split[0] * self.split[1],) * 2, dtype=complex)
        for p, k in self.members:
            rho += p * np.outer(k.amplitudes, k.amplitudes.conj())
        return DensityOperator(rho, self.split)


@dataclass(frozen=True)
class ChargeBounds:
    upper_ab: float
    upper_ba: float
    lower: float
    exact: float | None = None

    @property
    def interval(self) -> tuple[float, float]:
        return (self.lower, min(self.upper_ab, self.upper_ba))


@dataclass(frozen=True)
class ChargeResult:
    value: float | tuple[float, float]   # exact bits, or (lower, upper)
    nonlocality: NonlocalityClass
    degenerate_spectrum: bool = False

    @property
    def is_exact(self) -> bool:
        return not isinstance(self.value, tuple)


def classify(value) -> NonlocalityClass:
    """Map an exact charge or an interval to a nonlocality class."""
    if isinstance(value, tuple):
        lo, hi = value
        if lo > CLASS_DEADBAND:
            return NonlocalityClass.INFORMATION
        if hi < -CLASS_DEADBAND:
            return NonlocalityClass.ENTANGLEMENT
        if abs(lo) <= CLASS_DEADBAND and abs(hi) <= CLASS_DEADBAND:
            return NonlocalityClass.NEITHER
        return NonlocalityClass.INDETERMINATE
    if value > CLASS_DEADBAND:
        return NonlocalityClass.INFORMATION
    if value < -CLASS_DEADBAND:
        return NonlocalityClass.ENTANGLEMENT
    return NonlocalityClass.NEITHER


def charge_bounds(ens: OrthogonalPureEnsemble) -> ChargeBounds:
    """Upper/lower charge bounds for an orthogonal pure ensemble."""
    rho = ens.average_state()
    s_ab = von_neumann_entropy(rho)
    s_a = von_neumann_entropy(partial_trace(rho, [0]))
    s_b = von_neumann_entropy(partial_trace(rho, [1]))
    avg_member_ent = 0.0
    for p, k in ens.members:
        if p <= 0:
            continue
        red = partial_trace(k.projector(), [0])
        avg_member_ent += p * von_neumann_entropy(red)
    mutual = s_a + s_b - s_ab
    upper_ab = s_ab - s_b
    upper_ba = s_ab - s_a
    lower = avg_member_ent - mutual
    exact = None
    if min(upper_ab, upper_ba) - lower < EXACTNESS_TOL:
        exact = 0.5 * (lower + min(upper_ab, upper_ba))
    return ChargeBounds(upper_ab=upper_ab, upper_ba=upper_ba, lower=lower, exact=exact)


def _is_maximally_entangled(k: Ket, d: int) -> bool:
    red = partial_trace(k.projector(), [0])
    return np.abs(red.matrix - np.eye(d) / d).max() < MAX_ENT_TOL


def charge_max_entangled_ensemble(ens: OrthogonalPureEnsemble) -> float:
    """Exact charge S(rho) - log2(d) for maximally entangled orthogonal members."""
    d_a, d_b = ens.split
    if d_a != d_b:
        raise InvalidInput("maximally entangled ensembles require equal local dimensions")
    for i, (_, k) in enumerate(ens.members):
        if not _is_maximally_entangled(k, d_a):
            raise InvalidInput(f"member {i} is not maximally entangled within 1e-9")
    return von_neumann_entropy(ens.average_state()) - np.log2(d_a)


def to_bell_basis(rho: DensityOperator) -> tuple[np.ndarray, bool]:
    """Matrix in the Bell basis plus a Bell-diagonality flag."""
    if rho.dims != (2, 2):
        raise InvalidInput("Bell basis transform requires dims (2, 2)")
    m = BELL_BASIS.conj().T @ rho.matrix @ BELL_BASIS
    off = m - np.diag(np.diag(m))
    return m, bool(np.abs(off).max() < BELL_OFFDIAG_TOL)


def state_charge(rho: DensityOperator, cut: int = 1) -> ChargeResult:
    """Charge of a bipartite state via its eigenstate ensemble.

    Pure states and states with a maximally entangled orthogonal eigenbasis
    (including Bell-diagonal two-qubit states, where degenerate subspaces are
    resolved in the Bell basis) get exact values; otherwise the canonical
    eigen-ensemble's bounds interval is returned, promoted to exact when the
    bounds coincide.
    """
    n = len(rho.dims)
    if not 0 < cut < n:
        raise InvalidInput(f"cut={cut} does not define a bipartition of {n} subsystems")
    dims_a = int(np.prod(rho.dims[:cut]))
    dims_b = int(np.prod(rho.dims[cut:]))
    split = (dims_a, dims_b)

    sd = hermitian_eig(rho.matrix)
    degenerate = sd.is_degenerate

    if sd.eigenvalues.max() > 1.0 - EXACTNESS_TOL:      # pure state
        k = Ket(sd.eigenvectors[:, -1], split)
        value = -von_neumann_entropy(partial_trace(k.projector(), [0]))
        return ChargeResult(value=value, nonlocality=classify(value),
                            degenerate_spectrum=degenerate)

    if split == (2, 2):
        bell, is_diag = to_bell_basis(DensityOperator(rho.matrix, (2, 2)))
        if is_diag:
            probs = np.clip(np.real(np.diag(bell)), 0.0, 1.0)
            value = entropy_bits(probs / probs.sum()) - 1.0
            return ChargeResult(value=value, nonlocality=classify(value),
                                degenerate_spectrum=degenerate)

    if dims_a == dims_b and all(
        _is_maximally_entangled(Ket(sd.eigenvectors[:, j], split), dims_a)
        for j in range(sd.eigenvectors.shape[1])
        if sd.eigenvalues[j] > 1e-12
    ):
        value = von_neumann_entropy(rho) - np.log2(dims_a)
        return ChargeResult(value=value, nonlocality=classify(value),
                            degenerate_spectrum=degenerate)

    members = tuple(
        (max(float(sd.eigenvalues[j]), 0.0), Ket(sd.eigenvectors[:, j], split))
        for j in range(len(sd.eigenvalues))
        if sd.eigenvalues[j] > 1e-12
    )
    total = sum(p for p, _ in members)
    members = tuple((p / total, k) for p, k in members)
    bounds = charge_bounds(OrthogonalPureEnsemble(members, split))
    if bounds.exact is not None:
        value = bounds.exact
    else:
        value = bounds.interval
    return ChargeResult(value=value, nonlocality=classify(value),
                        degenerate_spectrum=degenerate)


def concurrence_bell_diagonal(probs) -> float:
    """C = max{1, 2 p_j} - 1 for a Bell-diagonal state."""
    p = np.asarray(probs, dtype=float)
    if p.size != 4 or p.min() < -PROB_SUM_TOL or abs(p.sum() - 1.0) > 1e-9:
        raise InvalidInput("expected four nonnegative probabilities summing to 1")
    return max(1.0, float(2.0 * p.max())) - 1.0


_SY_SY = np.array(
    [
        [0, 0, 0, -1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
    ],
    dtype=complex,
)


def concurrence_general(rho: DensityOperator) -> float:
    """Wootters concurrence of an arbitrary two-qubit state."""
    if rho.dims != (2, 2):
        raise InvalidInput("concurrence requires dims (2, 2)")
    m = rho.matrix
    r = m @ _SY_SY @ m.conj() @ _SY_SY
    vals = np.linalg.eigvals(r)
    lam = np.sqrt(np.clip(np.real(vals), 0.0, None))
    lam = np.sort(lam)[::-1]
    return max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))
