"""Two-qubit XYZ thermal states: Bell spectrum, Gibbs weights, charge sweeps.

The XYZ Hamiltonian J1 sx(x)sx + J2 sy(x)sy + J3 sz(x)sz is diagonal in the
Bell basis, so the thermal state is Bell-diagonal and its charge reduces to
the shifted entropy S(p) - 1. The Ising/XX/Heisenberg specializations are
parameterized by the single dimensionless ratio J1/kT.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidInput, NoRoot
from .charge import BELL_BASIS, concurrence_bell_diagonal
from .qstate import entropy_bits, gibbs_probabilities

RATIO_CAP = 700.0
BISECTION_TOL = 1e-10
BISECTION_MAX_ITER = 200

_SX = np.array([[0, 1], [1, 0]], dtype=complex)
_SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SZ = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True)
class XYZCouplings:
    j1: float
    j2: float
    j3: float

    def __post_init__(self):
        if not all(np.isfinite([self.j1, self.j2, self.j3])):
            raise InvalidInput("couplings must be finite")


class ModelKind(Enum):
    ISING = "ising"          # (J1, 0, 0)
    XX = "xx"                # (J1, J1, 0)
    HEISENBERG = "heisenberg"  # (J1, J1, J1)
    XYZ = "xyz"              # unconstrained


def model_couplings(kind: ModelKind, j1: float) -> XYZCouplings:
    if kind is ModelKind.ISING:
        return XYZCouplings(j1, 0.0, 0.0)
    if kind is ModelKind.XX:
        return XYZCouplings(j1, j1, 0.0)
    if kind is ModelKind.HEISENBERG:
        return XYZCouplings(j1, j1, j1)
    raise InvalidInput("general XYZ needs explicit couplings, not a single ratio")


def xyz_hamiltonian(c: XYZCouplings) -> np.ndarray:
    """Explicit 4x4 matrix, used as a cross-check on the Bell spectrum."""
    return (
        c.j1 * np.kron(_SX, _SX)
        + c.j2 * np.kron(_SY, _SY)
        + c.j3 * np.kron(_SZ, _SZ)
    )


def bell_spectrum(c: XYZCouplings) -> tuple[float, float, float, float]:
    """Energies (E1..E4) of the Bell eigenstates."""
    return (
        -c.j1 + c.j2 + c.j3,
        +c.j1 - c.j2 + c.j3,
        +c.j1 + c.j2 - c.j3,
        -c.j1 - c.j2 - c.j3,
    )


@dataclass(frozen=True)
class ThermalPoint:
    ratio: float
    probs: np.ndarray        # (p1, p2, p3, p4) on the Bell basis
    entropy: float           # bits
    charge: float            # entropy - 1
    concurrence: float

    def __post_init__(self):
        object.__setattr__(self, "probs", np.asarray(self.probs, dtype=float))


def _point_from_scaled_spectrum(ratio: float, scaled: np.ndarray) -> ThermalPoint:
    p = gibbs_probabilities(scaled)
    s = entropy_bits(p)
    return ThermalPoint(
        ratio=float(ratio),
        probs=p,
        entropy=s,
        charge=s - 1.0,
        concurrence=concurrence_bell_diagonal(p),
    )


def thermal_point(kind: ModelKind, ratio: float) -> ThermalPoint:
    """Thermal point of a named model at the dimensionless ratio J1/kT."""
    if not np.isfinite(ratio) or abs(ratio) > RATIO_CAP:
        raise InvalidInput(f"ratio must be finite with |ratio| <= {RATIO_CAP}")
    c = model_couplings(kind, float(ratio))
    return _point_from_scaled_spectrum(ratio, np.array(bell_spectrum(c)))


def thermal_point_general(c: XYZCouplings, beta: float) -> ThermalPoint:
    """Thermal point of a general XYZ model at explicit inverse temperature."""
    if not np.isfinite(beta) or beta < 0:
        raise InvalidInput("beta must be finite and nonnegative")
    scaled = beta * np.array(bell_spectrum(c))
    if np.abs(scaled).max() > 4 * RATIO_CAP:
        raise InvalidInput("beta * couplings too large")
    return _point_from_scaled_spectrum(beta * c.j1, scaled)


def ising_charge_closed_form(x: float) -> float:
    """Charge of the Ising thermal state as a function of x = J1/kT.

    N = -q1 log2 q1 - q2 log2 q2 with q1 = 2p1 = 1/(1+e^{-2x}); stable
    for any finite x via the logistic form.
    """
    if not np.isfinite(x):
        raise InvalidInput("x must be finite")
    q1 = 1.0 / (1.0 + np.exp(-2.0 * x))
    q2 = 1.0 - q1
    return entropy_bits([q1, q2])


def sweep(kind: ModelKind, ratio_from: float, ratio_to: float, steps: int) -> list[ThermalPoint]:
    """Uniform inclusive grid of thermal points in ratio order."""
    if steps < 2 or not ratio_from < ratio_to:
        raise InvalidInput("need steps >= 2 and ratio_from < ratio_to")
    grid = np.linspace(ratio_from, ratio_to, steps)
    return [thermal_point(kind, r) for r in grid]


def find_transition(kind: ModelKind, quantity: str, bracket) -> tuple[float, int]:
    """Bisection root of the charge or of the concurrence surrogate 2 max p - 1.

    Returns (root, iterations). Absolute tolerance 1e-10.
    """
    a, b = float(bracket[0]), float(bracket[1])
    if not (np.isfinite(a) and np.isfinite(b)):
        raise InvalidInput("bracket endpoints must be finite")
    if a > b:
        a, b = b, a
    if quantity == "charge-zero":
        f = lambda r: thermal_point(kind, r).charge
    elif quantity == "concurrence-zero":
        f = lambda r: 2.0 * thermal_point(kind, r).probs.max() - 1.0
    else:
        raise InvalidInput(f"unknown quantity {quantity!r}")
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a, 0
    if fb == 0.0:
        return b, 0
    if fa * fb > 0:
        raise NoRoot(f"{quantity} does not change sign on [{a}, {b}]")
    iterations = 0
    while b - a > BISECTION_TOL and iterations < BISECTION_MAX_ITER:
        mid = 0.5 * (a + b)
        fm = f(mid)
        iterations += 1
        if fm == 0.0:
            return mid, iterations
        if fa * fm < 0:
            b, fb = mid, fm
        else:
            a, fa = mid, fm
    return 0.5 * (a + b), iterations
