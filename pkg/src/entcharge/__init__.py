"""Entanglement charge of thermal states: library and CLI."""

from .errors import InvalidInput, NoRoot, NumericalFailure
from .qstate import (
    DensityOperator,
    Ket,
    SpectralDecomposition,
    entropy_bits,
    gibbs_probabilities,
    gibbs_state,
    hermitian_eig,
    mutual_information,
    partial_trace,
    von_neumann_entropy,
)
from .charge import (
    BELL_BASIS,
    ChargeBounds,
    ChargeResult,
    NonlocalityClass,
    OrthogonalPureEnsemble,
    bell_state,
    charge_bounds,
    charge_max_entangled_ensemble,
    classify,
    concurrence_bell_diagonal,
    concurrence_general,
    state_charge,
    to_bell_basis,
)
from .thermal import (
    ModelKind,
    ThermalPoint,
    XYZCouplings,
    bell_spectrum,
    find_transition,
    ising_charge_closed_form,
    model_couplings,
    sweep,
    thermal_point,
    thermal_point_general,
    xyz_hamiltonian,
)
from .ring import (
    PairThermalResult,
    RingModel,
    adjacent_pair_state,
    ring_hamiltonian,
    ring_pair_charge,
    ring_sweep,
    werner_parameters,
)

__version__ = "0.1.0"
