"""Ground state and entanglement of a qubit strongly coupled to a slow
oscillator mode, computed in the Born-Oppenheimer (adiabatic) approximation
and validated against truncated-Fock exact diagonalization."""

from .asymptotics import (
    SaddleSet,
    bx_large_alpha,
    bx_small_alpha,
    massive_bloch,
    massive_tangle,
    saddle_points,
)
from .errors import ConvergenceError, DegenerateGroundStateError, DegeneratePointError
from .exact import (
    ExactGround,
    FockTruncation,
    build_hamiltonian,
    exact_qubit_state,
    ground_state_converged,
    ground_state_exact,
)
from .model import (
    AdiabaticBranch,
    DimensionlessParams,
    ModelParams,
    QubitAmplitudes,
    adiabatic_gap,
    adiabatic_potential,
    qubit_eigenstate,
    to_dimensionless,
    to_physical,
    well_minima,
)
from .observables import (
    QubitState,
    Tangle,
    bloch_vector,
    cat_fidelity,
    reduced_density,
    tangle,
)
from .solver import Grid, GroundSolution, auto_grid, solve_ground, solve_ground_auto
from .thermal import (
    ExtrapolatedBloch,
    ThermalParams,
    log_partition_function,
    partition_function,
    thermal_bloch,
    zero_temperature_extrapolation,
)

__all__ = [
    "AdiabaticBranch",
    "ConvergenceError",
    "DegenerateGroundStateError",
    "DegeneratePointError",
    "DimensionlessParams",
    "ExactGround",
    "ExtrapolatedBloch",
    "FockTruncation",
    "Grid",
    "GroundSolution",
    "ModelParams",
    "QubitAmplitudes",
    "QubitState",
    "SaddleSet",
    "Tangle",
    "ThermalParams",
    "adiabatic_gap",
    "adiabatic_potential",
    "auto_grid",
    "bloch_vector",
    "build_hamiltonian",
    "bx_large_alpha",
    "bx_small_alpha",
    "cat_fidelity",
    "exact_qubit_state",
    "ground_state_converged",
    "ground_state_exact",
    "massive_bloch",
    "massive_tangle",
    "partition_function",
    "log_partition_function",
    "qubit_eigenstate",
    "reduced_density",
    "saddle_points",
    "solve_ground",
    "solve_ground_auto",
    "tangle",
    "thermal_bloch",
    "to_dimensionless",
    "to_physical",
    "well_minima",
    "zero_temperature_extrapolation",
]
