"""Reduced qubit state, Bloch vector, tangle, and cat-state fidelity.

The qubit's reduced density matrix in the adiabatic ground state is
rho_0 = (I + b_x sigma_x + b_z sigma_z)/2 with

    b_x = - int phi_0^2(Q) D/E(Q) dQ
    b_z = - int phi_0^2(Q) (W + L Q)/E(Q) dQ

evaluated by trapezoidal quadrature on the solver grid.  b_y vanishes
identically (real Hamiltonian) and is carried explicitly so the assumption
stays testable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePointError
from .model import DimensionlessParams, adiabatic_gap
from .solver import GroundSolution

BLOCH_NORM_SLACK = 1e-10
TANGLE_CLAMP = 1e-12


@dataclass(frozen=True)
class QubitState:
    """Bloch vector of the reduced qubit state; b_y is pinned to zero."""

    b_x: float
    b_z: float
    b_y: float = 0.0

    def __post_init__(self):
        if self.b_y != 0.0:
            raise ValueError(f"b_y must vanish for this model, got {self.b_y}")
        norm2 = self.b_x**2 + self.b_z**2
        if norm2 > 1.0 + BLOCH_NORM_SLACK:
            raise ValueError(f"Bloch vector norm^2 = {norm2} exceeds 1")


@dataclass(frozen=True)
class Tangle:
    """Entanglement monotone tau = 2[1 - Tr rho^2] in [0, 1]."""

    value: float

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0 + TANGLE_CLAMP:
            raise ValueError(f"tangle out of range: {self.value}")


def bloch_vector(dp: DimensionlessParams, sol: GroundSolution) -> QubitState:
    """Bloch components of the reduced qubit state for a solved ground state."""
    q = sol.grid.points()
    e = adiabatic_gap(dp, q)
    if np.any(e == 0.0):
        raise DegeneratePointError("adiabatic gap vanishes on the grid")
    w = sol.wavefunction**2
    b_x = -float(np.trapezoid(w * dp.big_d / e, dx=sol.grid.spacing))
    b_z = -float(np.trapezoid(w * (dp.big_w + dp.big_l * q) / e, dx=sol.grid.spacing))
    return QubitState(b_x=b_x, b_z=b_z)


def tangle(state: QubitState) -> Tangle:
    """tau = 1 - b_x^2 - b_z^2, clamped into [0, 1] only against rounding."""
    value = 1.0 - state.b_x**2 - state.b_z**2
    if value < -TANGLE_CLAMP or value > 1.0 + TANGLE_CLAMP:
        raise ValueError(f"tangle {value} outside [0, 1] beyond rounding slack")
    return Tangle(value=min(max(value, 0.0), 1.0))


def reduced_density(state: QubitState) -> np.ndarray:
    """rho = (I + b_x sigma_x + b_z sigma_z)/2 as a real symmetric 2x2 array."""
    return 0.5 * np.array(
        [[1.0 + state.b_z, state.b_x], [state.b_x, 1.0 - state.b_z]]
    )


def _gaussian_pair(dp: DimensionlessParams, q: np.ndarray):
    """The two displaced Gaussians at +-Q_0 with width k' = 1 - 1/(D alpha^2),
    and their mutual overlap."""
    alpha = dp.alpha()
    q0 = dp.big_d / dp.big_l * math.sqrt(alpha**2 - 1.0)
    k_prime = 1.0 - 1.0 / (dp.big_d * alpha**2)
    norm = (k_prime / math.pi) ** 0.25
    phi_p = norm * np.exp(-0.5 * k_prime * (q - q0) ** 2)
    phi_m = norm * np.exp(-0.5 * k_prime * (q + q0) ** 2)
    overlap = math.exp(-k_prime * q0**2)
    return phi_p, phi_m, overlap


def cat_fidelity(dp: DimensionlessParams, sol: GroundSolution) -> float:
    """Squared overlap of phi_0 with the normalized symmetric two-Gaussian
    superposition; requires W = 0 and alpha > 1."""
    if dp.big_w != 0.0:
        raise ValueError("cat_fidelity requires W = 0")
    if dp.alpha() <= 1.0:
        raise ValueError("cat_fidelity requires alpha > 1")
    q = sol.grid.points()
    phi_p, phi_m, s = _gaussian_pair(dp, q)
    ansatz = (phi_p + phi_m) / math.sqrt(2.0 + 2.0 * s)
    return float(np.trapezoid(sol.wavefunction * ansatz, dx=sol.grid.spacing)) ** 2
