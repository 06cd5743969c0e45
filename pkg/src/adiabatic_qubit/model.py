"""Model parameterization and closed-form adiabatic quantities.

Physical Hamiltonian (hbar = c = 1):

    H = Delta sigma_x + [epsilon + lambda (a^dag + a)/sqrt(2 m omega)] sigma_z
        + omega a^dag a

Internally everything is expressed through the dimensionless triple
(D, W, L) with D = 2 Delta / omega, W = 2 epsilon / omega,
L = 2 lambda / sqrt(m omega^3).  The coupling parameter
alpha = L^2 / (2 D) is always derived, never stored.

Known sign conventions (checked numerically, see tests):
for W > 0 the deeper well of the lower adiabatic potential lies at
positive Q, so the ground state localizes there and b_z -> -1 at
strong coupling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.optimize import brentq

from .errors import DegeneratePointError

STATIONARY_TOL = 1e-12


class AdiabaticBranch(Enum):
    """Lower branch takes -E(Q) in the effective potential, Upper takes +E(Q)."""

    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class ModelParams:
    """Physical Hamiltonian parameters (all energies, hbar = c = 1).

    The sign of the coupling is absorbable by Q -> -Q, so lambda_ >= 0 is
    enforced; callers with a negative coupling should flip its sign.
    """

    delta: float
    epsilon: float
    omega: float
    lambda_: float
    mass: float = 1.0

    def __post_init__(self):
        if self.omega <= 0:
            raise ValueError(f"omega must be positive, got {self.omega}")
        if self.mass <= 0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if self.delta < 0:
            raise ValueError(f"delta must be nonnegative, got {self.delta}")
        if self.lambda_ < 0:
            raise ValueError(
                f"lambda_ must be nonnegative (flip via Q -> -Q), got {self.lambda_}"
            )


@dataclass(frozen=True)
class DimensionlessParams:
    """Dimensionless parameters D = 2*Delta/omega, W = 2*epsilon/omega,
    L = 2*lambda/sqrt(m*omega^3)."""

    big_d: float
    big_w: float
    big_l: float

    def __post_init__(self):
        if self.big_d < 0:
            raise ValueError(f"big_d must be nonnegative, got {self.big_d}")
        if self.big_l < 0:
            raise ValueError(f"big_l must be nonnegative, got {self.big_l}")

    def alpha(self) -> float:
        """Coupling parameter alpha = L^2/(2D); undefined at D = 0."""
        if self.big_d == 0:
            raise ValueError("alpha is undefined at D = 0")
        return self.big_l**2 / (2.0 * self.big_d)

    @classmethod
    def from_alpha(cls, big_d: float, big_w: float, alpha: float) -> "DimensionlessParams":
        """Convenience constructor from (D, W, alpha); L = sqrt(2*D*alpha)."""
        if big_d <= 0:
            raise ValueError("from_alpha requires D > 0")
        if alpha < 0:
            raise ValueError(f"alpha must be nonnegative, got {alpha}")
        return cls(big_d=big_d, big_w=big_w, big_l=math.sqrt(2.0 * big_d * alpha))


@dataclass(frozen=True)
class QubitAmplitudes:
    """Amplitudes A_+(Q), A_-(Q) of the instantaneous qubit eigenstates,
    with A_+^2 + A_-^2 = 2 and both in [0, sqrt(2)]."""

    a_plus: float
    a_minus: float

    def state_vector(self, branch: AdiabaticBranch) -> np.ndarray:
        """Eigenstate in the sigma_z basis (|+>, |->).

        Lower: (A_- |+> - A_+ |->)/sqrt(2); Upper: (A_+ |+> + A_- |->)/sqrt(2).
        """
        if branch is AdiabaticBranch.LOWER:
            return np.array([self.a_minus, -self.a_plus]) / math.sqrt(2.0)
        return np.array([self.a_plus, self.a_minus]) / math.sqrt(2.0)


def to_dimensionless(p: ModelParams) -> DimensionlessParams:
    """Convert physical parameters to the dimensionless triple (D, W, L)."""
    return DimensionlessParams(
        big_d=2.0 * p.delta / p.omega,
        big_w=2.0 * p.epsilon / p.omega,
        big_l=2.0 * p.lambda_ / math.sqrt(p.mass * p.omega**3),
    )


def to_physical(dp: DimensionlessParams, omega: float, mass: float) -> ModelParams:
    """Inverse of to_dimensionless for given oscillator scales."""
    if omega <= 0:
        raise ValueError(f"omega must be positive, got {omega}")
    if mass <= 0:
        raise ValueError(f"mass must be positive, got {mass}")
    return ModelParams(
        delta=0.5 * dp.big_d * omega,
        epsilon=0.5 * dp.big_w * omega,
        omega=omega,
        lambda_=0.5 * dp.big_l * math.sqrt(mass * omega**3),
        mass=mass,
    )


def adiabatic_gap(dp: DimensionlessParams, q):
    """Instantaneous qubit gap E(Q) = sqrt(D^2 + (W + L Q)^2).

    Accepts scalars or numpy arrays.
    """
    return np.sqrt(dp.big_d**2 + (dp.big_w + dp.big_l * np.asarray(q, dtype=float)) ** 2)


def qubit_eigenstate(
    dp: DimensionlessParams, q: float, branch: AdiabaticBranch
) -> QubitAmplitudes:
    """Amplitudes of the instantaneous qubit eigenstate at slow coordinate Q.

    Raises DegeneratePointError where E(Q) = 0 (eigenvectors undefined).
    The global phase is fixed by A_+/- >= 0.
    """
    e = float(adiabatic_gap(dp, q))
    if e == 0.0:
        raise DegeneratePointError(f"adiabatic gap vanishes at Q = {q}")
    z = (dp.big_w + dp.big_l * q) / e
    # clip guards rounding when |z| is within eps of 1
    a_plus = math.sqrt(min(max(1.0 + z, 0.0), 2.0))
    a_minus = math.sqrt(min(max(1.0 - z, 0.0), 2.0))
    return QubitAmplitudes(a_plus=a_plus, a_minus=a_minus)


def adiabatic_potential(dp: DimensionlessParams, q, branch: AdiabaticBranch):
    """Effective potential U(Q)/omega = (Q^2 -+ E(Q))/2 felt by the oscillator.

    Lower branch takes the minus sign.  Accepts scalars or arrays.
    """
    q = np.asarray(q, dtype=float)
    e = adiabatic_gap(dp, q)
    sign = -1.0 if branch is AdiabaticBranch.LOWER else 1.0
    return 0.5 * (q**2 + sign * e)


def _lower_potential_derivative(dp: DimensionlessParams, q):
    """d/dQ of U_l(Q)/omega."""
    q = np.asarray(q, dtype=float)
    e = adiabatic_gap(dp, q)
    return q - 0.5 * dp.big_l * (dp.big_w + dp.big_l * q) / e


def _lower_potential_curvature(dp: DimensionlessParams, q: float) -> float:
    """d^2/dQ^2 of U_l(Q)/omega."""
    e = float(adiabatic_gap(dp, q))
    return 1.0 - 0.5 * dp.big_l**2 * dp.big_d**2 / e**3


def well_minima(dp: DimensionlessParams) -> list[tuple[float, float]]:
    """Local minima of the lower adiabatic potential, as (Q, U_l/omega) pairs
    sorted by depth (deepest first).

    For W = 0 the closed forms apply: a single minimum at the origin when
    alpha <= 1, the symmetric pair Q = +-(D/L) sqrt(alpha^2 - 1) when
    alpha > 1.  For W != 0 stationary points are bracketed by a sign scan of
    dU_l/dQ and refined by bisection.
    """
    if dp.big_d <= 0:
        raise ValueError("well_minima requires D > 0")
    alpha = dp.alpha()
    if dp.big_w == 0.0:
        if alpha <= 1.0:
            return [(0.0, -0.5 * dp.big_d)]
        q0 = dp.big_d / dp.big_l * math.sqrt(alpha**2 - 1.0)
        u0 = -0.25 * dp.big_d * (alpha + 1.0 / alpha)
        return [(-q0, u0), (q0, u0)]

    q0 = (
        dp.big_d / dp.big_l * math.sqrt(alpha**2 - 1.0)
        if alpha > 1.0
        else 1.0
    )
    lo, hi = -(q0 + 4.0), q0 + 4.0
    qs = np.arange(lo, hi + 0.01, 0.01)
    ds = _lower_potential_derivative(dp, qs)
    minima: list[tuple[float, float]] = []
    for i in range(len(qs) - 1):
        if ds[i] == 0.0:
            root = float(qs[i])
        elif ds[i] * ds[i + 1] < 0.0:
            root = brentq(
                lambda x: float(_lower_potential_derivative(dp, x)),
                float(qs[i]),
                float(qs[i + 1]),
                xtol=STATIONARY_TOL,
            )
        else:
            continue
        if _lower_potential_curvature(dp, root) > 0.0:
            u = float(adiabatic_potential(dp, root, AdiabaticBranch.LOWER))
            minima.append((root, u))
    minima.sort(key=lambda p: p[1])
    return minima
