"""Exact diagonalization of the full qubit-oscillator Hamiltonian in a
truncated Fock basis.

This is the independent oracle against which the adiabatic approximation is
validated.  In units of omega,

    H/omega = a^dag a + (D/2) sigma_x + ((W + L Q)/2) sigma_z,
    Q = (a^dag + a)/sqrt(2),

on the interleaved basis |n, +>, |n, ->.  Truncation is accepted only when a
50% larger basis moves the ground energy by less than ENERGY_STABILITY_TOL.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh

from .errors import ConvergenceError
from .model import DimensionlessParams
from .observables import QubitState

ENERGY_STABILITY_TOL = 1e-8


@dataclass(frozen=True)
class FockTruncation:
    """Boson basis size (max occupancy + 1); total dimension is 2 * n_boson."""

    n_boson: int

    def __post_init__(self):
        if self.n_boson < 2:
            raise ValueError(f"n_boson must be >= 2, got {self.n_boson}")

    @classmethod
    def for_params(cls, dp: DimensionlessParams) -> "FockTruncation":
        # displaced vacuum occupancy scales as L^2/4; keep a wide margin
        return cls(n_boson=max(100, math.ceil(dp.big_l**2 + 10.0 * dp.big_l)))


@dataclass(frozen=True)
class ExactGround:
    """Ground energy (units of omega) and real amplitudes c[n, s] on
    |n> x |s>, s = 0 for |+>, 1 for |->."""

    energy: float
    amplitudes: np.ndarray
    truncation: FockTruncation


def build_hamiltonian(dp: DimensionlessParams, tr: FockTruncation) -> np.ndarray:
    """Real symmetric matrix of H/omega on the interleaved basis."""
    n = tr.n_boson
    dim = 2 * n
    h = np.zeros((dim, dim))
    ns = np.arange(n)
    h[2 * ns, 2 * ns] = ns + 0.5 * dp.big_w
    h[2 * ns + 1, 2 * ns + 1] = ns - 0.5 * dp.big_w
    h[2 * ns, 2 * ns + 1] = 0.5 * dp.big_d
    h[2 * ns + 1, 2 * ns] = 0.5 * dp.big_d
    coup = 0.5 * dp.big_l / math.sqrt(2.0) * np.sqrt(ns[:-1] + 1.0)
    for sigma, sign in ((0, 1.0), (1, -1.0)):
        rows = 2 * ns[:-1] + sigma
        cols = rows + 2
        h[rows, cols] = sign * coup
        h[cols, rows] = sign * coup
    return h


def ground_state_exact(dp: DimensionlessParams, tr: FockTruncation) -> ExactGround:
    """Smallest eigenpair of the truncated Hamiltonian; the largest-magnitude
    amplitude is made positive for a deterministic sign."""
    h = build_hamiltonian(dp, tr)
    try:
        vals, vecs = eigh(h, subset_by_index=[0, 0])
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceError(f"dense eigensolver failed: {exc}") from exc
    vec = vecs[:, 0]
    if vec[np.argmax(np.abs(vec))] < 0:
        vec = -vec
    return ExactGround(
        energy=float(vals[0]),
        amplitudes=vec.reshape(tr.n_boson, 2),
        truncation=tr,
    )


def ground_state_converged(
    dp: DimensionlessParams, tr: FockTruncation | None = None
) -> ExactGround:
    """Ground state with the truncation-adequacy rule enforced: the basis is
    grown by 50% until the energy is stable to ENERGY_STABILITY_TOL."""
    tr = tr or FockTruncation.for_params(dp)
    g = ground_state_exact(dp, tr)
    for _ in range(6):
        bigger = FockTruncation(n_boson=math.ceil(1.5 * g.truncation.n_boson))
        g_big = ground_state_exact(dp, bigger)
        if abs(g_big.energy - g.energy) < ENERGY_STABILITY_TOL:
            return g
        g = g_big
    raise ConvergenceError(
        f"ground energy not stable to {ENERGY_STABILITY_TOL} at "
        f"n_boson = {g.truncation.n_boson}"
    )


def exact_qubit_state(g: ExactGround) -> QubitState:
    """Bloch vector from tracing out the boson: b_x = 2 sum_n c_{n,+} c_{n,-},
    b_z = sum_n (c_{n,+}^2 - c_{n,-}^2)."""
    c_plus = g.amplitudes[:, 0]
    c_minus = g.amplitudes[:, 1]
    return QubitState(
        b_x=2.0 * float(np.dot(c_plus, c_minus)),
        b_z=float(np.dot(c_plus, c_plus) - np.dot(c_minus, c_minus)),
    )
