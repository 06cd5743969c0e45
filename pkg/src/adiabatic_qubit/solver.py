"""Ground state of the oscillator on the lower adiabatic potential.

The 1D time-independent Schrodinger equation

    [- (1/2) d^2/dQ^2 + U_l(Q)/omega] phi_0(Q) = (E_0/omega) phi_0(Q)

is discretized with the standard 3-point stencil under Dirichlet boundaries,
giving a symmetric tridiagonal matrix whose smallest eigenpair is the ground
state.  Energies are reported in units of omega.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import ConvergenceError
from .model import AdiabaticBranch, DimensionlessParams, adiabatic_potential

DEFAULT_N_POINTS = 2001
BOUNDARY_TOL = 1e-6
MAX_GRID_RETRIES = 3


@dataclass(frozen=True)
class Grid:
    """Uniform discretization of the slow coordinate Q."""

    q_min: float
    q_max: float
    n_points: int

    def __post_init__(self):
        if self.n_points < 3:
            raise ValueError(f"n_points must be >= 3, got {self.n_points}")
        if not self.q_min < self.q_max:
            raise ValueError(f"need q_min < q_max, got [{self.q_min}, {self.q_max}]")

    @property
    def spacing(self) -> float:
        return (self.q_max - self.q_min) / (self.n_points - 1)

    def points(self) -> np.ndarray:
        return np.linspace(self.q_min, self.q_max, self.n_points)

    @classmethod
    def symmetric(cls, q_max: float, n_points: int = DEFAULT_N_POINTS) -> "Grid":
        return cls(q_min=-q_max, q_max=q_max, n_points=n_points)


@dataclass(frozen=True)
class GroundSolution:
    """Ground eigenvalue E_0 (units of omega) and the normalized, node-free
    wavefunction samples phi_0(Q_i)."""

    energy: float
    wavefunction: np.ndarray
    grid: Grid

    def boundary_amplitude(self) -> float:
        return max(abs(float(self.wavefunction[0])), abs(float(self.wavefunction[-1])))


def auto_grid(dp: DimensionlessParams, n_points: int = DEFAULT_N_POINTS) -> Grid:
    """Symmetric grid sized from the well geometry.

    For alpha > 1 the half-width is Q_0 + 8/sqrt(k') with
    k' = 1 - 1/(D alpha^2); otherwise 8/sqrt(max(1 - alpha, 0.05)), the floor
    guarding the diverging harmonic width near alpha = 1.
    """
    if dp.big_d <= 0:
        raise ValueError("auto_grid requires D > 0")
    alpha = dp.alpha()
    if alpha > 1.0:
        q0 = dp.big_d / dp.big_l * math.sqrt(alpha**2 - 1.0)
        k_prime = 1.0 - 1.0 / (dp.big_d * alpha**2)
        q_max = q0 + 8.0 / math.sqrt(k_prime)
    else:
        q_max = 8.0 / math.sqrt(max(1.0 - alpha, 0.05))
    return Grid.symmetric(q_max, n_points)


def solve_ground(dp: DimensionlessParams, grid: Grid) -> GroundSolution:
    """Smallest eigenpair of the discretized adiabatic Hamiltonian.

    For W = 0 on a symmetric grid the deep double-well splitting can fall
    below machine precision, where the eigensolver returns an arbitrary
    (generally localized) vector in the degenerate pair; the even-parity
    projection then recovers the true, symmetric ground state.  The
    eigenvector is sign-fixed positive (integral > 0) and normalized so that
    sum(phi^2) * h = 1.
    """
    q = grid.points()
    h = grid.spacing
    diag = 1.0 / h**2 + adiabatic_potential(dp, q, AdiabaticBranch.LOWER)
    off = np.full(grid.n_points - 1, -0.5 / h**2)
    even_potential = dp.big_w == 0.0 and grid.q_min == -grid.q_max
    top = 1 if even_potential else 0
    try:
        vals, vecs = eigh_tridiagonal(diag, off, select="i", select_range=(0, top))
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceError(f"tridiagonal eigensolver failed: {exc}") from exc
    phi = vecs[:, 0]
    if even_potential:
        even = phi + phi[::-1]
        if np.linalg.norm(even) < 0.1:
            # the solver handed back the odd member of a degenerate pair
            even = vecs[:, 1] + vecs[:, 1][::-1]
        phi = even
    if np.sum(phi) < 0:
        phi = -phi
    # denormal-scale sign wiggles in the far tails are rounding noise
    phi[np.abs(phi) < 1e-13 * np.max(np.abs(phi))] = 0.0
    phi = phi / math.sqrt(np.sum(phi**2) * h)
    return GroundSolution(energy=float(vals[0]), wavefunction=phi, grid=grid)


def solve_ground_auto(
    dp: DimensionlessParams, n_points: int = DEFAULT_N_POINTS
) -> GroundSolution:
    """auto_grid + solve_ground, doubling the box (and refining to keep the
    spacing) until the wavefunction is negligible at both endpoints."""
    grid = auto_grid(dp, n_points)
    for _ in range(MAX_GRID_RETRIES + 1):
        sol = solve_ground(dp, grid)
        if sol.boundary_amplitude() < BOUNDARY_TOL:
            return sol
        grid = Grid.symmetric(2.0 * grid.q_max, 2 * grid.n_points - 1)
    raise ConvergenceError(
        f"wavefunction not confined after {MAX_GRID_RETRIES} box doublings "
        f"(q_max = {grid.q_max / 2})"
    )
