"""Randomized property suites (>= 200 cases per property)."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adiabatic_qubit import (
    AdiabaticBranch,
    DimensionlessParams,
    Grid,
    QubitState,
    adiabatic_gap,
    adiabatic_potential,
    auto_grid,
    bloch_vector,
    qubit_eigenstate,
    reduced_density,
    solve_ground,
    solve_ground_auto,
    tangle,
    well_minima,
)
from adiabatic_qubit.observables import _gaussian_pair

N_CASES = 200

dimensionless = st.builds(
    DimensionlessParams,
    big_d=st.floats(0.1, 50),
    big_w=st.floats(-2, 2),
    big_l=st.floats(0, 10),
)
coordinates = st.floats(-20, 20)


@settings(max_examples=N_CASES, deadline=None)
@given(dp=dimensionless, q=coordinates)
def test_gap_bounded_below_by_d(dp, q):
    e = float(adiabatic_gap(dp, q))
    assert e >= dp.big_d
    # strict inequality only when the bias is resolvable in double precision
    if abs(dp.big_w + dp.big_l * q) > 1e-3 * (dp.big_d + 1):
        assert e > dp.big_d


@settings(max_examples=N_CASES, deadline=None)
@given(dp=dimensionless, q=coordinates)
def test_eigenstates_orthonormal(dp, q):
    amps = qubit_eigenstate(dp, q, AdiabaticBranch.LOWER)
    lower = amps.state_vector(AdiabaticBranch.LOWER)
    upper = amps.state_vector(AdiabaticBranch.UPPER)
    assert np.dot(lower, lower) == pytest.approx(1, abs=1e-12)
    assert np.dot(upper, upper) == pytest.approx(1, abs=1e-12)
    assert abs(np.dot(lower, upper)) < 1e-12
    assert amps.a_plus**2 + amps.a_minus**2 == pytest.approx(2, abs=1e-12)


@settings(max_examples=N_CASES, deadline=None)
@given(dp=dimensionless, q=coordinates)
def test_eigenvalue_residual(dp, q):
    bias = dp.big_w + dp.big_l * q
    h = np.array([[bias, dp.big_d], [dp.big_d, -bias]])
    e = float(adiabatic_gap(dp, q))
    amps = qubit_eigenstate(dp, q, AdiabaticBranch.LOWER)
    for branch, sign in ((AdiabaticBranch.LOWER, -1), (AdiabaticBranch.UPPER, 1)):
        vec = amps.state_vector(branch)
        assert np.max(np.abs(h @ vec - sign * e * vec)) < 1e-12 * max(e, 1.0)


@settings(max_examples=N_CASES, deadline=None)
@given(
    big_d=st.floats(0.1, 50),
    big_l=st.floats(0, 10),
    q=coordinates,
)
def test_symmetric_potential_parity(big_d, big_l, q):
    dp = DimensionlessParams(big_d, 0.0, big_l)
    for branch in AdiabaticBranch:
        assert adiabatic_potential(dp, q, branch) == pytest.approx(
            adiabatic_potential(dp, -q, branch), rel=1e-13, abs=1e-13
        )


@settings(max_examples=N_CASES, deadline=None)
@given(dp=dimensionless, q=coordinates)
def test_branch_splitting_is_gap(dp, q):
    diff = adiabatic_potential(dp, q, AdiabaticBranch.UPPER) - adiabatic_potential(
        dp, q, AdiabaticBranch.LOWER
    )
    # rounding of the shared Q^2/2 term dominates at large |Q|
    assert diff == pytest.approx(float(adiabatic_gap(dp, q)), abs=1e-14 * (1 + q * q))


bloch_disc = st.tuples(st.floats(-1, 1), st.floats(-1, 1)).filter(
    lambda t: t[0] ** 2 + t[1] ** 2 <= 1
)


@settings(max_examples=N_CASES, deadline=None)
@given(b=bloch_disc)
def test_density_matrix_consistency(b):
    state = QubitState(b_x=b[0], b_z=b[1])
    rho = reduced_density(state)
    assert np.trace(rho) == pytest.approx(1, abs=1e-14)
    evals = np.linalg.eigvalsh(rho)
    assert evals[0] >= -1e-14 and evals[1] <= 1 + 1e-14
    purity = float(np.trace(rho @ rho))
    assert purity == pytest.approx(0.5 * (1 + b[0] ** 2 + b[1] ** 2), abs=1e-12)
    tau = tangle(state).value
    assert 0 <= tau <= 1
    assert tau == pytest.approx(2 * (1 - purity), abs=1e-12)


def _random_params(rng, w_range=(-1.0, 1.0), alpha_range=(0.0, 3.5)):
    big_d = rng.uniform(5, 30)
    alpha = rng.uniform(*alpha_range)
    big_w = rng.uniform(*w_range)
    return DimensionlessParams.from_alpha(big_d, big_w, alpha)


def test_solver_normalization_and_bloch_norm():
    rng = np.random.default_rng(7)
    for _ in range(N_CASES):
        dp = _random_params(rng)
        sol = solve_ground_auto(dp, n_points=401)
        h = sol.grid.spacing
        assert np.sum(sol.wavefunction**2) * h == pytest.approx(1, abs=1e-10)
        assert np.min(sol.wavefunction) >= 0
        assert sol.energy >= well_minima(dp)[0][1]
        state = bloch_vector(dp, sol)
        assert state.b_x**2 + state.b_z**2 <= 1 + 1e-10
        assert 0 <= tangle(state).value <= 1


def test_mirror_symmetry_in_asymmetry():
    rng = np.random.default_rng(11)
    for _ in range(N_CASES):
        dp = _random_params(rng, w_range=(0.05, 1.0))
        mirrored = DimensionlessParams(dp.big_d, -dp.big_w, dp.big_l)
        a = solve_ground_auto(dp, n_points=401)
        b = solve_ground_auto(mirrored, n_points=401)
        assert np.max(np.abs(a.wavefunction - b.wavefunction[::-1])) < 1e-8
        sa, sb = bloch_vector(dp, a), bloch_vector(mirrored, b)
        assert sa.b_x == pytest.approx(sb.b_x, abs=1e-10)
        assert sa.b_z == pytest.approx(-sb.b_z, abs=1e-10)
        assert tangle(sa).value == pytest.approx(tangle(sb).value, abs=1e-10)


def _trial_energy(dp, grid):
    """Quadrature expectation of the adiabatic Hamiltonian in the symmetric
    two-Gaussian trial state (analytic derivative)."""
    q = grid.points()
    alpha = dp.alpha()
    q0 = dp.big_d / dp.big_l * math.sqrt(alpha**2 - 1.0)
    k = 1.0 - 1.0 / (dp.big_d * alpha**2)
    phi_p, phi_m, s = _gaussian_pair(dp, q)
    norm = math.sqrt(2 + 2 * s)
    psi = (phi_p + phi_m) / norm
    dpsi = (-k * (q - q0) * phi_p - k * (q + q0) * phi_m) / norm
    u = adiabatic_potential(dp, q, AdiabaticBranch.LOWER)
    h = grid.spacing
    return float(np.trapezoid(0.5 * dpsi**2 + u * psi**2, dx=h)) / float(
        np.trapezoid(psi**2, dx=h)
    )


def test_variational_bound_two_gaussian_trial():
    rng = np.random.default_rng(23)
    for _ in range(N_CASES):
        dp = DimensionlessParams.from_alpha(
            rng.uniform(5, 50), 0.0, rng.uniform(1.05, 5.0)
        )
        sol = solve_ground_auto(dp, n_points=1001)
        assert sol.energy <= _trial_energy(dp, sol.grid) + 1e-9


def test_grid_refinement_second_order():
    rng = np.random.default_rng(41)
    slopes = []
    for _ in range(N_CASES):
        dp = _random_params(rng, alpha_range=(0.0, 3.0))
        base = auto_grid(dp)
        energies = []
        n = 501
        for _ in range(3):
            energies.append(solve_ground(dp, Grid(base.q_min, base.q_max, n)).energy)
            n = 2 * n - 1
        d1 = abs(energies[0] - energies[1])
        d2 = abs(energies[1] - energies[2])
        if d2 < 1e-10:  # below eigensolver noise, slope unmeasurable
            continue
        slopes.append(math.log2(d1 / d2))
    assert len(slopes) >= 0.9 * N_CASES
    slopes = np.array(slopes)
    assert np.median(slopes) == pytest.approx(2, abs=0.2)
    assert np.all((slopes > 1.5) & (slopes < 2.5))
