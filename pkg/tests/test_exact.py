import math

import numpy as np
import pytest

from adiabatic_qubit import (
    DimensionlessParams,
    FockTruncation,
    bloch_vector,
    build_hamiltonian,
    exact_qubit_state,
    ground_state_converged,
    ground_state_exact,
    solve_ground_auto,
    tangle,
)


class TestBuildHamiltonian:
    def test_free_oscillator(self):
        h = build_hamiltonian(DimensionlessParams(0, 0, 0), FockTruncation(3))
        assert h == pytest.approx(np.diag([0.0, 0.0, 1.0, 1.0, 2.0, 2.0]))

    def test_decoupled_ground_energy(self):
        dp = DimensionlessParams(10, 0, 0)
        g = ground_state_exact(dp, FockTruncation(2))
        assert g.energy == pytest.approx(-5)

    def test_symmetric(self):
        h = build_hamiltonian(DimensionlessParams.from_alpha(10, 0.3, 2), FockTruncation(40))
        assert np.max(np.abs(h - h.T)) == 0

    def test_truncation_validation(self):
        with pytest.raises(ValueError):
            FockTruncation(1)


class TestGroundStateExact:
    def test_decoupled_structure(self):
        dp = DimensionlessParams(10, 0, 0)
        g = ground_state_exact(dp, FockTruncation(50))
        # |0> x (|+> - |->)/sqrt(2) up to sign convention
        c = g.amplitudes
        assert abs(c[0, 0]) == pytest.approx(1 / math.sqrt(2))
        assert abs(c[0, 1]) == pytest.approx(1 / math.sqrt(2))
        assert np.sum(c[1:] ** 2) < 1e-20
        assert np.sum(c**2) == pytest.approx(1, abs=1e-12)

    def test_truncation_converged(self):
        dp = DimensionlessParams.from_alpha(10, 0, 2)
        e100 = ground_state_exact(dp, FockTruncation(100)).energy
        e200 = ground_state_exact(dp, FockTruncation(200)).energy
        assert abs(e100 - e200) < 1e-8

    def test_variational_monotonicity(self):
        dp = DimensionlessParams.from_alpha(8, 0.2, 2)
        energies = [
            ground_state_exact(dp, FockTruncation(n)).energy for n in (40, 60, 90, 140)
        ]
        assert all(e2 <= e1 + 1e-14 for e1, e2 in zip(energies, energies[1:]))

    def test_nondegenerate_gap_with_asymmetry(self):
        from scipy.linalg import eigh

        dp = DimensionlessParams.from_alpha(10, 0.1, 2)
        h = build_hamiltonian(dp, FockTruncation(200))
        vals = eigh(h, subset_by_index=[0, 1], eigvals_only=True)
        assert vals[1] - vals[0] > 0


class TestExactQubitState:
    def test_decoupled(self):
        g = ground_state_exact(DimensionlessParams(10, 0, 0), FockTruncation(30))
        state = exact_qubit_state(g)
        assert state.b_x == pytest.approx(-1, abs=1e-12)
        assert state.b_z == pytest.approx(0, abs=1e-12)
        assert tangle(state).value == pytest.approx(0, abs=1e-12)

    def test_parity_kills_bz(self):
        g = ground_state_converged(DimensionlessParams.from_alpha(10, 0, 2))
        assert abs(exact_qubit_state(g).b_z) < 1e-10

    def test_adiabatic_agreement_improves_with_d(self):
        # the tangle discrepancy is non-monotone between D=4 (0.0017) and
        # D=10 (0.0029): the signed adiabatic error crosses zero below D=4;
        # the improving trend holds from D=10 on (verified against an
        # independent kron-built diagonalization)
        diffs = []
        for big_d in (4, 10, 20, 40):
            dp = DimensionlessParams.from_alpha(big_d, 0, 2)
            tau_ad = tangle(bloch_vector(dp, solve_ground_auto(dp))).value
            tau_ex = tangle(exact_qubit_state(ground_state_converged(dp))).value
            diffs.append(abs(tau_ad - tau_ex))
        assert all(d2 < d1 for d1, d2 in zip(diffs[1:], diffs[2:]))
        assert diffs[-1] < 0.01
        assert max(diffs) < 0.005
