import math

import numpy as np
import pytest

from anharmonic import (
    InitialState,
    OscillatorSpec,
    Trajectory,
    estimate_frequency,
    hamiltonian_energy,
    integrate,
)

REL_TOL = 1e-10


class TestIntegrate:
    def test_sho_returns_after_one_period(self):
        traj = integrate(OscillatorSpec(3, 0.0), InitialState(1.0, 0.0), 2 * math.pi, rel_tol=REL_TOL)
        assert traj.positions[-1] == pytest.approx(1.0, abs=1e-9)
        assert traj.velocities[-1] == pytest.approx(0.0, abs=1e-9)

    def test_octic_energy_drift_budget(self):
        spec = OscillatorSpec(4, 0.01)
        state = InitialState(1.0, 0.0)
        traj = integrate(spec, state, 100.0, rel_tol=REL_TOL)
        assert traj.energy_drift <= 1e-8 * hamiltonian_energy(spec, state)

    def test_energy_drift_budget_randomized(self):
        rng = np.random.default_rng(99)
        for _ in range(10):
            spec = OscillatorSpec(int(rng.integers(2, 5)), float(rng.uniform(0, 0.05)))
            state = InitialState(float(rng.uniform(-2, 2)), float(rng.uniform(-2, 2)))
            traj = integrate(spec, state, 30.0, rel_tol=REL_TOL)
            assert traj.energy_drift <= 100 * REL_TOL * hamiltonian_energy(spec, state)

    def test_time_reversal_symmetry(self):
        spec = OscillatorSpec(3, 0.01)
        state = InitialState(2.0, 0.0)
        forward = integrate(spec, state, 2 * math.pi, rel_tol=REL_TOL)
        mirrored = InitialState(float(forward.positions[-1]), -float(forward.velocities[-1]))
        back = integrate(spec, mirrored, 2 * math.pi, rel_tol=REL_TOL)
        assert abs(back.positions[-1] - state.x0) <= 10 * REL_TOL
        assert abs(back.velocities[-1] + state.v0) <= 10 * REL_TOL

    def test_sample_grid_shape_and_monotonicity(self):
        traj = integrate(OscillatorSpec(3, 0.01), InitialState(1.0, 0.0), 12.0, samples=301)
        assert len(traj.times) == len(traj.positions) == len(traj.velocities) == 301
        assert np.all(np.diff(traj.times) > 0)

    def test_validates_arguments(self):
        spec = OscillatorSpec(3, 0.01)
        state = InitialState(1.0, 0.0)
        with pytest.raises(ValueError):
            integrate(spec, state, -1.0)
        with pytest.raises(ValueError):
            integrate(spec, state, 10.0, rel_tol=1e-2)
        with pytest.raises(ValueError):
            integrate(spec, state, 10.0, rel_tol=1e-14)
        with pytest.raises(ValueError):
            integrate(spec, state, 10.0, samples=1)


class TestEstimateFrequency:
    def test_sho_frequency(self):
        traj = integrate(OscillatorSpec(3, 0.0), InitialState(1.0, 0.0), 12 * 2 * math.pi, rel_tol=REL_TOL)
        assert estimate_frequency(traj) == pytest.approx(1.0, abs=1e-6)

    def test_sextic_shift(self):
        traj = integrate(OscillatorSpec(3, 0.01), InitialState(2.0, 0.0), 32 * 2 * math.pi, rel_tol=1e-11)
        assert estimate_frequency(traj) == pytest.approx(1.05, abs=2e-3)

    def test_octic_shift(self):
        traj = integrate(OscillatorSpec(4, 0.01), InitialState(1.0, 0.0), 32 * 2 * math.pi, rel_tol=1e-11)
        assert estimate_frequency(traj) == pytest.approx(1 + 35 / 12800, abs=2e-4)

    def test_invariant_under_subsampling(self):
        traj = integrate(OscillatorSpec(3, 0.01), InitialState(2.0, 0.0), 25 * 2 * math.pi, rel_tol=1e-11)
        halved = Trajectory(
            traj.times[::2], traj.positions[::2], traj.velocities[::2], traj.energy_drift
        )
        full = estimate_frequency(traj)
        assert estimate_frequency(halved) == pytest.approx(full, rel=1e-5)

    def test_too_few_crossings(self):
        traj = integrate(OscillatorSpec(3, 0.0), InitialState(1.0, 0.0), 3.0)
        with pytest.raises(ValueError, match="crossings"):
            estimate_frequency(traj)
