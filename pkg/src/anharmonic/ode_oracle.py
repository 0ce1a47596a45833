"""High-accuracy numerical integration of x'' + x + lam*x**(2m-1) = 0.

Ground truth for the closed-form solutions: an adaptive 8th-order
explicit integrator with dense output, an energy-drift monitor, and a
zero-crossing frequency estimator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .oscillator import InitialState, OscillatorSpec, hamiltonian_energy

DEFAULT_REL_TOL = 1e-10
SAMPLES_PER_PERIOD = 200


class IntegrationError(RuntimeError):
    """Integrator failed to reach t_end (for example step-size underflow)."""


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    positions: np.ndarray
    velocities: np.ndarray
    energy_drift: float


def integrate(
    spec: OscillatorSpec,
    state: InitialState,
    t_end: float,
    rel_tol: float = DEFAULT_REL_TOL,
    samples: int | None = None,
) -> Trajectory:
    """Integrate to t_end and sample on a uniform grid (default 200/period).

    energy_drift is max_t |H(t) - H(0)| over the sample grid; callers can
    budget it as <= 100 * rel_tol * H(0).
    """
    if t_end <= 0:
        raise ValueError("t_end must be > 0")
    if not 1e-13 <= rel_tol <= 1e-3:
        raise ValueError("rel_tol must lie in [1e-13, 1e-3]")
    if samples is None:
        samples = max(2, SAMPLES_PER_PERIOD * math.ceil(t_end / (2 * math.pi)) + 1)
    if samples < 2:
        raise ValueError("need at least 2 sample points")

    power = spec.power
    lam = spec.lam

    def rhs(t: float, y: np.ndarray) -> list[float]:
        x, v = y
        return [v, -x - lam * x**power]

    times = np.linspace(0.0, t_end, samples)
    # The solver runs a notch tighter than requested so the delivered
    # energy drift stays within the documented 100*rel_tol*H(0) budget;
    # the absolute floor sits well below the relative scale so control
    # stays relative except very near the origin of phase space.
    solver_rtol = max(rel_tol / 20.0, 2.3e-14)
    atol = solver_rtol * 1e-2 * max(1.0, abs(state.x0), abs(state.v0))
    sol = solve_ivp(
        rhs,
        (0.0, t_end),
        [state.x0, state.v0],
        method="DOP853",
        rtol=solver_rtol,
        atol=atol,
        t_eval=times,
    )
    if not sol.success:
        raise IntegrationError(sol.message)

    positions = sol.y[0]
    velocities = sol.y[1]
    energies = (
        0.5 * velocities**2 + 0.5 * positions**2 + lam / (2 * spec.m) * positions ** (2 * spec.m)
    )
    drift = float(np.max(np.abs(energies - hamiltonian_energy(spec, state))))
    return Trajectory(times=times, positions=positions, velocities=velocities, energy_drift=drift)


def estimate_frequency(traj: Trajectory) -> float:
    """Fundamental angular frequency from averaged upward zero crossings.

    The trajectory should span at least 5 full oscillations; crossing times
    are refined by local linear interpolation.
    """
    x = np.asarray(traj.positions)
    t = np.asarray(traj.times)
    upward = np.nonzero((x[:-1] < 0.0) & (x[1:] >= 0.0))[0]
    if len(upward) < 5:
        raise ValueError(
            f"only {len(upward)} upward zero crossings; need >= 5 oscillations"
        )
    dt = t[upward + 1] - t[upward]
    dx = x[upward + 1] - x[upward]
    crossings = t[upward] - x[upward] * dt / dx
    period = (crossings[-1] - crossings[0]) / (len(crossings) - 1)
    return 2.0 * math.pi / period
