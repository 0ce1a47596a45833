#!/usr/bin/env python3
"""Secular divergence vs resummation for the sextic oscillator (a=2, lam=0.01).

Reproduces the classic three-curve comparison: the raw first-order
solution blows up linearly through its t*sin(t) term, while the
frequency-renormalized form stays bounded and tracks the numerically
integrated orbit.  Also measures the orbit frequency and compares it with
the first-order shift (5/16) lam a^4.
"""

import warnings
from pathlib import Path

import numpy as np

from anharmonic import (
    InitialState,
    OscillatorSpec,
    WeakCouplingWarning,
    classical_frequency_shift,
    estimate_frequency,
    first_order_solution,
    integrate,
    renormalized_solution,
)

OUT_DIR = Path("demo_output")


def main() -> None:
    spec = OscillatorSpec(m=3, lam=0.01)
    state = InitialState(x0=2.0, v0=0.0)

    print(f"sextic oscillator, lam={spec.lam}, x0={state.x0}, v0={state.v0}")
    traj = integrate(spec, state, t_end=60.0, rel_tol=1e-12)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", WeakCouplingWarning)
        first = np.array([first_order_solution(spec, state, t) for t in traj.times])
        renorm = np.array([renormalized_solution(spec, state, t) for t in traj.times])

    for horizon in (10, 20, 50):
        window = traj.times <= horizon
        dev_first = np.max(np.abs(first[window] - traj.positions[window]))
        dev_renorm = np.max(np.abs(renorm[window] - traj.positions[window]))
        print(f"  t <= {horizon:2d}: max |first-order - orbit| = {dev_first:7.3f}   "
              f"max |renormalized - orbit| = {dev_renorm:.3f}")
    print("  -> the un-resummed solution diverges; the resummed one stays bounded.")
    print("     (Its residual phase drift is second order in lam and reaches ~0.18 by t=50.)")

    long = integrate(spec, state, t_end=32 * 2 * np.pi, rel_tol=1e-11)
    measured = estimate_frequency(long)
    shift = classical_frequency_shift(spec, state.amplitude)
    print(f"  measured orbit frequency : {measured:.6f}")
    print(f"  first-order prediction   : {1 + shift:.6f}  (shift {shift:.4f})")
    print(f"  residual (second order)  : {measured - 1 - shift:+.2e}")

    OUT_DIR.mkdir(exist_ok=True)
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not available; skipping plot")
        return
    fig, ax = plt.subplots(figsize=(9, 4.5))
    ax.plot(traj.times, traj.positions, "k-", lw=1.2, label="numerical orbit")
    ax.plot(traj.times, first, "r--", lw=1.0, label="first order (secular)")
    ax.plot(traj.times, renorm, "b:", lw=1.4, label="renormalized")
    ax.set(xlabel="t", ylabel="x(t)", title="Sextic oscillator, a=2, lam=0.01")
    ax.legend(loc="lower left")
    fig.tight_layout()
    target = OUT_DIR / "secular_divergence.png"
    fig.savefig(target, dpi=130)
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
