"""Shared domain types for the unit-mass, unit-frequency anharmonic oscillator.

The model is H = p**2/2 + x**2/2 + (lam/(2*m)) * x**(2*m) with integer
anharmonicity index m >= 2 (m=3 sextic, m=4 octic), which yields the
equation of motion  x'' + x + lam * x**(2*m-1) = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Exact arithmetic type used throughout the series algebra.  Fraction
# already guarantees positive denominators and lowest terms.
Rational = Fraction


@dataclass(frozen=True)
class OscillatorSpec:
    """Anharmonicity index m and coupling constant lam.

    Mass and base frequency are fixed at 1.  lam may be negative
    (metastable potential); no smallness bound is enforced.
    """

    m: int
    lam: float = 0.0

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 2:
            raise ValueError(f"anharmonicity index m must be an integer >= 2, got {self.m}")
        if not math.isfinite(self.lam):
            raise ValueError("lam must be finite")

    @property
    def power(self) -> int:
        """Power 2m-1 of the nonlinear restoring term."""
        return 2 * self.m - 1


@dataclass(frozen=True)
class InitialState:
    """Initial position x0 and velocity/momentum v0."""

    x0: float
    v0: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x0) and math.isfinite(self.v0)):
            raise ValueError("initial state must be finite")

    @property
    def amplitude(self) -> float:
        return math.hypot(self.x0, self.v0)

    @property
    def phase(self) -> float:
        return math.atan2(self.v0, self.x0)


def hamiltonian_energy(spec: OscillatorSpec, state: InitialState) -> float:
    """Energy v0**2/2 + x0**2/2 + lam/(2m) * x0**(2m) of the initial state."""
    return (
        0.5 * state.v0**2
        + 0.5 * state.x0**2
        + spec.lam / (2 * spec.m) * state.x0 ** (2 * spec.m)
    )
