"""First-order solutions of sextic (m=3) and octic (m=4) anharmonic oscillators.

Classical: exact Taylor-recurrence coefficients, closed-form harmonic
decompositions with secular resummation, and a high-accuracy integration
oracle.  Quantum: truncated Fock-basis operators, symmetrized Heisenberg
solutions, frequency operators, exact first-order perturbation energies,
and diagonalization cross-checks.
"""

from .closed_form import (
    HarmonicDecomposition,
    HarmonicTerm,
    SecularTerm,
    WeakCouplingWarning,
    classical_frequency_shift,
    first_order_solution,
    k_coefficients,
    renormalized_solution,
)
from .fock_quantum import (
    FockOperator,
    ShiftReport,
    SpectrumResult,
    dipole_matrix_element,
    eigen_spectrum,
    frequency_operator,
    hamiltonian,
    heisenberg_solution,
    momentum_operator,
    position_operator,
    quantum_frequency_shift,
    rspt_first_order_energy,
    shift_report,
    x_power_expectation,
)
from .ode_oracle import IntegrationError, Trajectory, estimate_frequency, integrate
from .oscillator import InitialState, OscillatorSpec, Rational, hamiltonian_energy
from .series_engine import (
    CoefficientSequence,
    DerivativePolynomial,
    Monomial,
    coefficient_sequence,
    derivative_polynomials,
    sextic_generator,
    taylor_partial_sum,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientSequence",
    "DerivativePolynomial",
    "FockOperator",
    "HarmonicDecomposition",
    "HarmonicTerm",
    "InitialState",
    "IntegrationError",
    "Monomial",
    "OscillatorSpec",
    "Rational",
    "SecularTerm",
    "ShiftReport",
    "SpectrumResult",
    "Trajectory",
    "WeakCouplingWarning",
    "classical_frequency_shift",
    "coefficient_sequence",
    "derivative_polynomials",
    "dipole_matrix_element",
    "eigen_spectrum",
    "estimate_frequency",
    "first_order_solution",
    "frequency_operator",
    "hamiltonian",
    "hamiltonian_energy",
    "heisenberg_solution",
    "integrate",
    "k_coefficients",
    "momentum_operator",
    "position_operator",
    "quantum_frequency_shift",
    "renormalized_solution",
    "rspt_first_order_energy",
    "sextic_generator",
    "shift_report",
    "taylor_partial_sum",
    "x_power_expectation",
]
