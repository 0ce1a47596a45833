"""Quantum side: truncated Fock-basis operators and first-order solutions.

Conventions, pinned once: the ladder actions
    X(0)|n>  = (1/sqrt 2) [sqrt(n)|n-1> + sqrt(n+1)|n+1>]
    X'(0)|n> = (-i/sqrt 2)[sqrt(n)|n-1> - sqrt(n+1)|n+1>]
fix <n-1|X(0)|n> = sqrt(n/2) and <n-1|X'(0)|n> = -i*sqrt(n/2).

Truncation pollutes the last rows and columns (X**(2m) reaches 2m places
from the edge), so every constructed operator carries a trusted_dim and
spectra are trusted only for levels n <= N/2.  First-order perturbation
energies are computed by an exact ladder walk in Fraction arithmetic, with
no truncation at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from .closed_form import k_coefficients
from .oscillator import OscillatorSpec

HERMITIAN_TOL = 1e-12


@dataclass(frozen=True)
class FockOperator:
    """Finite matrix restriction of an operator in the number basis."""

    entries: np.ndarray
    trusted_dim: int
    hermitian: bool | None = None

    def __post_init__(self) -> None:
        self.entries.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def is_hermitian(self, tol: float = HERMITIAN_TOL) -> bool:
        return bool(np.max(np.abs(self.entries - self.entries.conj().T)) <= tol)


@dataclass(frozen=True)
class SpectrumResult:
    level_energies: np.ndarray  # ascending, levels 0..n_max
    gaps: np.ndarray  # gaps[k] = E_{k+1} - E_k


@dataclass(frozen=True)
class ShiftReport:
    n: int
    shift_formula: float
    shift_rspt: float
    shift_diag: float
    residual: float


def _position_matrix(n_dim: int) -> np.ndarray:
    x = np.zeros((n_dim, n_dim), dtype=complex)
    for k in range(n_dim - 1):
        x[k, k + 1] = x[k + 1, k] = math.sqrt((k + 1) / 2)
    return x


def _momentum_matrix(n_dim: int) -> np.ndarray:
    p = np.zeros((n_dim, n_dim), dtype=complex)
    for k in range(n_dim - 1):
        p[k, k + 1] = -1j * math.sqrt((k + 1) / 2)
        p[k + 1, k] = +1j * math.sqrt((k + 1) / 2)
    return p


def position_operator(n_dim: int) -> FockOperator:
    """X(0): real symmetric tridiagonal with <n-1|X|n> = sqrt(n/2)."""
    if n_dim < 2:
        raise ValueError("need dimension >= 2")
    return FockOperator(_position_matrix(n_dim), trusted_dim=n_dim - 1, hermitian=True)


def momentum_operator(n_dim: int) -> FockOperator:
    """X'(0): pure imaginary tridiagonal, hermitian, <n-1|X'|n> = -i*sqrt(n/2)."""
    if n_dim < 2:
        raise ValueError("need dimension >= 2")
    return FockOperator(_momentum_matrix(n_dim), trusted_dim=n_dim - 1, hermitian=True)


def hamiltonian(spec: OscillatorSpec, n_dim: int) -> FockOperator:
    """P**2/2 + X**2/2 + (lam/2m) X**(2m) on the truncated basis."""
    if n_dim < 2 * spec.m + 2:
        raise ValueError(f"need dimension >= {2 * spec.m + 2} for m={spec.m}")
    x = _position_matrix(n_dim)
    p = _momentum_matrix(n_dim)
    h = p @ p / 2 + x @ x / 2 + spec.lam / (2 * spec.m) * np.linalg.matrix_power(x, 2 * spec.m)
    h = (h + h.conj().T) / 2
    return FockOperator(h, trusted_dim=n_dim - 2 * spec.m, hermitian=True)


def eigen_spectrum(operator: FockOperator, n_max: int) -> SpectrumResult:
    """Lowest n_max+1 eigenvalues (ascending) and consecutive gaps."""
    if not operator.is_hermitian():
        raise ValueError("eigen_spectrum requires a hermitian operator")
    if n_max < 0 or n_max > operator.dim // 2:
        raise ValueError(f"n_max must be in [0, dim/2] = [0, {operator.dim // 2}]")
    energies = np.linalg.eigvalsh(operator.entries)[: n_max + 1]
    return SpectrumResult(level_energies=energies, gaps=np.diff(energies))


def x_power_expectation(power: int, n: int) -> Fraction:
    """Exact <n|X**power|n> by a normal-ordering walk on the number lattice.

    Amplitudes are tracked relative to sqrt of the product of the ladder
    factors between level n and the current level, so every step multiplies
    by an integer and the diagonal return amplitude is exactly rational.
    """
    if power < 0 or n < 0:
        raise ValueError("power and n must be >= 0")
    state: dict[int, Fraction] = {0: Fraction(1)}
    for _ in range(power):
        nxt: dict[int, Fraction] = {}
        for k, c in state.items():
            up = c if k >= 0 else c * (n + k + 1)
            nxt[k + 1] = nxt.get(k + 1, Fraction(0)) + up
            down = c * (n + k) if k > 0 else c
            nxt[k - 1] = nxt.get(k - 1, Fraction(0)) + down
        state = nxt
    amplitude = state.get(0, Fraction(0))
    if power % 2:
        return Fraction(0)  # odd powers have no diagonal part
    return amplitude / 2 ** (power // 2)


def _rspt_polynomial(m: int, n: int) -> Fraction:
    """Paper polynomial multiplying lam in the first-order energy."""
    if m == 3:
        return Fraction(5, 48) * (4 * n**3 + 6 * n**2 + 8 * n + 3)
    if m == 4:
        return Fraction(35, 64) * (Fraction(3, 2) + 4 * n + 5 * n**2 + 2 * n**3 + n**4)
    raise ValueError(f"first-order energies implemented for m in {{3, 4}}, got {m}")


def rspt_energy_terms(m: int, n: int) -> tuple[Fraction, Fraction]:
    """Exact (base, lam-coefficient) of the first-order energy of level n.

    The lam coefficient is (1/2m) <n|X**(2m)|n> from the ladder walk and is
    checked against the closed-form level polynomial.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    coefficient = Fraction(1, 2 * m) * x_power_expectation(2 * m, n)
    expected = _rspt_polynomial(m, n)
    if coefficient != expected:
        raise RuntimeError(
            f"ladder walk disagrees with the level polynomial at m={m}, n={n}: "
            f"{coefficient} != {expected}"
        )
    return Fraction(2 * n + 1, 2), coefficient


def rspt_first_order_energy(spec: OscillatorSpec, n: int) -> float:
    base, coefficient = rspt_energy_terms(spec.m, n)
    return float(base) + spec.lam * float(coefficient)


def quantum_shift_coefficient(m: int, n: int) -> Fraction:
    """Exact coefficient of lam in the level-n frequency shift."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if m == 3:
        return Fraction(5, 4) * (Fraction(n**2) + Fraction(1, 2))
    if m == 4:
        return Fraction(35, 16) * (n**3 + 2 * n)
    raise ValueError(f"quantum shift implemented for m in {{3, 4}}, got {m}")


def quantum_frequency_shift(spec: OscillatorSpec, n: int) -> float:
    """Level-dependent shift: (5 lam/4)(n**2 + 1/2) for m=3, (35 lam/16)(n**3 + 2n) for m=4.

    n >= 1 carries gap semantics E_n - E_{n-1} - 1; n = 0 answers the
    vacuum-shift question (nonzero for m=3, exactly zero for m=4).
    """
    return spec.lam * float(quantum_shift_coefficient(spec.m, n))


def omega_coefficient(m: int, level: int) -> Fraction:
    """Exact lam-coefficient of the frequency-operator eigenvalue at a level."""
    h0 = Fraction(2 * level + 1, 2)
    if m == 3:
        return Fraction(5, 4) * (h0**2 + Fraction(1, 4))
    if m == 4:
        return Fraction(35, 64) * (4 * h0**3 + 5 * h0)
    raise ValueError(f"frequency operator implemented for m in {{3, 4}}, got {m}")


def frequency_operator(spec: OscillatorSpec, n_dim: int) -> FockOperator:
    """Diagonal operator whose level-n eigenvalue is 1 + lam * omega_coefficient(m, n)."""
    if n_dim < 2:
        raise ValueError("need dimension >= 2")
    diag = np.array(
        [1.0 + spec.lam * float(omega_coefficient(spec.m, level)) for level in range(n_dim)],
        dtype=complex,
    )
    return FockOperator(np.diag(diag), trusted_dim=n_dim, hermitian=True)


def secular_phase_rate(spec: OscillatorSpec, n: int) -> float:
    """Half-difference of adjacent frequency-operator eigenvalues.

    Equals (5 lam/4) n for m=3 and (35 lam/64)(6 n**2 + 3) for m=4; this is
    the phase whose cosine normalizes the dipole matrix element.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    half = (omega_coefficient(spec.m, n) - omega_coefficient(spec.m, n - 1)) / 2
    return spec.lam * float(half)


@lru_cache(maxsize=8)
def _weyl_factors(m: int, n_dim: int) -> tuple[np.ndarray, ...]:
    """Averages over all orderings of X**(2m-1-i) X'**i, i = 0..2m-1."""
    x = _position_matrix(n_dim)
    p = _momentum_matrix(n_dim)
    degree = 2 * m - 1
    factors = []
    for i in range(degree + 1):
        acc = np.zeros((n_dim, n_dim), dtype=complex)
        for x_slots in combinations(range(degree), degree - i):
            prod = np.eye(n_dim, dtype=complex)
            for slot in range(degree):
                prod = prod @ (x if slot in x_slots else p)
            acc += prod
        acc /= math.comb(degree, i)
        # The word set is closed under reversal, so the average is hermitian;
        # symmetrizing removes float rounding asymmetry from the products.
        factors.append((acc + acc.conj().T) / 2)
    for f in factors:
        f.setflags(write=False)
    return tuple(factors)


def weyl_symmetrized_factor(m: int, n_dim: int, i: int) -> np.ndarray:
    """Average of all orderings of the monomial X**(2m-1-i) X'**i."""
    degree = 2 * m - 1
    if not 0 <= i <= degree:
        raise ValueError(f"i must be in [0, {degree}]")
    return _weyl_factors(m, n_dim)[i]


def heisenberg_solution(spec: OscillatorSpec, n_dim: int, t: float) -> FockOperator:
    """X(t) to first order: X cos t + X' sin t plus the symmetrized response.

    Each classical response K_i(t) (secular terms included) multiplies the
    Weyl average of the corresponding operator monomial.
    """
    if spec.m not in (3, 4):
        raise ValueError(f"heisenberg solution implemented for m in {{3, 4}}, got {spec.m}")
    if n_dim < 2 * spec.m + 4:
        raise ValueError(f"need dimension >= {2 * spec.m + 4} for m={spec.m}")
    x = _position_matrix(n_dim)
    p = _momentum_matrix(n_dim)
    matrix = x * math.cos(t) + p * math.sin(t)
    factors = _weyl_factors(spec.m, n_dim)
    for k in k_coefficients(spec.m):
        matrix = matrix + spec.lam * k.evaluate(t) * factors[k.i]
    return FockOperator(matrix, trusted_dim=n_dim - 2 * spec.m, hermitian=True)


def dipole_matrix_element(spec: OscillatorSpec, n_dim: int, n: int, t: float) -> complex:
    """<n-1|X(t)|n> of the resummed solution, normalized at the element level.

    The zeroth-order part applies cos/sin of the frequency operator (diagonal
    in the number basis); the first-order part keeps only the bounded
    harmonic remainders; the result is divided by cos(secular phase * t).
    """
    if spec.m not in (3, 4):
        raise ValueError(f"dipole element implemented for m in {{3, 4}}, got {spec.m}")
    if not 1 <= n <= n_dim // 2:
        raise ValueError(f"n must be in [1, dim/2] = [1, {n_dim // 2}]")
    x = _position_matrix(n_dim)
    p = _momentum_matrix(n_dim)
    omegas = np.array(
        [1.0 + spec.lam * float(omega_coefficient(spec.m, level)) for level in range(n_dim)]
    )
    cos_d = np.cos(omegas * t)
    sin_d = np.sin(omegas * t)
    # (X C + C X + X' S + S X')/2 with C, S diagonal: scale columns and rows.
    resummed = (x * cos_d[None, :] + cos_d[:, None] * x + p * sin_d[None, :] + sin_d[:, None] * p) / 2
    factors = _weyl_factors(spec.m, n_dim)
    for k in k_coefficients(spec.m):
        resummed = resummed + spec.lam * k.evaluate_harmonics(t) * factors[k.i]
    phase = secular_phase_rate(spec, n) * t
    normalization = math.cos(phase)
    if abs(normalization) < 1e-12:
        raise ValueError("cos(secular phase) vanishes; element normalization undefined here")
    return complex(resummed[n - 1, n]) / normalization


def shift_report(spec: OscillatorSpec, n: int, n_dim: int) -> ShiftReport:
    """Compare the formula shift with RSPT and diagonalization gaps at level n."""
    if n < 1:
        raise ValueError("gap semantics require n >= 1")
    formula = quantum_frequency_shift(spec, n)
    rspt = rspt_first_order_energy(spec, n) - rspt_first_order_energy(spec, n - 1) - 1.0
    spectrum = eigen_spectrum(hamiltonian(spec, n_dim), n_max=n)
    diag = float(spectrum.gaps[n - 1]) - 1.0
    return ShiftReport(
        n=n,
        shift_formula=formula,
        shift_rspt=rspt,
        shift_diag=diag,
        residual=abs(diag - formula),
    )
