"""Closed-form first-order solutions and secular resummation, classical case.

Each monomial x0**(2m-1-i) * v0**i of the first-order correction responds
to a forcing -C(2m-1,i) * cos(t)**(2m-1-i) * sin(t)**i through the driven
oscillator y'' + y = f with y(0) = y'(0) = 0.  Expanding the forcing into
multiple-angle harmonics (exactly, in Fractions) gives the response as a
handful of cos(jt)/sin(jt) terms plus one resonant secular term t*sin(t)
or t*cos(t).  Resumming the secular term into a shifted frequency yields
the renormalized, bounded solution and the amplitude-dependent frequency
shift lam * a**(2m-2) * C(2m-1, m-1) / 2**(2m-1).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .oscillator import InitialState, OscillatorSpec

COSINE = "cosine"
SINE = "sine"
T_SINE = "t_sine"
T_COSINE = "t_cosine"


class WeakCouplingWarning(UserWarning):
    """Raised when |shift * t| is large enough that sin(x)=x resummation degrades."""


@dataclass(frozen=True)
class HarmonicTerm:
    harmonic: int
    kind: str  # COSINE or SINE
    coeff: Fraction


@dataclass(frozen=True)
class SecularTerm:
    kind: str  # T_SINE or T_COSINE
    coeff: Fraction


@dataclass(frozen=True)
class HarmonicDecomposition:
    """Response K_i(t): bounded harmonics plus exactly one secular term.

    Satisfies K_i(0) = 0 and K_i'(0) = 0; the initial conditions live
    entirely in the zeroth-order solution.
    """

    i: int
    harmonics: tuple[HarmonicTerm, ...]
    secular: SecularTerm

    def evaluate_harmonics(self, t: float) -> float:
        # Cosine terms are summed as c*(cos(jt)-1) + float(sum c): the exact
        # rational constant makes the value at t=0 exactly 0.0.
        cos_sum = Fraction(0)
        value = 0.0
        for term in self.harmonics:
            if term.kind == COSINE:
                value += float(term.coeff) * (math.cos(term.harmonic * t) - 1.0)
                cos_sum += term.coeff
            else:
                value += float(term.coeff) * math.sin(term.harmonic * t)
        return value + float(cos_sum)

    def evaluate_secular(self, t: float) -> float:
        if self.secular.kind == T_SINE:
            return float(self.secular.coeff) * t * math.sin(t)
        return float(self.secular.coeff) * t * math.cos(t)

    def evaluate(self, t: float) -> float:
        return self.evaluate_harmonics(t) + self.evaluate_secular(t)

    def taylor_coefficient(self, k: int) -> Fraction:
        """Exact coefficient of t**k in the Taylor expansion about 0."""
        total = Fraction(0)
        for term in self.harmonics:
            j = term.harmonic
            if term.kind == COSINE and k % 2 == 0:
                total += term.coeff * Fraction((-1) ** (k // 2) * j**k, math.factorial(k))
            elif term.kind == SINE and k % 2 == 1:
                total += term.coeff * Fraction((-1) ** ((k - 1) // 2) * j**k, math.factorial(k))
        if self.secular.kind == T_SINE and k % 2 == 0 and k >= 2:
            total += self.secular.coeff * Fraction((-1) ** (k // 2 - 1), math.factorial(k - 1))
        elif self.secular.kind == T_COSINE and k % 2 == 1:
            total += self.secular.coeff * Fraction((-1) ** ((k - 1) // 2), math.factorial(k - 1))
        return total


# A trig polynomial is {(j, kind): coeff} for coeff*cos(jt) / coeff*sin(jt).
_Trig = dict[tuple[int, str], Fraction]


def _trig_add(poly: _Trig, j: int, kind: str, coeff: Fraction) -> None:
    if j < 0:
        if kind == SINE:
            coeff = -coeff
        j = -j
    if j == 0 and kind == SINE:
        return
    total = poly.get((j, kind), Fraction(0)) + coeff
    if total:
        poly[(j, kind)] = total
    else:
        poly.pop((j, kind), None)


def _trig_mul_base(poly: _Trig, base: str) -> _Trig:
    """Multiply by cos(t) or sin(t) using product-to-sum identities."""
    half = Fraction(1, 2)
    out: _Trig = {}
    for (j, kind), c in poly.items():
        if base == COSINE:
            # cos(jt)cos t, sin(jt)cos t keep the kind
            _trig_add(out, j - 1, kind, c * half)
            _trig_add(out, j + 1, kind, c * half)
        elif kind == COSINE:
            # cos(jt)sin t = (sin((j+1)t) - sin((j-1)t))/2
            _trig_add(out, j + 1, SINE, c * half)
            _trig_add(out, j - 1, SINE, -c * half)
        else:
            # sin(jt)sin t = (cos((j-1)t) - cos((j+1)t))/2
            _trig_add(out, j - 1, COSINE, c * half)
            _trig_add(out, j + 1, COSINE, -c * half)
    return out


def _cos_sin_power(a: int, b: int) -> _Trig:
    """Exact multiple-angle expansion of cos(t)**a * sin(t)**b."""
    poly: _Trig = {(0, COSINE): Fraction(1)}
    for _ in range(a):
        poly = _trig_mul_base(poly, COSINE)
    for _ in range(b):
        poly = _trig_mul_base(poly, SINE)
    return poly


def _solve_driven(forcing: _Trig, i: int) -> HarmonicDecomposition:
    """Particular-plus-homogeneous solution of y'' + y = forcing, y(0)=y'(0)=0."""
    harmonics: _Trig = {}
    secular: SecularTerm | None = None
    value0 = Fraction(0)  # particular value at t=0
    slope0 = Fraction(0)  # particular derivative at t=0
    for (j, kind), c in forcing.items():
        if j == 1:
            # resonant: cos t -> (t/2) sin t, sin t -> -(t/2) cos t
            if kind == COSINE:
                secular = SecularTerm(T_SINE, c / 2)
            else:
                secular = SecularTerm(T_COSINE, -c / 2)
                slope0 += -c / 2
        else:
            amp = c / (1 - j * j)
            _trig_add(harmonics, j, kind, amp)
            if kind == COSINE:
                value0 += amp
            else:
                slope0 += j * amp
    assert secular is not None, "odd-power forcing always has a resonant component"
    _trig_add(harmonics, 1, COSINE, -value0)
    _trig_add(harmonics, 1, SINE, -slope0)
    terms = tuple(
        HarmonicTerm(j, kind, c)
        for (j, kind), c in sorted(harmonics.items(), key=lambda kv: (-kv[0][0], kv[0][1]))
    )
    return HarmonicDecomposition(i=i, harmonics=terms, secular=secular)


@lru_cache(maxsize=None)
def _derive_k(m: int) -> tuple[HarmonicDecomposition, ...]:
    degree = 2 * m - 1
    out = []
    for i in range(degree + 1):
        forcing = _cos_sin_power(degree - i, i)
        scale = Fraction(-math.comb(degree, i))
        forcing = {key: scale * c for key, c in forcing.items()}
        out.append(_solve_driven(forcing, i))
    return tuple(out)


def k_coefficients(m: int) -> list[HarmonicDecomposition]:
    """Response coefficients K_0..K_{2m-1} of the first-order correction."""
    if m not in (3, 4):
        raise ValueError(f"closed forms are implemented for m in {{3, 4}}, got {m}")
    return list(_derive_k(m))


def first_order_solution(spec: OscillatorSpec, state: InitialState, t: float) -> float:
    """Zeroth- plus first-order solution, secular terms included (divergent form)."""
    ks = k_coefficients(spec.m)
    x0, v0 = state.x0, state.v0
    degree = spec.power
    correction = sum(
        k.evaluate(t) * x0 ** (degree - k.i) * v0**k.i for k in ks
    )
    return x0 * math.cos(t) + v0 * math.sin(t) + spec.lam * correction


def classical_frequency_shift(spec: OscillatorSpec, amplitude: float) -> float:
    """Amplitude-dependent first-order shift lam * a**(2m-2) * C(2m-1, m-1) / 2**(2m-1).

    Reduces to (3/8) lam a**2, (5/16) lam a**4 and (35/128) lam a**6 for
    m = 2, 3, 4.  The m=2 value is an extension verified only against the
    numerical oracle.
    """
    if spec.m not in (2, 3, 4):
        raise ValueError(f"frequency shift implemented for m in {{2, 3, 4}}, got {spec.m}")
    if amplitude < 0:
        raise ValueError("amplitude must be >= 0")
    factor = Fraction(math.comb(2 * spec.m - 1, spec.m - 1), 2 ** (2 * spec.m - 1))
    return spec.lam * amplitude ** (2 * spec.m - 2) * float(factor)


def renormalized_solution(spec: OscillatorSpec, state: InitialState, t: float) -> float:
    """First-order solution with the secular term resummed into a frequency shift.

    For v0=0 this is a*cos((1+shift)t) plus the bounded harmonic remainder;
    for v0 != 0 the amplitude is a = hypot(x0, v0) with phase atan2(v0, x0)
    and the same shift(a) is applied (oracle-verified extension).
    """
    ks = k_coefficients(spec.m)
    a = state.amplitude
    shift = classical_frequency_shift(spec, a)
    if abs(shift * t) > 0.5:
        warnings.warn(
            f"|shift*t| = {abs(shift * t):.3g} > 0.5; small-angle resummation degrades",
            WeakCouplingWarning,
            stacklevel=2,
        )
    x0, v0 = state.x0, state.v0
    degree = spec.power
    remainder = sum(
        k.evaluate_harmonics(t) * x0 ** (degree - k.i) * v0**k.i for k in ks
    )
    return a * math.cos((1.0 + shift) * t - state.phase) + spec.lam * remainder
