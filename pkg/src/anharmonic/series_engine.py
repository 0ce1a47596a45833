"""Exact Taylor-derivative recurrence for x'' + x + lam*x**(2m-1) = 0.

Successive time derivatives of x(t) at t=0 are kept as polynomials in
(x0, v0) graded by the power of lam and truncated at first order.  All
coefficients are Fractions; floats appear only when a polynomial is
evaluated.  The integer coefficient tables of the first-order solution
(and their generator identities) are read off these polynomials, which
makes this module the in-repo source of truth for those tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .oscillator import InitialState, OscillatorSpec

# Internal representation: {(a, b, lambda_order): coeff} for
# coeff * x0**a * v0**b * lam**lambda_order.
_Poly = dict[tuple[int, int, int], Fraction]


@dataclass(frozen=True)
class Monomial:
    """coeff * x0**a * v0**b * lam**lambda_order with lambda_order in {0, 1}."""

    a: int
    b: int
    lambda_order: int
    coeff: Fraction


@dataclass(frozen=True)
class DerivativePolynomial:
    """The k-th time derivative of x at t=0, truncated at first order in lam."""

    order: int
    terms: tuple[Monomial, ...]

    def coefficient(self, a: int, b: int, lambda_order: int) -> Fraction:
        for term in self.terms:
            if (term.a, term.b, term.lambda_order) == (a, b, lambda_order):
                return term.coeff
        return Fraction(0)

    def evaluate(self, x0: float, v0: float, lam: float) -> float:
        return sum(
            float(t.coeff) * x0**t.a * v0**t.b * lam**t.lambda_order for t in self.terms
        )


@dataclass(frozen=True)
class CoefficientSequence:
    """Successive integer contributions to the coefficient of x0**(2m-1-i) * v0**i."""

    i: int
    terms: tuple[Fraction, ...]


def _differentiate(poly: _Poly, power: int) -> _Poly:
    """d/dt of a polynomial in (x, v), substituting v' = -x - lam*x**power.

    Products that would reach second order in lam are dropped on the fly.
    """
    out: _Poly = {}

    def add(key: tuple[int, int, int], c: Fraction) -> None:
        total = out.get(key, Fraction(0)) + c
        if total:
            out[key] = total
        else:
            out.pop(key, None)

    for (a, b, q), c in poly.items():
        if a:
            add((a - 1, b + 1, q), c * a)
        if b:
            add((a + 1, b - 1, q), -c * b)
            if q == 0:
                add((a + power, b - 1, 1), -c * b)
    return out


def _raw_polynomials(m: int, max_order: int) -> list[_Poly]:
    polys: list[_Poly] = [{(1, 0, 0): Fraction(1)}]
    if max_order >= 1:
        polys.append({(0, 1, 0): Fraction(1)})
    power = 2 * m - 1
    while len(polys) <= max_order:
        polys.append(_differentiate(polys[-1], power))
    return polys


def _freeze(order: int, poly: _Poly) -> DerivativePolynomial:
    terms = tuple(
        Monomial(a, b, q, c) for (a, b, q), c in sorted(poly.items())
    )
    return DerivativePolynomial(order=order, terms=terms)


def derivative_polynomials(spec: OscillatorSpec, max_order: int) -> list[DerivativePolynomial]:
    """x^(k)(0) for k = 0..max_order as lam-truncated polynomials in (x0, v0)."""
    if max_order < 0:
        raise ValueError("max_order must be >= 0")
    raw = _raw_polynomials(spec.m, max_order)
    return [_freeze(k, p) for k, p in enumerate(raw)]


def coefficient_sequence(spec: OscillatorSpec, i: int, count: int) -> CoefficientSequence:
    """First `count` nonzero contributions to the coefficient of x0**(2m-1-i) * v0**i.

    Entries are the raw (integer-valued) coefficients as they appear in the
    derivative polynomials, i.e. before division by the Taylor factorial.
    """
    degree = 2 * spec.m - 1
    if not 0 <= i <= degree:
        raise ValueError(f"monomial index i must be in [0, {degree}], got {i}")
    if count < 1:
        raise ValueError("count must be >= 1")

    key = (degree - i, i, 1)
    found: list[Fraction] = []
    polys = _raw_polynomials(spec.m, 2)
    order = 2
    # Contributions appear every other order once they start; the cap only
    # guards against a runaway loop on a bad index.
    cap = 2 * count + degree + 8
    while len(found) < count:
        coeff = polys[order].get(key, Fraction(0))
        if coeff:
            found.append(coeff)
        order += 1
        if order > cap:
            raise RuntimeError(f"could not collect {count} terms for i={i} by order {cap}")
        if order >= len(polys):
            polys.append(_differentiate(polys[-1], degree))
    return CoefficientSequence(i=i, terms=tuple(found))


def sextic_generator(r: int) -> Fraction:
    """r-th term of the x0**5 coefficient sequence for m=3 in closed form:
    (-1)**r * (25**r + 15*9**r + 240*r - 16) / 384.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    return Fraction((-1) ** r * (25**r + 15 * 9**r + 240 * r - 16), 384)


def taylor_partial_sum(
    spec: OscillatorSpec, state: InitialState, t: float, max_order: int
) -> float:
    """Evaluate sum_{k<=max_order} x^(k)(0) * t**k / k! with lam-truncated derivatives."""
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    polys = derivative_polynomials(spec, max_order)
    total = 0.0
    term = 1.0  # t**k / k!
    for k, poly in enumerate(polys):
        if k:
            term *= t / k
        total += poly.evaluate(state.x0, state.v0, spec.lam) * term
    return total
