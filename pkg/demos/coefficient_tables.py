#!/usr/bin/env python3
"""Walk through the exact machinery behind the first-order solutions.

Shows the lam-truncated derivative polynomials, the integer coefficient
tables they generate, the closed-form generator for the sextic leading
sequence, and the resummed harmonic decompositions for m = 3 and m = 4.
"""

from fractions import Fraction

from anharmonic import (
    OscillatorSpec,
    coefficient_sequence,
    derivative_polynomials,
    k_coefficients,
    sextic_generator,
)

SUPERSCRIPTS = {"cosine": "cos", "sine": "sin", "t_sine": "t sin t", "t_cosine": "t cos t"}


def show_derivatives(m: int, orders: int) -> None:
    spec = OscillatorSpec(m)
    print(f"Derivatives of x at t=0 for m={m} (through order {orders}, lam^2 dropped):")
    for poly in derivative_polynomials(spec, orders)[2:]:
        pieces = []
        for term in poly.terms:
            factor = "" if term.lambda_order == 0 else " lam"
            xs = f" x0^{term.a}" if term.a else ""
            vs = f" v0^{term.b}" if term.b else ""
            pieces.append(f"{term.coeff:+}{factor}{xs}{vs}")
        print(f"  x^({poly.order})(0) =", " ".join(pieces))
    print()


def show_sequences(m: int, count: int) -> None:
    spec = OscillatorSpec(m)
    print(f"Integer contribution tables for m={m} (raw, before Taylor factorials):")
    for i in range(2 * m):
        seq = coefficient_sequence(spec, i, count)
        print(f"  x0^{2 * m - 1 - i} v0^{i}:", ", ".join(str(t) for t in seq.terms))
    print()


def show_generator(count: int) -> None:
    print("Sextic leading sequence vs its closed-form generator"
          " (-1)^r (25^r + 15*9^r + 240 r - 16)/384:")
    seq = coefficient_sequence(OscillatorSpec(3), 0, count)
    for r in range(1, count + 1):
        print(f"  r={r}: table {seq.terms[r - 1]:>12}  generator {sextic_generator(r):>12}")
    print()


def show_responses(m: int) -> None:
    denom = 384 if m == 3 else 3072
    print(f"First-order responses K_i(t) for m={m}, written over /{denom}:")
    for dec in k_coefficients(m):
        parts = [
            f"{term.coeff * denom:+} {SUPERSCRIPTS[term.kind]} {term.harmonic}t"
            for term in dec.harmonics
        ]
        parts.append(f"{dec.secular.coeff * denom:+} {SUPERSCRIPTS[dec.secular.kind]}")
        print(f"  K_{dec.i} = (1/{denom}) [ " + "  ".join(parts) + " ]")
    closure = sum((t.coeff for dec in k_coefficients(m) if dec.i == 0 for t in dec.harmonics),
                  Fraction(0))
    print(f"  sum of K_0 harmonic coefficients = {closure} (value preserved at t=0)")
    print()


if __name__ == "__main__":
    show_derivatives(3, 5)
    show_sequences(3, 6)
    show_generator(8)
    show_sequences(4, 5)
    show_responses(3)
    show_responses(4)
