"""Command-line front end: simulations, verification, and CSV export.

Commands
  classical  trajectory table: zeroth order, first order, renormalized, oracle
  quantum    level-shift table from the shift formula, RSPT, and diagonalization
  coeffs     golden coefficient tables from the exact recurrence
  figure1    fixed preset a=2, lam=0.01, m=3 trajectory export over [0, 50]
  spectrum   eigenvalue/gap table against the closed-form level formulas
  verify     run the full acceptance suite; nonzero exit on any failure

Floats are written with 17 significant digits and exact ratios as "p/q",
so identical configurations produce byte-identical files.  The environment
variable ANHARMONIC_OUT_DIR overrides only the output directory.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import warnings
from pathlib import Path

import numpy as np

from . import acceptance, closed_form, fock_quantum, ode_oracle, series_engine
from .closed_form import WeakCouplingWarning
from .ode_oracle import IntegrationError
from .oscillator import InitialState, OscillatorSpec

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _resolve_out(path: str) -> Path:
    override = os.environ.get("ANHARMONIC_OUT_DIR")
    target = Path(path)
    if override:
        target = Path(override) / target.name
    return target


def _write_csv(path: Path, header: list[str], rows: list[list[str]]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [",".join(header)] + [",".join(row) for row in rows]
    path.write_text("\n".join(lines) + "\n")


def _trajectory_rows(spec: OscillatorSpec, state: InitialState, traj) -> list[list[str]]:
    rows = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", WeakCouplingWarning)
        for t, oracle in zip(traj.times, traj.positions):
            zeroth = state.x0 * math.cos(t) + state.v0 * math.sin(t)
            first = closed_form.first_order_solution(spec, state, t)
            renorm = closed_form.renormalized_solution(spec, state, t)
            rows.append([_fmt(t), _fmt(zeroth), _fmt(first), _fmt(renorm), _fmt(oracle)])
    return rows


def _cmd_classical(args: argparse.Namespace) -> int:
    spec = OscillatorSpec(args.m, args.lam)
    state = InitialState(args.x0, args.v0)
    traj = ode_oracle.integrate(spec, state, args.t_end, rel_tol=args.rel_tol, samples=args.samples)
    out = _resolve_out(args.out)
    _write_csv(out, ["t", "x_zeroth", "x_first_order", "x_renormalized", "x_oracle"],
               _trajectory_rows(spec, state, traj))
    print(f"wrote {out}")
    return EXIT_OK


def _cmd_figure1(args: argparse.Namespace) -> int:
    spec = OscillatorSpec(3, 0.01)
    state = InitialState(2.0, 0.0)
    traj = ode_oracle.integrate(spec, state, 50.0, rel_tol=args.rel_tol, samples=args.samples)
    out = _resolve_out(args.out)
    _write_csv(out, ["t", "x_zeroth", "x_first_order", "x_renormalized", "x_oracle"],
               _trajectory_rows(spec, state, traj))
    print(f"wrote {out}")
    return EXIT_OK


def _cmd_coeffs(args: argparse.Namespace) -> int:
    spec = OscillatorSpec(args.m)
    indices = [args.i] if args.i is not None else list(range(2 * args.m))
    sequences = [series_engine.coefficient_sequence(spec, i, args.count) for i in indices]
    if args.out:
        rows = []
        for seq in sequences:
            for r, term in enumerate(seq.terms, start=1):
                rows.append([str(args.m), str(seq.i), str(r),
                             str(term.numerator), str(term.denominator)])
        out = _resolve_out(args.out)
        _write_csv(out, ["m", "i", "r", "numerator", "denominator"], rows)
        print(f"wrote {out}")
    else:
        for seq in sequences:
            values = ", ".join(str(t) if t.denominator != 1 else str(t.numerator) for t in seq.terms)
            if args.i is not None:
                print(values)
            else:
                print(f"i={seq.i}: {values}")
    return EXIT_OK


def _cmd_quantum(args: argparse.Namespace) -> int:
    spec = OscillatorSpec(args.m, args.lam)
    n_max = args.n
    spectrum = fock_quantum.eigen_spectrum(
        fock_quantum.hamiltonian(spec, args.dim), n_max=max(n_max, 1)
    )
    rows = []
    for n in range(n_max + 1):
        formula = fock_quantum.quantum_frequency_shift(spec, n)
        if n == 0:
            rows.append([str(args.m), _fmt(spec.lam), str(args.dim), "0", _fmt(formula), "", "", ""])
        else:
            rspt = (
                fock_quantum.rspt_first_order_energy(spec, n)
                - fock_quantum.rspt_first_order_energy(spec, n - 1)
                - 1.0
            )
            diag = float(spectrum.gaps[n - 1]) - 1.0
            rows.append([
                str(args.m), _fmt(spec.lam), str(args.dim), str(n),
                _fmt(formula), _fmt(rspt), _fmt(diag), _fmt(abs(diag - formula)),
            ])
    out = _resolve_out(args.out)
    _write_csv(out, ["m", "lambda", "dim", "n", "shift_formula", "shift_rspt", "shift_diag", "residual"], rows)
    print(f"wrote {out}")
    if args.t_end is not None:
        level = max(n_max, 1)
        times = np.linspace(0.0, args.t_end, args.samples or 201)
        element_rows = []
        for t in times:
            element = fock_quantum.dipole_matrix_element(spec, args.dim, level, float(t))
            element_rows.append([
                str(args.m), _fmt(spec.lam), str(level), _fmt(t),
                _fmt(element.real), _fmt(element.imag), _fmt(abs(element)),
                _fmt(math.atan2(element.imag, element.real)),
            ])
        elements_out = out.with_name(out.stem + "_elements" + out.suffix)
        _write_csv(elements_out, ["m", "lambda", "n", "t", "re", "im", "abs", "phase"], element_rows)
        print(f"wrote {elements_out}")
    return EXIT_OK


def _cmd_spectrum(args: argparse.Namespace) -> int:
    spec = OscillatorSpec(args.m, args.lam)
    spectrum = fock_quantum.eigen_spectrum(fock_quantum.hamiltonian(spec, args.dim), n_max=args.n)
    rows = []
    for n in range(1, args.n + 1):
        e_diag = float(spectrum.level_energies[n])
        e_rspt = fock_quantum.rspt_first_order_energy(spec, n)
        gap_diag = float(spectrum.gaps[n - 1])
        gap_formula = 1.0 + fock_quantum.quantum_frequency_shift(spec, n)
        rows.append([
            str(args.m), _fmt(spec.lam), str(args.dim), str(n),
            _fmt(e_diag), _fmt(e_rspt), _fmt(gap_diag), _fmt(gap_formula),
            _fmt(abs(gap_diag - gap_formula)),
        ])
    out = _resolve_out(args.out)
    _write_csv(out, ["m", "lambda", "N", "n", "E_diag", "E_rspt", "gap_diag", "gap_formula", "residual"], rows)
    print(f"wrote {out}")
    return EXIT_OK


def _cmd_verify(_args: argparse.Namespace) -> int:
    results = acceptance.run_all()
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"{status}  criterion {res.cid}: {res.name} -- {res.detail}")
    failed = sum(not res.passed for res in results)
    print(f"{len(results) - failed}/{len(results)} criteria passed")
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anharmonic",
        description="First-order sextic/octic anharmonic oscillator solutions and checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    classical = sub.add_parser("classical", help="trajectory CSV with analytic and oracle columns")
    classical.add_argument("--m", type=int, required=True)
    classical.add_argument("--lambda", dest="lam", type=float, required=True)
    classical.add_argument("--x0", type=float, default=1.0)
    classical.add_argument("--v0", type=float, default=0.0)
    classical.add_argument("--t-end", dest="t_end", type=float, required=True)
    classical.add_argument("--samples", type=int, default=None)
    classical.add_argument("--rel-tol", dest="rel_tol", type=float, default=1e-10)
    classical.add_argument("--out", default="classical.csv")
    classical.set_defaults(func=_cmd_classical)

    quantum = sub.add_parser("quantum", help="level-shift CSV; with --t-end also dipole elements")
    quantum.add_argument("--m", type=int, required=True)
    quantum.add_argument("--lambda", dest="lam", type=float, required=True)
    quantum.add_argument("--n", type=int, default=4, help="highest level in the table")
    quantum.add_argument("--dim", type=int, default=100)
    quantum.add_argument("--t-end", dest="t_end", type=float, default=None)
    quantum.add_argument("--samples", type=int, default=None)
    quantum.add_argument("--out", default="quantum.csv")
    quantum.set_defaults(func=_cmd_quantum)

    coeffs = sub.add_parser("coeffs", help="exact coefficient tables (CSV or stdout)")
    coeffs.add_argument("--m", type=int, required=True)
    coeffs.add_argument("--i", type=int, default=None, help="single monomial index (default: all)")
    coeffs.add_argument("--count", type=int, default=8)
    coeffs.add_argument("--out", default=None)
    coeffs.set_defaults(func=_cmd_coeffs)

    figure1 = sub.add_parser("figure1", help="preset a=2, lam=0.01, m=3 trajectory on [0, 50]")
    figure1.add_argument("--samples", type=int, default=None)
    figure1.add_argument("--rel-tol", dest="rel_tol", type=float, default=1e-10)
    figure1.add_argument("--out", default="figure1.csv")
    figure1.set_defaults(func=_cmd_figure1)

    spectrum = sub.add_parser("spectrum", help="spectrum CSV against the level formulas")
    spectrum.add_argument("--m", type=int, required=True)
    spectrum.add_argument("--lambda", dest="lam", type=float, required=True)
    spectrum.add_argument("--n", type=int, default=4, help="highest gap index")
    spectrum.add_argument("--dim", type=int, default=100)
    spectrum.add_argument("--out", default="spectrum.csv")
    spectrum.set_defaults(func=_cmd_spectrum)

    verify = sub.add_parser("verify", help="run every acceptance criterion")
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (IntegrationError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
