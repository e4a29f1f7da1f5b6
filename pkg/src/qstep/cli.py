"""qstep command line: solve, field, scan, verify, packet, report.

Exit codes: 0 success, 2 validation failure, 3 zone-boundary degeneracy,
4 unwritable output, 5 verification failure.  Set QSTEP_LOG to error,
warn, info or debug to control logging.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from typing import Sequence

from .errors import (
    DegenerateEnergy,
    InternalDegeneracy,
    NonPositiveEnergy,
    SingularSystem,
    UnresolvedPeak,
    ZoneCrossing,
)
from .oracle import PacketSpec, packet_arrival
from .scattering import DEFAULT_PHASE_STEP, delay_times, phase_data, solve_step
from .step import EnergyZone, StepPotential
from .verify import run_verification

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_DEGENERATE = 3
EXIT_UNWRITABLE = 4
EXIT_VERIFY_FAILED = 5

ILL_CONDITIONED_RHO = 1e-6

_LOG_LEVELS = {
    "error": logging.ERROR,
    "warn": logging.WARNING,
    "info": logging.INFO,
    "debug": logging.DEBUG,
}

log = logging.getLogger("qstep")


def _configure_logging() -> None:
    level = os.environ.get("QSTEP_LOG", "warn").strip().lower()
    logging.basicConfig(
        level=_LOG_LEVELS.get(level, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )


def _complex_pair(value: complex) -> list[float]:
    return [float(value.real), float(value.imag)]


def _emit_text(text: str, output: str) -> None:
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        log.info("wrote %s", output)


def _potential(args: argparse.Namespace) -> StepPotential:
    return StepPotential(args.v1, args.v2, args.v3)


def cmd_solve(args: argparse.Namespace) -> int:
    pot = _potential(args)
    sol = solve_step(pot, args.energy)
    phases = phase_data(sol)
    delays = delay_times(pot, args.energy, args.h)

    payload: dict[str, object] = {
        "zone": sol.zone.value,
        "r": _complex_pair(sol.r),
        "t": _complex_pair(sol.t),
        "r_tilde": _complex_pair(sol.r_tilde),
        "t_tilde": _complex_pair(sol.t_tilde),
        "R": sol.R,
        "T": sol.T,
    }
    if sol.zone is EnergyZone.A:
        payload["theta_n"] = phases.theta_n
        payload["theta_d"] = phases.theta_d
        payload["tau_r"] = delays.tau_r
        payload["tau_t"] = delays.tau_t
    else:
        payload["theta"] = phases.theta
        payload["tau_r"] = delays.tau_r
    payload["flags"] = {
        "ill_conditioned": sol.zone is EnergyZone.A and abs(sol.params.rho_minus) < ILL_CONDITIONED_RHO
    }
    print(json.dumps(payload))
    return EXIT_OK


def cmd_field(args: argparse.Namespace) -> int:
    from .report import format_field_csv
    from .wavefield import sample_grid

    sol = solve_step(_potential(args), args.energy)
    samples = sample_grid(sol, args.x_min, args.x_max, args.n)
    _emit_text(format_field_csv(samples), args.output)
    return EXIT_OK


def _scan_points(args: argparse.Namespace) -> list[tuple[float, StepPotential, float]]:
    if args.steps < 1:
        raise ValueError("steps must be at least 1.")
    values = [
        args.start + (args.stop - args.start) * i / (args.steps - 1) if args.steps > 1 else args.start
        for i in range(args.steps)
    ]
    points: list[tuple[float, StepPotential, float]] = []
    if args.param == "energy":
        pot = _potential(args)
        for value in values:
            points.append((value, pot, value))
    else:
        if args.energy is None:
            raise ValueError("ratio scans need --energy.")
        base = _potential(args)
        v0 = base.v0
        w_mag = base.w_mag
        if w_mag > 0.0:
            direction = (base.v2 / w_mag, base.v3 / w_mag)
        else:
            direction = (1.0, 0.0)
        for value in values:
            if not 0.0 <= value <= 1.0:
                raise ValueError("ratio values must lie in [0, 1].")
            w_new = value * v0
            v1_new = math.sqrt(max(0.0, 1.0 - value * value)) * v0
            points.append((value, StepPotential(v1_new, w_new * direction[0], w_new * direction[1]), args.energy))
    return points


def cmd_scan(args: argparse.Namespace) -> int:
    rows = [f"{args.param},zone,R,T,tau_r,tau_t"]
    nan = float("nan")
    for value, pot, energy in _scan_points(args):
        sol = solve_step(pot, energy)
        try:
            delays = delay_times(pot, energy, args.h)
            tau_r = delays.tau_r
            tau_t = delays.tau_t if delays.tau_t is not None else nan
        except ZoneCrossing:
            tau_r = nan
            tau_t = nan
        rows.append(
            ",".join(
                [format(value, ".17g"), sol.zone.value]
                + [format(v, ".17g") for v in (sol.R, sol.T, tau_r, tau_t)]
            )
        )
    _emit_text("\n".join(rows) + "\n", args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_verification(args.cases, args.rng_seed)
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"FAILED {len(failed)} of {len(results)} properties")
        return EXIT_VERIFY_FAILED
    print(f"OK {len(results)} properties")
    return EXIT_OK


def cmd_packet(args: argparse.Namespace) -> int:
    pot = _potential(args)
    eps0 = math.sqrt(args.energy) if args.energy > 0 else 0.0
    sigma = args.sigma_eps if args.sigma_eps is not None else 0.02 * eps0
    t_scan = None
    if args.t_min is not None or args.t_max is not None:
        if args.t_min is None or args.t_max is None:
            raise ValueError("provide both --t-min and --t-max, or neither.")
        t_scan = (args.t_min, args.t_max, args.n_t)
    spec = PacketSpec(e0=args.energy, sigma_eps=sigma, n_quad=args.n_quad, t_scan=t_scan)
    result = packet_arrival(pot, spec)

    if args.output is not None:
        header = "t,abs_psi_refl"
        columns = [result.times, result.abs_refl]
        if result.abs_trans is not None:
            header += ",abs_psi_trans"
            columns.append(result.abs_trans)
        lines = [header]
        for i in range(len(result.times)):
            lines.append(",".join(format(float(col[i]), ".17g") for col in columns))
        _emit_text("\n".join(lines) + "\n", args.output)

    payload: dict[str, object] = {
        "zone": result.zone.value,
        "tau_r_predicted": result.tau_r_predicted,
        "tau_r_measured": result.tau_r_measured,
    }
    if result.tau_t_measured is not None:
        payload["tau_t_predicted"] = result.tau_t_predicted
        payload["tau_t_measured"] = result.tau_t_measured
    print(json.dumps(payload))
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    from .report import write_report

    sol = solve_step(_potential(args), args.energy)
    csv_path, png_path = write_report(sol, args.x_min, args.x_max, args.n, args.output_dir, args.stem)
    print(json.dumps({"csv": str(csv_path), "png": str(png_path)}))
    return EXIT_OK


def _add_potential_arguments(parser: argparse.ArgumentParser, energy_required: bool = True) -> None:
    parser.add_argument("--v1", type=float, default=0.0, help="imaginary i amplitude of the step (>= 0)")
    parser.add_argument("--v2", type=float, default=0.0, help="imaginary j amplitude of the step")
    parser.add_argument("--v3", type=float, default=0.0, help="imaginary k amplitude of the step")
    parser.add_argument(
        "--energy", type=float, required=energy_required, default=None, help="incident energy E = eps^2 > 0"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qstep",
        description="Analytic scattering on a quaternionic potential step (hbar = 2m = 1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="coefficients, probabilities, phases and delay times as JSON")
    _add_potential_arguments(p_solve)
    p_solve.add_argument("--h", type=float, default=DEFAULT_PHASE_STEP, help="FD step in eps for phase derivatives")
    p_solve.set_defaults(func=cmd_solve)

    p_field = sub.add_parser("field", help="sample the stationary wave on an adimensional grid as CSV")
    _add_potential_arguments(p_field)
    p_field.add_argument("--x-min", type=float, default=-6.0, help="lower adimensional bound sqrt(V0) x")
    p_field.add_argument("--x-max", type=float, default=6.0, help="upper adimensional bound sqrt(V0) x")
    p_field.add_argument("--n", type=int, default=1201, help="grid points")
    p_field.add_argument("--output", default="-", help="CSV path, - for stdout")
    p_field.set_defaults(func=cmd_field)

    p_scan = sub.add_parser("scan", help="R, T and delay times swept over energy or |W|/V0 ratio as CSV")
    _add_potential_arguments(p_scan, energy_required=False)
    p_scan.add_argument("--param", choices=("energy", "ratio"), required=True)
    p_scan.add_argument("--start", type=float, required=True)
    p_scan.add_argument("--stop", type=float, required=True)
    p_scan.add_argument("--steps", type=int, required=True)
    p_scan.add_argument("--h", type=float, default=DEFAULT_PHASE_STEP, help="FD step in eps for phase derivatives")
    p_scan.add_argument("--output", default="-", help="CSV path, - for stdout")
    p_scan.set_defaults(func=cmd_scan)

    p_verify = sub.add_parser("verify", help="run the randomized property suite")
    p_verify.add_argument("--cases", type=int, default=10000)
    p_verify.add_argument("--rng-seed", type=int, default=1)
    p_verify.set_defaults(func=cmd_verify)

    p_packet = sub.add_parser("packet", help="wave-packet arrival times against stationary-phase predictions")
    _add_potential_arguments(p_packet)
    p_packet.add_argument("--sigma-eps", type=float, default=None, help="momentum width (default 0.02 sqrt(E))")
    p_packet.add_argument("--n-quad", type=int, default=4001, help="trapezoid nodes over eps0 +/- 5 sigma")
    p_packet.add_argument("--t-min", type=float, default=None)
    p_packet.add_argument("--t-max", type=float, default=None)
    p_packet.add_argument("--n-t", type=int, default=2001, help="scan points in t")
    p_packet.add_argument("--output", default=None, help="optional CSV path for the |psi|(t) series")
    p_packet.set_defaults(func=cmd_packet)

    p_report = sub.add_parser("report", help="field CSV plus rendered component figure")
    _add_potential_arguments(p_report)
    p_report.add_argument("--x-min", type=float, default=-6.0)
    p_report.add_argument("--x-max", type=float, default=6.0)
    p_report.add_argument("--n", type=int, default=1201)
    p_report.add_argument("--output-dir", default=".")
    p_report.add_argument("--stem", default="field", help="basename for <stem>.csv and <stem>.png")
    p_report.set_defaults(func=cmd_report)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NonPositiveEnergy as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ValueError, UnresolvedPeak) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (DegenerateEnergy, InternalDegeneracy, SingularSystem, ZoneCrossing) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNWRITABLE


if __name__ == "__main__":
    raise SystemExit(main())
