"""Command-line interface: ``ghzboost {sweep,verify,wigner,epsilon}``."""
from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from .kinematics import wigner_angle, wigner_su2
from .mermin import mermin_epsilon, mermin_epsilon_closed_form, mermin_epsilon_exact
from .states import apply_local_unitaries, ghz_state
from .sweep import ConfigurationError, format_number, load_scenario, run_reference_cases, run_scenario, verification_report

EXIT_OK, EXIT_FAILED, EXIT_CONFIG = 0, 1, 2


def _floats(text: str, count: int, name: str) -> list[float]:
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise ConfigurationError(f"--{name}: expected {count} comma-separated numbers, got {text!r}")
    if len(values) != count or not all(math.isfinite(v) for v in values):
        raise ConfigurationError(f"--{name}: expected {count} finite comma-separated numbers, got {text!r}")
    return values


def _angle(value: float, degrees: bool) -> float:
    return math.radians(value) if degrees else value


def cmd_sweep(args) -> int:
    scenario = load_scenario(args.scenario, degrees=args.degrees)
    table = run_scenario(scenario)
    text = table.to_csv() if args.format == "csv" else table.to_json()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_reference_cases()
    sys.stdout.write(verification_report(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def cmd_wigner(args) -> int:
    try:
        delta = wigner_angle(args.xi, args.chi, _angle(args.theta, args.degrees))
    except ValueError as exc:
        raise ConfigurationError(str(exc)) from exc
    print(format_number(math.degrees(delta) if args.degrees else delta))
    return EXIT_OK


def cmd_epsilon(args) -> int:
    deltas = [_angle(v, args.degrees) for v in _floats(args.deltas, 3, "deltas")]
    phis = [_angle(v, args.degrees) for v in _floats(args.phis, 2, "phis")]
    if not all(0.0 <= d <= math.pi for d in deltas):
        raise ConfigurationError("--deltas: Wigner angles must lie in [0, pi]")
    us = [wigner_su2(d, p) for d, p in zip(deltas, phis + [0.0])]
    brute = mermin_epsilon(apply_local_unitaries(ghz_state(3), us)).epsilon
    print(f"closed_form {format_number(mermin_epsilon_closed_form(*deltas, *phis))}")
    print(f"brute_force {format_number(brute)}")
    print(f"exact_closed_form {format_number(mermin_epsilon_exact(*deltas, *phis))}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghzboost",
        description="GHZ correlations and the Mermin inequality seen by boosted observers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="evaluate a scenario file over its parameter grid")
    p.add_argument("scenario", help="JSON scenario file")
    p.add_argument("--out", help="write results here instead of stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--degrees", action="store_true", help="angles in the scenario are in degrees")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the named verification cases")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("wigner", help="print the Wigner rotation angle")
    p.add_argument("--xi", type=float, required=True, help="particle rapidity")
    p.add_argument("--chi", type=float, required=True, help="observer rapidity along +z")
    p.add_argument("--theta", type=float, required=True, help="particle polar angle")
    p.add_argument("--degrees", action="store_true", help="theta in, and angle out, in degrees")
    p.set_defaults(func=cmd_wigner)

    p = sub.add_parser("epsilon", help="Mermin |epsilon| from Wigner angles, closed form and brute force")
    p.add_argument("--deltas", required=True, help="delta1,delta2,delta3")
    p.add_argument("--phis", required=True, help="phi1,phi2 (phi3 is 0)")
    p.add_argument("--degrees", action="store_true")
    p.set_defaults(func=cmd_epsilon)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
