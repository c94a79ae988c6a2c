"""Command-line front end.

Usage:
    qbox spectrum --J0 16 --format json
    qbox mode --n 1 --J0 8 --format csv
    qbox uncertainty --n 1 --J0 4
    qbox scan --J0 3
    qbox evolve --omega 1 --tau0 0.1 --steps 100 --seed euler
    qbox sweep --n 1 --J0 16,32,64,128 --quantity energy

Exit codes: 0 success, 1 usage error, 2 numeric/domain error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from .analysis import Quantity, sweep
from .core import DomainError, PhysicalParams, make_lattice
from .evolution import EvolutionParams, Seed, evolve_recurrence
from .observables import heisenberg_scan, lattice_uncertainties
from .oracle import ConvergenceError, GhostPolicy, verify_spectrum
from .report import render_report
from .spectrum import q_eigenfunction

EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--L", type=float, default=1.0, help="box length")
    common.add_argument("--hbar", type=float, default=1.0)
    common.add_argument("--mass", type=float, default=1.0)
    common.add_argument("--c", type=float, default=1.0, help="light speed (tau0 = lambda0 / c)")
    common.add_argument("--out", default=None, help="output file (default: stdout)")
    common.add_argument("--format", choices=["csv", "json"], default="json")

    parser = _Parser(prog="qbox", description="Particle in a box on a space-time lattice.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", parents=[common], help="closed-form vs oracle spectrum")
    p.add_argument("--J0", type=int, required=True)
    p.add_argument("--policy", choices=[g.value for g in GhostPolicy], default="odd")

    p = sub.add_parser("mode", parents=[common], help="lattice eigenfunction dump")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--J0", type=int, required=True)

    p = sub.add_parser("uncertainty", parents=[common], help="uncertainty report for one mode")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--J0", type=int, required=True)

    p = sub.add_parser("scan", parents=[common], help="uncertainty products for every mode")
    p.add_argument("--J0", type=int, required=True)

    p = sub.add_parser("evolve", parents=[common], help="leapfrog phase sequence")
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--tau0", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", choices=[s.value for s in Seed], default="closed")

    p = sub.add_parser("sweep", parents=[common], help="convergence sweep with power-law fit")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--J0", type=_int_list, required=True, help="comma-separated list, e.g. 16,32,64")
    p.add_argument("--quantity", choices=[q.value for q in Quantity], required=True)
    return parser


def run(args: argparse.Namespace):
    params = PhysicalParams(hbar=args.hbar, mass=args.mass, L=args.L, c=args.c)
    cmd = args.command
    if cmd == "spectrum":
        return verify_spectrum(make_lattice(params, args.J0), GhostPolicy(args.policy))
    if cmd == "mode":
        return q_eigenfunction(args.n, make_lattice(params, args.J0))
    if cmd == "uncertainty":
        return lattice_uncertainties(args.n, make_lattice(params, args.J0))
    if cmd == "scan":
        return heisenberg_scan(make_lattice(params, args.J0))
    if cmd == "evolve":
        return evolve_recurrence(EvolutionParams(args.omega, args.tau0, args.steps), Seed(args.seed))
    if cmd == "sweep":
        return sweep(args.n, args.J0, Quantity(args.quantity), params)
    raise AssertionError(cmd)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run(args)
    except (DomainError, ConvergenceError) as exc:
        print(f"qbox: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    try:
        text = render_report(report, args.format, args.out)
    except OSError as exc:
        print(f"qbox: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    if args.out is None:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
