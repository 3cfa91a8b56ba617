"""Command-line driver: report, sweep, wavepacket, validate.

Exit codes: 0 success, 1 input or engine error, 2 cross-engine invariant
violation (values are still printed).
"""

from __future__ import annotations

import argparse
import sys

from .potential import PiecewisePotential
from .scenario import from_config, from_mapping, nondimensionalize
from .reporting import (ALL_ENGINES, SweepAxis, SweepSpec, build_report,
                        check_invariants, csv_footer, csv_header, csv_row,
                        render_table, run_sweep)
from .validate import run_acceptance
from . import wavepacket as wp

_SCENARIO_FLAGS = ("grav_const", "central_mass", "central_radius",
                   "particle_mass", "baseline_b", "wavenumber_k", "energy_E",
                   "hbar", "direction")


def _add_scenario_flags(parser):
    group = parser.add_argument_group("scenario (dimensional)")
    for name in _SCENARIO_FLAGS:
        kwargs = {} if name == "direction" else {"type": float}
        group.add_argument(f"--{name}", default=None, **kwargs)
    group.add_argument("--config", default=None, metavar="PATH",
                       help="flat key = value scenario file")
    scaled = parser.add_argument_group("scenario (scaled)")
    scaled.add_argument("--scaled", action="store_true",
                        help="take --kappa/--atilde directly")
    scaled.add_argument("--kappa", type=float, default=None)
    scaled.add_argument("--atilde", type=float, default=None)


def _resolve_point(args) -> tuple[float, float]:
    """(kappa, atilde) from --scaled flags, --config, or dimensional flags."""
    if args.scaled:
        if args.kappa is None or args.atilde is None:
            raise ValueError("--scaled requires --kappa and --atilde")
        return args.kappa, args.atilde
    if args.config is not None:
        scen = from_config(args.config)
    else:
        values = {k: getattr(args, k) for k in _SCENARIO_FLAGS
                  if getattr(args, k) is not None}
        if not values:
            raise ValueError("give --scaled --kappa --atilde, --config, or "
                             "dimensional scenario flags")
        scen = from_mapping(values)
    dimless = nondimensionalize(scen)
    return dimless.kappa, dimless.atilde


def _cmd_report(args) -> int:
    try:
        kappa, atilde = _resolve_point(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        rep = build_report(kappa, atilde, engines=tuple(args.engines.split(",")))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(render_table(rep))
    row = "\n".join([csv_header(), csv_row(rep)] + csv_footer())
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(row + "\n")
    else:
        print(row)
    if rep.errors:
        return 1
    violations = check_invariants(rep)
    for v in violations:
        print(f"invariant violation: {v}", file=sys.stderr)
    return 2 if violations else 0


def _cmd_sweep(args) -> int:
    try:
        spec = SweepSpec(axis=SweepAxis(args.axis), lo=args.lo, hi=args.hi,
                         points=args.points, scale=args.scale,
                         fixed=args.fixed, engines=tuple(args.engines.split(",")))
        run_sweep(spec, args.output)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {args.points} rows to {args.output}")
    return 0


def _cmd_wavepacket(args) -> int:
    try:
        kappa, atilde = _resolve_point(args)
        sigma = args.sigma if args.sigma is not None else 10.0 / kappa
        x0 = args.x0 if args.x0 is not None else -1.0 - 6.0 * sigma
        packet = wp.GaussianPacket(center_x0=x0, width_sigma=sigma,
                                   central_kappa=kappa)
        run = wp.propagate(packet, PiecewisePotential(atilde),
                           nodes_per_unit=args.nodes_per_unit,
                           dt=args.dt, t_final=args.t_final)
        t_arr = wp.arrival_time(run)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    drift = float(max(abs(run.norm_history - run.norm_history[0])))
    print(f"arrival_time = {t_arr:.12g}")
    print(f"free transit 2/kappa = {2.0 / kappa:.12g}")
    print(f"norm drift = {drift:.3e}, nodes = {run.n_nodes}, "
          f"dt = {run.timestep:.3e}")
    if args.flux_csv:
        wp.dump_flux_csv(run, args.flux_csv)
        print(f"flux series written to {args.flux_csv}")
    return 0


def _cmd_validate(args) -> int:
    results = run_acceptance(coarse=args.debug_coarse)
    width = max(len(r.name) for r in results)
    all_ok = True
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        all_ok &= r.passed
        print(f"[{mark}] {r.index:>2}. {r.name:<{width}}  "
              f"measured: {r.measured}  required: {r.required}")
    print("acceptance: " + ("all criteria pass" if all_ok
                            else "CRITERIA FAILED"))
    return 0 if all_ok else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="tidalclock",
        description="Quantum vs classical transit time in a tidal potential")
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", help="single-point cross-engine table")
    _add_scenario_flags(rep)
    rep.add_argument("--engines", default="classical,stationary,perturbation",
                     help=f"comma list from {','.join(ALL_ENGINES)}")
    rep.add_argument("--csv", default=None, metavar="PATH")
    rep.set_defaults(func=_cmd_report)

    swp = sub.add_parser("sweep", help="parameter sweep to CSV")
    swp.add_argument("--axis", choices=("kappa", "atilde"), required=True)
    swp.add_argument("--lo", type=float, required=True)
    swp.add_argument("--hi", type=float, required=True)
    swp.add_argument("--points", type=int, required=True)
    swp.add_argument("--scale", choices=("linear", "log"), default="linear")
    swp.add_argument("--fixed", type=float, default=0.0,
                     help="value of the non-swept parameter")
    swp.add_argument("--engines", default="classical,stationary,perturbation")
    swp.add_argument("--output", required=True, metavar="PATH")
    swp.set_defaults(func=_cmd_sweep)

    wpp = sub.add_parser("wavepacket", help="time-dependent bounce run")
    _add_scenario_flags(wpp)
    wpp.add_argument("--sigma", type=float, default=None,
                     help="packet width (default 10/kappa)")
    wpp.add_argument("--x0", type=float, default=None,
                     help="packet centre (default -1 - 6 sigma)")
    wpp.add_argument("--nodes-per-unit", type=int, default=512)
    wpp.add_argument("--dt", type=float, default=None)
    wpp.add_argument("--t-final", type=float, default=None)
    wpp.add_argument("--flux-csv", default=None, metavar="PATH")
    wpp.set_defaults(func=_cmd_wavepacket)

    val = sub.add_parser("validate", help="run the acceptance suite")
    val.add_argument("--debug-coarse", action="store_true",
                     help="negative control: degrade grids so convergence "
                          "criteria fail")
    val.set_defaults(func=_cmd_validate)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
