"""Command-line entry point: coupling curves, single runs, and rho sweeps."""

from __future__ import annotations

import argparse
import sys

from .coupling import mu_curve
from .dynamics import AllocationPolicy
from .errors import PfvaError
from .harness import (
    ExperimentConfig,
    SimulationRecord,
    emit_csv,
    load_config,
    run_simulation,
    sweep_rho,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfva",
        description="Dual-input actuator coupling analysis and crank-slider simulation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    curve = sub.add_parser("curve", help="tabulate mu and dmu/drho over a rho range")
    curve.add_argument("--rho-min", type=float, default=0.01)
    curve.add_argument("--rho-max", type=float, default=100.0)
    curve.add_argument("--samples", type=int, default=401)
    curve.add_argument("--i-joint", type=float, default=1.0)
    curve.add_argument("--log", action="store_true", help="log-spaced rho samples")
    curve.add_argument("--out", default="mu_curve.csv")

    sim = sub.add_parser("simulate", help="single crank-slider run at one rho")
    sim.add_argument("--config", default=None)
    sim.add_argument("--rho", type=float, default=None)
    sim.add_argument("--policy", choices=[p.value for p in AllocationPolicy])
    sim.add_argument("--out", default=None)

    sweep = sub.add_parser("sweep", help="run the simulation over a list of rho values")
    sweep.add_argument("--config", default=None)
    sweep.add_argument("--rhos", default=None, help="comma-separated rho list")
    sweep.add_argument("--policy", choices=[p.value for p in AllocationPolicy])
    sweep.add_argument("--out", default=None)

    return parser


def _config_from_args(args) -> ExperimentConfig:
    cfg = load_config(args.config) if args.config else ExperimentConfig()
    if args.policy:
        cfg.policy = AllocationPolicy(args.policy)
    if args.out:
        cfg.out = args.out
    return cfg


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "curve":
            table = mu_curve(
                args.rho_min, args.rho_max, args.samples, args.i_joint,
                log_spaced=args.log,
            )
            with open(args.out, "w", newline="") as fh:
                fh.write("rho,mu,dmu_drho\n")
                for rho, mu, dmu in table:
                    fh.write(f"{rho:.17g},{mu:.17g},{dmu:.17g}\n")
        elif args.command == "simulate":
            cfg = _config_from_args(args)
            rho = args.rho if args.rho is not None else cfg.rho
            records = run_simulation(cfg, rho)
            emit_csv(records, cfg.out, record_type=SimulationRecord)
        else:
            cfg = _config_from_args(args)
            if args.rhos:
                rhos = [float(v) for v in args.rhos.split(",") if v.strip()]
            else:
                rhos = cfg.rho_sweep
            emit_csv(sweep_rho(cfg, rhos), cfg.out)
    except (PfvaError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
