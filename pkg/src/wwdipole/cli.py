"""Command line front end.

    wwdipole compare --z0 0.01 --omega 1 --dimensionless
    wwdipole pattern --beta 0.01 --ntheta 16 --format csv
    wwdipole --check report.json

Exit status: 0 success, 1 failed ``--check``, 2 argument error,
3 numerical nonconvergence.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .radiometry import DEFAULT_N_THETA, DEFAULT_N_TIME, DEFAULT_RADIUS_LAMBDAS
from .report import (
    NumericParams,
    check_report,
    emit_pattern,
    format_pattern,
    format_record,
    run_compare,
    run_estimate,
    run_exact,
    run_simulate,
)
from .retarded import NoConvergence
from .units import DEFAULT_ALPHA, DipoleConfig, UnitSystem

COMMANDS = ("estimate", "exact", "simulate", "compare", "pattern")
FORMATS = ("table", "csv", "json")
CONFIG_KEYS = {
    "z0", "beta", "omega", "charge", "units", "alpha", "radius_lambdas",
    "ntheta", "ntime", "format", "normalization",
}
DEFAULTS = {
    "omega": 1.0,
    "units": "dimensionless",
    "radius_lambdas": DEFAULT_RADIUS_LAMBDAS,
    "ntheta": DEFAULT_N_THETA,
    "ntime": DEFAULT_N_TIME,
    "format": "table",
    "normalization": "self-consistent",
}

EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NONCONVERGENCE = 3


class InvalidArgument(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    config: DipoleConfig
    units: UnitSystem
    params: NumericParams
    format: str
    normalization: str


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    amp = common.add_mutually_exclusive_group()
    amp.add_argument("--z0", type=float, help="oscillation amplitude")
    amp.add_argument("--beta", type=float, help="peak speed over c (z0 = beta c / omega)")
    common.add_argument("--omega", type=float, help="angular frequency (default 1)")
    common.add_argument("--charge", type=float, help="charge (default: elementary charge of the unit system)")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--dimensionless", dest="units", action="store_const", const="dimensionless")
    mode.add_argument("--gaussian", dest="units", action="store_const", const="gaussian")
    common.add_argument("--alpha", type=float, help=f"fine-structure constant, dimensionless mode (default {DEFAULT_ALPHA})")
    common.add_argument("--radius-lambdas", dest="radius_lambdas", type=float, help="measurement sphere radius in wavelengths")
    common.add_argument("--ntheta", type=int, help="polar quadrature order / pattern intervals")
    common.add_argument("--ntime", type=int, help="time samples per period")
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--normalization", choices=("literal", "self-consistent"))
    common.add_argument("--config", metavar="FILE", help="JSON file of option values; flags override it")

    parser = argparse.ArgumentParser(
        prog="wwdipole",
        description="Radiation of an oscillating charge: WW estimate, Hertzian formulas, Lienard-Wiechert simulation.",
    )
    parser.add_argument("--check", metavar="FILE", help="revalidate a JSON comparison report")
    sub = parser.add_subparsers(dest="command")
    help_text = {
        "estimate": "Weizsaecker-Williams estimate only",
        "exact": "analytic Hertzian dipole only",
        "simulate": "Lienard-Wiechert simulation only",
        "compare": "all three paths and their ratios",
        "pattern": "angular distribution table",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=help_text[name])
    return parser


def _load_file(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidArgument(f"cannot read config file {path!r}: {exc}") from None
    if not isinstance(data, dict):
        raise InvalidArgument("config file must hold a JSON object")
    for key in data:
        if key not in CONFIG_KEYS:
            raise InvalidArgument(f"unknown config key {key!r}")
    return data


def parse_config(argv: list[str]) -> RunConfig:
    """Parse and validate arguments into a run configuration.

    Raises InvalidArgument for semantically bad values; argparse itself
    exits with status 2 on malformed flags.
    """
    args = build_parser().parse_args(argv)
    if args.command is None:
        raise InvalidArgument("a subcommand is required")
    given = {k: v for k, v in vars(args).items() if v is not None and k in CONFIG_KEYS}
    values = dict(DEFAULTS)
    if args.config:
        values.update(_load_file(args.config))
    values.update(given)
    if "z0" in given and "beta" in values and "beta" not in given:
        values.pop("beta")
    if "beta" in given and "z0" in values and "z0" not in given:
        values.pop("z0")

    if values["units"] not in ("dimensionless", "gaussian"):
        raise InvalidArgument(f"units must be 'dimensionless' or 'gaussian', got {values['units']!r}")
    if values["format"] not in FORMATS:
        raise InvalidArgument(f"format must be one of {FORMATS}, got {values['format']!r}")
    if values["normalization"] not in ("literal", "paper-literal", "self-consistent"):
        raise InvalidArgument(f"normalization must be 'literal' or 'self-consistent', got {values['normalization']!r}")

    if values["units"] == "gaussian":
        if "alpha" in values:
            raise InvalidArgument("alpha is derived in gaussian units; drop --alpha")
        units = UnitSystem.gaussian()
    else:
        try:
            units = UnitSystem.dimensionless(float(values.get("alpha", DEFAULT_ALPHA)))
        except ValueError as exc:
            raise InvalidArgument(f"alpha: {exc}") from None

    omega = float(values["omega"])
    if not (math.isfinite(omega) and omega > 0):
        raise InvalidArgument(f"omega must be positive, got {omega!r}")
    if "z0" in values and "beta" in values:
        raise InvalidArgument("give either z0 or beta, not both")
    if "z0" in values:
        z0 = float(values["z0"])
        if not (math.isfinite(z0) and z0 > 0):
            raise InvalidArgument(f"z0 must be positive, got {z0!r}")
    elif "beta" in values:
        beta = float(values["beta"])
        if not (math.isfinite(beta) and beta > 0):
            raise InvalidArgument(f"beta must be positive, got {beta!r}")
        z0 = beta * units.c / omega
    else:
        raise InvalidArgument("one of z0 or beta is required")
    if z0 * omega / units.c >= 1.0:
        raise InvalidArgument(f"beta = {z0 * omega / units.c:.6g} must be below 1")

    charge = float(values.get("charge", units.charge_unit))
    if not math.isfinite(charge):
        raise InvalidArgument(f"charge must be finite, got {charge!r}")
    config = DipoleConfig(q=charge, z0=z0, omega=omega)

    radius = float(values["radius_lambdas"])
    if not radius >= 10:
        raise InvalidArgument(f"radius_lambdas must be >= 10, got {radius!r}")
    if radius * config.wavelength(units) <= z0:
        raise InvalidArgument("measurement radius must exceed z0")
    ntheta, ntime = values["ntheta"], values["ntime"]
    if not isinstance(ntheta, int) or isinstance(ntheta, bool):
        raise InvalidArgument(f"ntheta must be an integer, got {ntheta!r}")
    if not isinstance(ntime, int) or isinstance(ntime, bool):
        raise InvalidArgument(f"ntime must be an integer, got {ntime!r}")
    min_theta = 2 if args.command == "pattern" else 8
    if ntheta < min_theta:
        raise InvalidArgument(f"ntheta must be >= {min_theta}, got {ntheta}")
    if ntime < 16:
        raise InvalidArgument(f"ntime must be >= 16, got {ntime}")

    return RunConfig(
        command=args.command,
        config=config,
        units=units,
        params=NumericParams(radius_lambdas=radius, n_theta=ntheta, n_time=ntime),
        format=values["format"],
        normalization=values["normalization"],
    )


def render(run: RunConfig) -> str:
    cfg, units = run.config, run.units
    if run.command == "estimate":
        return format_record(run_estimate(cfg, units, run.normalization), run.format)
    if run.command == "exact":
        return format_record(run_exact(cfg, units, run.normalization), run.format)
    if run.command == "simulate":
        return format_record(run_simulate(cfg, units, run.params), run.format)
    if run.command == "compare":
        return format_record(run_compare(cfg, units, run.params).to_dict(), run.format)
    rows = emit_pattern(cfg, units, run.params.n_theta, run.params.radius_lambdas, run.params.n_time)
    return format_pattern(rows, run.format)


def run_check(path: str) -> int:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"wwdipole: cannot read report {path!r}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    problems = check_report(data) if isinstance(data, dict) else ["report is not a JSON object"]
    for problem in problems:
        print(f"FAIL {problem}")
    if problems:
        return EXIT_CHECK_FAILED
    print("ok")
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    if not argv:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    if argv[0] == "--check":
        if len(argv) != 2:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        return run_check(argv[1])
    try:
        run = parse_config(argv)
        sys.stdout.write(render(run))
    except InvalidArgument as exc:
        print(f"wwdipole: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NoConvergence as exc:
        print(f"wwdipole: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    return 0


if __name__ == "__main__":
    sys.exit(main())
