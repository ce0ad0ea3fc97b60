import argparse
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..errors import ConfigError
from .objects import COMMANDS, FORMATS, RunConfig

PSI_CHECKS = ("collinearity", "cubic", "closed_form", "alt", "cusp")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
VALUE_FLAGS = ("--range", "--n-range", "--s", "--t", "--tau")


class NoExitParser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def parse_range(argument: str) -> Tuple[int, int]:
    """``A..B`` as an inclusive pair of integers."""
    low, sep, high = argument.partition("..")
    if not sep:
        raise ConfigError(f"Expected a range of the form A..B, got {argument!r}.")
    try:
        low, high = int(low), int(high)
    except ValueError as error:
        raise ConfigError(f"Range bounds must be integers, got {argument!r}.") from error
    if low > high:
        raise ConfigError(f"The range {argument!r} is empty.")
    return low, high


def parse_fraction(argument: str) -> Fraction:
    try:
        return Fraction(argument)
    except (ValueError, ZeroDivisionError) as error:
        raise ConfigError(f"{argument!r} is not an exact rational number.") from error


def parse_tau(argument: str) -> complex:
    try:
        value = complex(argument.replace(" ", ""))
    except ValueError as error:
        raise ConfigError(f"{argument!r} is not a complex number.") from error
    if value.imag <= 0:
        raise ConfigError("tau must lie in the upper half plane.")
    return value


def _join_values(argv: Optional[Sequence[str]]) -> List[str]:
    # "--range -4..8" would read -4..8 as an option
    out: List[str] = []
    args = list(sys.argv[1:] if argv is None else argv)
    i = 0
    while i < len(args):
        if args[i] in VALUE_FLAGS and i + 1 < len(args):
            out.append(f"{args[i]}={args[i + 1]}")
            i += 2
        else:
            out.append(args[i])
            i += 1
    return out


def _split_checks(argument: str) -> List[str]:
    return [c.strip() for c in argument.split(",") if c.strip()]


def build_parser() -> NoExitParser:
    shared = NoExitParser(add_help=False)
    shared.add_argument("--qprec", dest="qprec", type=int, default=None)
    shared.add_argument("--zprec", dest="zprec", type=int, default=6)
    shared.add_argument("--format", dest="format", default="json")
    shared.add_argument("--output", "--o", dest="output", default=None)
    shared.add_argument("--threads", dest="threads", type=int, default=1)
    shared.add_argument("--log-level", dest="log_level", default="WARNING")
    shared.add_argument("--max-level", dest="max_level", type=int, default=30)

    parser = NoExitParser(prog="modmat", description="Exact realizations of T_n.")
    commands = parser.add_subparsers(dest="command")

    # Level suites
    verify = commands.add_parser("verify", parents=[shared])
    levels = verify.add_mutually_exclusive_group()
    levels.add_argument("--n", dest="n", type=int, default=None)
    levels.add_argument("--n-range", dest="n_range", default=None)
    verify.add_argument("--checks", dest="checks", default="all")

    psi = commands.add_parser("psi", parents=[shared])
    psi.add_argument("--n", dest="n", type=int, required=True)
    psi.add_argument("--checks", dest="checks", default="all")
    psi.add_argument("--matrix", dest="matrix", action="store_true")

    qseries = commands.add_parser("qseries", parents=[shared])
    qseries.add_argument("--n", dest="n", type=int, required=True)
    qseries.add_argument("--a", dest="a", type=int, default=1)

    cusp = commands.add_parser("cusp", parents=[shared])
    cusp.add_argument("--n", dest="n", type=int, required=True)
    cusp.add_argument("--a", "--d", dest="a", type=int, default=1)
    cusp.add_argument(
        "--kind",
        dest="kind",
        default="torsion",
        choices=("torsion", "limit", "boroczky", "ceva", "fourm"),
    )
    cusp.add_argument("--c", dest="c", type=int, default=0)

    # Configurations over Q
    chain = commands.add_parser("chain", parents=[shared])
    chain.add_argument("--s", dest="s", required=True)
    chain.add_argument("--t", dest="t", required=True)
    chain.add_argument("--range", dest="window", default="-4..5")

    matroid = commands.add_parser("matroid", parents=[shared])
    family = matroid.add_mutually_exclusive_group(required=True)
    family.add_argument("--n", dest="n", type=int, default=None)
    family.add_argument("--special", dest="special", default=None)
    matroid.add_argument("--t", dest="t", default="0")

    oracle = commands.add_parser("numeric-oracle", parents=[shared])
    oracle.add_argument("--n", dest="n", type=int, required=True)
    oracle.add_argument("--tau", dest="tau", default="1.1j")
    oracle.add_argument("--tolerance", dest="tolerance", type=float, default=1e-9)
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """Turn a command line into a validated RunConfig, raising ConfigError on any problem."""
    parser = build_parser()
    try:
        vals = vars(parser.parse_args(_join_values(argv)))
    except ConfigError as error:
        raise ConfigError(f"Could not parse the command line: {error.message}") from error

    command = vals.pop("command")
    if command not in COMMANDS:
        raise ConfigError(f"Choose a subcommand: {', '.join(COMMANDS)}.")

    if vals["format"] not in FORMATS:
        raise ConfigError(f"--format must be one of {', '.join(FORMATS)}.")
    level = vals.pop("log_level").upper()
    if level not in LOG_LEVELS:
        raise ConfigError(f"--log-level must be one of {', '.join(LOG_LEVELS)}.")

    levels: List[int] = []
    n_range = vals.pop("n_range", None)
    if n_range is not None:
        low, high = parse_range(n_range)
        levels = list(range(low, high + 1))
    elif vals.get("n") is not None:
        levels = [vals["n"]]
    elif command == "verify":
        raise ConfigError("verify needs --n or --n-range.")
    vals.pop("n", None)

    if "checks" in vals:
        vals["checks"] = _split_checks(vals["checks"])
    if command == "psi":
        unknown = set(vals["checks"]) - set(PSI_CHECKS) - {"all"}
        if unknown:
            raise ConfigError(f"Unknown ψ checks: {', '.join(sorted(unknown))}.")
    if command == "chain":
        vals["s"] = parse_fraction(vals["s"])
        vals["t"] = parse_fraction(vals["t"])
        vals["window"] = parse_range(vals["window"])
    if command == "matroid":
        vals["t"] = parse_fraction(vals["t"])
    if command == "numeric-oracle":
        vals["tau"] = parse_tau(vals["tau"])

    return RunConfig(
        command,
        levels=levels,
        qprec=vals.pop("qprec"),
        zprec=vals.pop("zprec"),
        output=vals.pop("output"),
        fmt=vals.pop("format"),
        threads=vals.pop("threads"),
        max_level=vals.pop("max_level"),
        log_level=level,
        **vals,
    )
