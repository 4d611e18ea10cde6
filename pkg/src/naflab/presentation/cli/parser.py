"""CLI parser composition."""

from __future__ import annotations

import argparse

from naflab.config import OutputFormat
from naflab.optimality.subadditivity import Engine
from naflab.presentation.cli import commands


def _common_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--config", default=None, help="Path to config TOML")
    parent.add_argument(
        "--log-level",
        default=None,
        help="Log level for stderr (default: runtime.log_level from config)",
    )
    parent.add_argument(
        "--format",
        choices=[fmt.value for fmt in OutputFormat],
        default=None,
        help="Result format (default: output.format from config)",
    )
    parent.add_argument("--out", default=None, help="Write the result to this file")
    return parent


def _system_parent(*, width: bool) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("number system")
    group.add_argument("-p", type=int, default=None, help="Trace p of tau^2 - p*tau + q")
    group.add_argument("-q", type=int, default=None, help="Norm q of tau")
    group.add_argument("--base", type=int, default=None, help="Integer base b with |b| >= 2")
    if width:
        group.add_argument("-w", type=int, default=None, help="Window width w")
        group.add_argument(
            "--digit-cap",
            type=int,
            default=None,
            help="Refuse digit sets larger than this (default: digits.cap from config)",
        )
    return parent


def build_parser() -> argparse.ArgumentParser:
    """Build and return the command parser."""
    parser = argparse.ArgumentParser(
        prog="naflab",
        description="Exact w-NAF optimality checks for imaginary quadratic and integer bases",
    )
    parser.add_argument(
        "-v",
        "--version",
        action="version",
        version=f"%(prog)s {commands._resolve_app_version()}",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_parent()
    plane = _system_parent(width=False)
    system = _system_parent(width=True)

    cell_parser = subparsers.add_parser(
        "cell",
        parents=[common, plane],
        help="Show the Voronoi cell of 0 and optionally classify a point",
    )
    cell_parser.add_argument("--z", default=None, help="Lattice point 'a,b' to classify")
    cell_parser.add_argument(
        "-k", type=int, default=0, help="Classify tau^-k * z against the cell (default: 0)"
    )
    cell_parser.set_defaults(func=commands.cmd_cell)

    digits_parser = subparsers.add_parser(
        "digits", parents=[common, system], help="List the digit set for width w"
    )
    digits_parser.set_defaults(func=commands.cmd_digits)

    wnaf_parser = subparsers.add_parser(
        "wnaf", parents=[common, system], help="Compute or verify a w-NAF expansion"
    )
    wnaf_parser.add_argument("--z", default=None, help="Element to expand ('a,b' or integer)")
    wnaf_parser.add_argument(
        "--verify",
        action="store_true",
        help="Check a JSON expansion from --expansion (or stdin) instead of expanding",
    )
    wnaf_parser.add_argument("--expansion", default=None, help="JSON expansion for --verify")
    wnaf_parser.set_defaults(func=commands.cmd_wnaf)

    for name, weak, help_text in (
        ("decide", False, "Decide w-NAF optimality (w-subadditivity)"),
        ("decide-weak", True, "Decide weak w-subadditivity (shifts 0..w-2)"),
    ):
        decide_parser = subparsers.add_parser(name, parents=[common, system], help=help_text)
        decide_parser.add_argument(
            "--engine",
            choices=[engine.value for engine in Engine],
            default=Engine.BATCH.value,
            help="Search engine (default: batch)",
        )
        decide_parser.set_defaults(func=commands.cmd_decide, weak=weak)

    bound_parser = subparsers.add_parser(
        "bound", parents=[common, system], help="Report the exact sufficient conditions"
    )
    bound_parser.set_defaults(func=commands.cmd_bound)

    counterexample_parser = subparsers.add_parser(
        "counterexample",
        parents=[common, system],
        help="Build and verify a non-optimality certificate (p=+-2,q=2 or p=0)",
    )
    counterexample_parser.add_argument(
        "--conjugate",
        action="store_true",
        help="Read the p=0 certificate against tau = -i*sqrt(q)",
    )
    counterexample_parser.set_defaults(func=commands.cmd_counterexample)

    oracle_parser = subparsers.add_parser(
        "oracle", parents=[common, system], help="Minimal weight of any multi-expansion"
    )
    oracle_parser.add_argument("--z", default=None, help="Target element")
    oracle_parser.add_argument(
        "--max-weight",
        type=int,
        default=None,
        help="Largest weight searched, at most 4 (default: oracle.max_weight from config)",
    )
    oracle_parser.add_argument(
        "--max-exp",
        type=int,
        default=None,
        help="Largest exponent used (default: w-NAF length + 2w + oracle.extra_exponents)",
    )
    oracle_parser.set_defaults(func=commands.cmd_oracle)

    map_parser = subparsers.add_parser(
        "map", parents=[common], help="Optimality map over a (p, q, w) grid"
    )
    map_parser.add_argument("--p-max", type=int, default=None, help="Use -p_max <= p <= p_max")
    map_parser.add_argument("--q-max", type=int, default=None, help="Use 2 <= q <= q_max")
    map_parser.add_argument("--w-min", type=int, default=None, help="Smallest width")
    map_parser.add_argument("--w-max", type=int, default=None, help="Largest width")
    map_parser.add_argument(
        "--digit-cap", type=int, default=None, help="Skip cells with larger digit sets"
    )
    map_parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Worker processes, 0 = one per CPU (capped by NAFLAB_THREADS)",
    )
    map_parser.add_argument(
        "--weak", action="store_true", help="Decide weak subadditivity instead"
    )
    map_parser.set_defaults(func=commands.cmd_map)

    roundtrip_parser = subparsers.add_parser(
        "roundtrip",
        parents=[common, system],
        help="Random value/expand and uniqueness round-trips",
    )
    roundtrip_parser.add_argument("--samples", type=int, default=1000, help="Samples per check")
    roundtrip_parser.add_argument("--seed", type=int, default=0, help="Seed for numpy's RNG")
    roundtrip_parser.set_defaults(func=commands.cmd_roundtrip)

    init_parser = subparsers.add_parser("init", help="Write a config file with every default")
    init_parser.add_argument("--config", default=None, help="Path to config TOML")
    init_parser.add_argument(
        "--force", action="store_true", help="Overwrite an existing config file"
    )
    init_parser.set_defaults(func=commands.cmd_init)

    return parser
