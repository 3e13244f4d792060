# cli/main.py
import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from bounds.table import TableMode
from cli.commands import dispatch
from cli.models import Invocation
from cli.utils import parse_int_list, positive_int
from config import UnionFreeConfig
from family_core.errors import UnionFreeError

logger = logging.getLogger(__name__)

EXIT_USAGE = 2


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-o", "--out", dest="output_path", type=Path, default=None,
                        help="write to FILE instead of standard output")


def _add_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--in", dest="input_path", type=Path, required=True, help=".uff family file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unionfree", description="Union-free families toolkit")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    construct = sub.add_parser("construct", help="build a family and print it in .uff form")
    kinds = construct.add_subparsers(dest="action", required=True)
    chain = kinds.add_parser("chain", help="q(n; m1; ...; ml)")
    chain.add_argument("--n", type=positive_int, required=True)
    chain.add_argument("--m", type=parse_int_list, required=True, help="m1,m2,... strictly decreasing")
    canonical = kinds.add_parser("canonical", help="canonical q(n)")
    canonical.add_argument("--n", type=positive_int, required=True)
    cushion = kinds.add_parser("cushion", help="cushioned chain family from a JSON spec")
    cushion.add_argument("--spec", type=Path, required=True)
    compose = kinds.add_parser("compose", help="layered composition from a JSON spec")
    compose.add_argument("--spec", type=Path, required=True)
    compose.add_argument("--drop-empty", action="store_true", help="remove the empty set from the result")
    for kind in (chain, canonical, cushion, compose):
        _add_output(kind)

    verify = sub.add_parser("verify", help="check a property; exit 1 and print a witness on failure")
    verify.add_argument("action", choices=["union-free", "antichain", "maximal", "lym"])
    _add_input(verify)

    bounds = sub.add_parser("bounds", help="bounds on M(n)")
    bound_kinds = bounds.add_subparsers(dest="action", required=True)
    table = bound_kinds.add_parser("table")
    table.add_argument("--n-max", dest="n_max", type=positive_int, required=True)
    table.add_argument("--mode", choices=[m.value for m in TableMode], default=TableMode.REPLICA.value)
    table.add_argument("--format", choices=["csv", "md"], default="csv")
    _add_output(table)
    filibuster = bound_kinds.add_parser("filibuster")
    filibuster.add_argument("--n", type=positive_int, required=True)
    filibuster.add_argument("--minutes", type=float, default=1.0, help="minutes per amendment")

    approx = sub.add_parser("approx", help="closed-form estimates against exact binomials")
    approx_kinds = approx.add_subparsers(dest="action", required=True)
    stirling = approx_kinds.add_parser("stirling")
    stirling.add_argument("--k", type=positive_int, required=True)
    stirling.add_argument("--j", type=int, required=True)
    central = approx_kinds.add_parser("central")
    central.add_argument("--n", type=positive_int, required=True)
    dominance = approx_kinds.add_parser("dominance")
    dominance.add_argument("--n", type=positive_int, required=True)
    split = approx_kinds.add_parser("cushion-split")
    split.add_argument("--n", type=positive_int, required=True)
    split.add_argument("--t", type=int, required=True)
    for kind in (stirling, central, dominance, split):
        kind.add_argument("--format", choices=["text", "csv"], default="text")

    exact = sub.add_parser("exact", help="exact M(n) by branch-and-bound")
    exact.add_argument("--n", type=positive_int, required=True)
    exact.add_argument("--time-limit", dest="time_limit", type=float, default=None, help="seconds")
    exact.add_argument("--symmetry", action="store_true", help="fix the first chosen set up to relabelling")
    exact.add_argument("--threads", type=positive_int, default=None)
    exact.add_argument("--report", type=Path, default=None, help="JSON report path")
    _add_output(exact)

    relabel = sub.add_parser("relabel", help="apply an element permutation")
    _add_input(relabel)
    relabel.add_argument("--perm", type=parse_int_list, required=True, help="p1,p2,... images of 1..n")
    _add_output(relabel)

    return parser


def configure_logging() -> None:
    logging.basicConfig(
        level=UnionFreeConfig.LOG_LEVEL,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def run(argv: Optional[List[str]] = None) -> int:
    """Exit code 0 when the command succeeds or the property holds, 1 when it fails, 2 on errors."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0

    try:
        outcome = dispatch(Invocation.from_namespace(ns))
    except (UnionFreeError, ValueError, OSError) as exc:
        logger.error("%s failed: %s", ns.subcommand, exc)
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE

    if outcome.text:
        sys.stdout.write(outcome.text)
    return outcome.code


def main() -> None:
    UnionFreeConfig.from_env()
    configure_logging()
    sys.exit(run())


if __name__ == "__main__":
    main()
