"""
ngtlab command line: check suites, builtin listing and pointwise evaluation.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from geometry import levi_civita, nijenhuis_lowered
from manifolds import BUILTINS, builtin
from ngt import ngt_connection, ngt_torsion
from shared.config import NGTLAB_DEFAULT_POINTS, NGTLAB_DEFAULT_SEED
from shared.entry_points import EXIT_CHECKS_FAILED, EXIT_OK, run_with_error_handling
from shared.utils import configure_logging, default_tolerances
from workflows import AUTO, SUITES, CheckSuiteWorkflow

from .report import format_array, format_report
from .spec_file import load_spec

logger = logging.getLogger(__name__)

QUANTITIES = {
    "christoffels": levi_civita,
    "torsion": ngt_torsion,
    "nijenhuis": nijenhuis_lowered,
    "dF": lambda frame: frame.exterior_dF,
    "ngt-connection": ngt_connection,
}


def _resolve(args):
    if args.builtin:
        return builtin(args.builtin)
    return load_spec(args.spec)


def _add_source(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--spec", help="path to a manifold spec file")
    group.add_argument("--builtin", help="name of a builtin manifold (see `list`)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ngtlab", description=__doc__)
    parser.add_argument("--log-level", default=None, help="override NGTLAB_LOG_LEVEL")
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="run a check suite over sampled points")
    _add_source(check)
    check.add_argument("--points", type=int, default=NGTLAB_DEFAULT_POINTS)
    check.add_argument("--seed", type=int, default=NGTLAB_DEFAULT_SEED)
    check.add_argument("--tol", type=float, default=None, help="identity tolerance override")
    check.add_argument("--json", dest="json_path", default=None, help="write the JSON report here")
    check.add_argument("--suite", default=AUTO, choices=[AUTO, *SUITES])

    commands.add_parser("list", help="list builtin manifolds")

    evaluate = commands.add_parser("eval", help="print component arrays at one point")
    _add_source(evaluate)
    evaluate.add_argument("--point", required=True, help="comma-separated coordinates")
    evaluate.add_argument("--quantity", required=True, choices=sorted(QUANTITIES))
    return parser


def check_command(args) -> int:
    manifold = _resolve(args)
    tolerances = default_tolerances(manifold.is_symbolic, args.tol)
    report = CheckSuiteWorkflow().run(
        manifold,
        name=args.builtin or manifold.name,
        suite=args.suite,
        count=args.points,
        seed=args.seed,
        tolerances=tolerances,
    )
    print(format_report(report))
    if args.json_path:
        Path(args.json_path).write_text(report.to_json() + "\n", encoding="utf-8")
        logger.info("[REPORT] JSON written to %s", args.json_path)
    return EXIT_OK if report.passed else EXIT_CHECKS_FAILED


def list_command(args) -> int:
    width = max(len(name) for name in BUILTINS)
    for name in sorted(BUILTINS):
        entry = BUILTINS[name]
        print(f"{name:<{width}}  {entry.kind.value:<21}  {entry.description}")
    return EXIT_OK


def eval_command(args) -> int:
    manifold = _resolve(args)
    try:
        values = [float(v) for v in args.point.split(",")]
    except ValueError:
        raise ValueError(f"--point must be comma-separated numbers, got {args.point!r}")
    p = manifold.chart.point(values)
    frame = manifold.frame(p)
    print(format_array(args.quantity, QUANTITIES[args.quantity](frame)))
    return EXIT_OK


COMMANDS = {"check": check_command, "list": list_command, "eval": eval_command}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    return run_with_error_handling(COMMANDS[args.command], args)


if __name__ == "__main__":
    sys.exit(main())
