# src/runner/cli.py

"""
Command-line front end.

    qhc parse "p -> ?!p"
    qhc check proofs/galois_fwd.qp
    qhc translate --target negneg "!p"
    qhc refute "p -> ?!p" --json
    qhc corpus run --filter "galois.*"

Exit codes: 0 success, 1 logical failure (rejected proof, rejected corpus entry,
refuted formula under --expect-theorem), 2 usage, parse or file error.
"""

import argparse
import logging
import sys
import traceback
from pathlib import Path

from logic.errors import QHCError
from logic.printer import MODES
from runner.runner import EXIT_USAGE, Runner
from translate.translate import TRANSLATIONS
from utils.utils import setup_logging, verbosity_level

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parents[2]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--signature", help="signature file (default: from the config)")
    common.add_argument("--config", help="config file (default: data/config.json)")
    common.add_argument("--theory", action="append", default=[], help="theory file to register; repeatable")
    common.add_argument("--calculus", help="calculus name, e.g. QHC or QHC+KSP")
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--quiet", action="store_true", help="no banners or progress bars")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")

    parser = argparse.ArgumentParser(prog="qhc", description="QHC: a joint logic of problems and propositions")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("parse", parents=[common], help="typecheck and print formulas or sequents")
    p.add_argument("formulas", nargs="+")
    p.add_argument("--mode", choices=MODES, default="keep")

    p = commands.add_parser("check", parents=[common], help="kernel-check a .qp proof script")
    p.add_argument("script")
    p.add_argument("--minimal", action="store_true", help="reject axioms outside the minimal QHC table")

    p = commands.add_parser("translate", parents=[common], help="apply a syntactic translation")
    p.add_argument("formula")
    p.add_argument("--target", required=True, choices=sorted(TRANSLATIONS))
    p.add_argument("--mode", choices=MODES, default="keep")

    p = commands.add_parser("refute", parents=[common], help="search for a certified countermodel")
    p.add_argument("formula")
    p.add_argument("--expect-theorem", action="store_true", help="exit 1 when the formula is refuted")
    p.add_argument("--max-worlds", type=int)

    p = commands.add_parser("corpus", help="the derived-results corpus")
    actions = p.add_subparsers(dest="action", required=True)
    a = actions.add_parser("run", parents=[common], help="build and check entries")
    a.add_argument("--filter", default="*", help="glob over entry ids")
    a.add_argument("--workers", type=int)
    a.add_argument("--csv", help="write the result table to this CSV file")
    a.add_argument("--certify", action="store_true", help="also check both semantic images")
    a = actions.add_parser("list", parents=[common], help="list entries")
    a.add_argument("--filter", default="*")
    a = actions.add_parser("show", parents=[common], help="print one entry and its proof")
    a.add_argument("id")
    a = actions.add_parser("export", parents=[common], help="write one .qp script per entry")
    a.add_argument("directory")
    a.add_argument("--filter", default="*")
    return parser


def _dispatch(runner: Runner, args: argparse.Namespace) -> int:
    if args.command == "parse":
        return runner.parse(args.formulas, args.mode, args.calculus)
    if args.command == "check":
        return runner.check(args.script, args.calculus, args.minimal)
    if args.command == "translate":
        return runner.translate(args.formula, args.target, args.mode)
    if args.command == "refute":
        return runner.refute(args.formula, args.expect_theorem, args.max_worlds)
    if args.action == "run":
        return runner.corpus_run(args.filter, args.workers, args.csv, args.certify)
    if args.action == "list":
        return runner.corpus_list(args.filter)
    if args.action == "show":
        return runner.corpus_show(args.id)
    return runner.corpus_export(args.directory, args.filter)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0
    setup_logging(verbosity_level(args.verbose))
    try:
        runner = Runner(PROJECT_ROOT, args.config, args.signature, args.theory, args.json, args.quiet)
        return _dispatch(runner, args)
    except (QHCError, OSError, ValueError, KeyError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"qhc: error: {message}", file=sys.stderr)
        return EXIT_USAGE
    except Exception:
        traceback.print_exc()
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
