"""Точка входа CLI: python -m cli.main <command> ..."""
import argparse
import logging
import sys
from typing import List, Optional

from commands import CommandOutcome, UsageError, route
from commands.base import EXIT_IO, EXIT_OK, EXIT_USAGE
from config import settings

logger = logging.getLogger(__name__)


def _global_options(parser: argparse.ArgumentParser, default) -> None:
    parser.add_argument("--format", choices=["json", "table"], default=default("json"))
    parser.add_argument("--output", metavar="PATH", default=default(None))


def _lattice_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("lattice", choices=["square", "triangular"])
    parser.add_argument("--k", type=int, default=None, help="family parameter, square lattice only")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scalesym",
        description="Directional scaling symmetries of square and triangular lattices",
    )
    _global_options(parser, lambda value: value)
    # те же флаги после имени подкоманды; SUPPRESS не затирает значения главного парсера
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, lambda value: argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="prove one transform preserves its lattice")
    _lattice_options(verify)
    verify.add_argument("--grid-radius", type=int, default=settings.DEFAULT_GRID_RADIUS)
    verify.add_argument("--workers", type=int, default=None)

    family = sub.add_parser("family", parents=[common], help="tabulate the square-lattice k-family")
    family.add_argument("--k-max", type=int, required=True)
    family.add_argument("--workers", type=int, default=None)

    search = sub.add_parser("search", parents=[common], help="search k values for new symmetries")
    search.add_argument("--lattice", choices=["square", "triangular"], required=True)
    k_form = search.add_mutually_exclusive_group(required=True)
    k_form.add_argument("--k-int", metavar="A..B")
    k_form.add_argument("--k-sqrt3", metavar="A..B")
    k_form.add_argument("--k-mixed", metavar="A..B,C..D")
    search.add_argument("--grid-radius", type=int, default=settings.DEFAULT_SEARCH_GRID_RADIUS)
    search.add_argument("--workers", type=int, default=None)

    points = sub.add_parser("points", parents=[common], help="CSV dump of grid points and images")
    _lattice_options(points)
    points.add_argument("--radius", type=int, default=3)

    render = sub.add_parser("render", parents=[common], help="SVG of the lattice and its image")
    _lattice_options(render)
    render.add_argument("--radius", type=int, default=5)

    check = sub.add_parser("check-float", parents=[common], help="compare exact and floating-point transforms")
    _lattice_options(check)
    check.add_argument("--samples", type=int, default=10000)
    check.add_argument("--tol", type=float, default=1e-9)
    check.add_argument("--seed", type=int, default=0)

    sub.add_parser("schema", parents=[common], help="print the JSON schema of reports")
    return parser


def render_outcome(outcome: CommandOutcome, fmt: str) -> str:
    if outcome.text is not None:
        return outcome.text
    if fmt == "table" and outcome.table is not None:
        return outcome.table.to_string(index=False) + "\n"
    return outcome.document.model_dump_json(indent=2) + "\n"


def write_output(payload: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(payload)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(payload)
    logger.info(f"Wrote {len(payload)} characters to {path}")


def main(argv: Optional[List[str]] = None) -> int:
    """0 ok, 1 claim failed, 2 usage error, 3 I/O error"""
    logging.basicConfig(
        level=settings.LOG_LEVEL,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        outcome = route(args)
    except UsageError as e:
        logger.error(f"Invalid arguments: {e}")
        parser.print_usage(sys.stderr)
        print(f"scalesym: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception:
        logger.error(f"Command {args.command} failed", exc_info=True)
        raise

    try:
        write_output(render_outcome(outcome, args.format), args.output)
    except OSError as e:
        logger.error(f"Cannot write {args.output}: {e}")
        return EXIT_IO
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
