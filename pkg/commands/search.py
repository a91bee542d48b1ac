"""Команда search: перебор k и отбор сохраняющих решетку преобразований"""
import logging
from argparse import Namespace

from cli.schemas import SearchResults
from commands.base import EXIT_OK, CommandOutcome, UsageError, build_document, parse_range
from lattice import LatticeKind
from report_tools import family_frame, symmetry_report_out
from symmetry import IntegerRange, KForm, MixedQ3, SearchSpec, SqrtThreeMultiples, search

logger = logging.getLogger(__name__)


def k_form_from_args(args: Namespace) -> KForm:
    if args.k_int is not None:
        return IntegerRange(*parse_range(args.k_int))
    if args.k_sqrt3 is not None:
        return SqrtThreeMultiples(*parse_range(args.k_sqrt3))
    parts = args.k_mixed.split(",")
    if len(parts) != 2:
        raise UsageError(f"--k-mixed expects 'A..B,C..D', got {args.k_mixed!r}")
    (amin, amax), (bmin, bmax) = parse_range(parts[0]), parse_range(parts[1])
    return MixedQ3(amin, amax, bmin, bmax)


class SearchCommand:
    """Пустой результат тоже результат: код выхода 0"""

    def __init__(self):
        self.name = "SearchCommand"

    def execute(self, args: Namespace) -> CommandOutcome:
        k_form = k_form_from_args(args)
        try:
            spec = SearchSpec(kind=LatticeKind(args.lattice), k_form=k_form, grid_radius=args.grid_radius)
        except ValueError as e:
            raise UsageError(str(e)) from e

        findings = [symmetry_report_out(r) for r in search(spec, args.workers)]
        results = SearchResults(candidates=len(k_form.candidates()), findings=findings)
        logger.info(f"{self.name}: {len(findings)} findings among {results.candidates} candidates")
        return CommandOutcome(
            exit_code=EXIT_OK,
            document=build_document(args, results),
            table=family_frame(findings),
        )
