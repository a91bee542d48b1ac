"""Команда verify: доказательство для одного преобразования"""
import logging
from argparse import Namespace

from cli.schemas import VerifyResults
from commands.base import EXIT_CLAIM_FAILED, EXIT_OK, CommandOutcome, build_document, positive, resolve_scaling
from report_tools import family_frame, symmetry_report_out
from symmetry import image_ideal_check, induced_map, verify_with_grid

logger = logging.getLogger(__name__)


class VerifyCommand:
    """Индуцированная матрица, скаляр и проверка на сетке совпадений"""

    def __init__(self):
        self.name = "VerifyCommand"

    def execute(self, args: Namespace) -> CommandOutcome:
        ds = resolve_scaling(args)
        radius = positive("--grid-radius", args.grid_radius)
        logger.info(f"{self.name}: {ds.family_tag.label}, grid radius {radius}")

        report = verify_with_grid(ds, radius, args.workers)
        ideal = None
        if report.verified:
            # образ до вынесения gcd: главный подидеал индекса raw_det
            ideal = image_ideal_check(induced_map(ds, primitive=False), ds.kind)
        claim_holds = report.verified and report.grid is not None and report.grid.passed

        out = symmetry_report_out(report, ideal)
        document = build_document(args, VerifyResults(report=out, claim_holds=claim_holds))
        frame = family_frame([out])
        frame["verified"] = claim_holds
        if not claim_holds:
            logger.error(f"{self.name}: claim does not hold for {ds.family_tag.label}: {report.notes}")
        return CommandOutcome(
            exit_code=EXIT_OK if claim_holds else EXIT_CLAIM_FAILED,
            document=document,
            table=frame,
        )
