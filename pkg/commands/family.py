"""Команда family: таблица семейства tan(theta) = (sqrt(k^2+4) - k)/2"""
import logging
from argparse import Namespace

from cli.schemas import FamilyResults
from commands.base import EXIT_CLAIM_FAILED, EXIT_OK, CommandOutcome, build_document, positive
from report_tools import family_frame, symmetry_report_out
from symmetry import verify_square_family

logger = logging.getLogger(__name__)


class FamilyCommand:
    def __init__(self):
        self.name = "FamilyCommand"

    def execute(self, args: Namespace) -> CommandOutcome:
        k_max = positive("--k-max", args.k_max)
        reports = verify_square_family(k_max, args.workers)
        rows = [symmetry_report_out(r) for r in reports]
        all_verified = all(r.verified for r in reports)
        logger.info(f"{self.name}: {sum(r.verified for r in reports)}/{k_max} rows verified")
        return CommandOutcome(
            exit_code=EXIT_OK if all_verified else EXIT_CLAIM_FAILED,
            document=build_document(args, FamilyResults(rows=rows, all_verified=all_verified)),
            table=family_frame(rows),
        )
