"""Команда points: CSV с исходными точками, их образами и целыми координатами образов"""
import logging
from argparse import Namespace

from commands.base import EXIT_OK, CommandOutcome, positive, resolve_scaling
from report_tools import frame_to_csv, points_frame
from symmetry import induced_map

logger = logging.getLogger(__name__)


class PointsCommand:
    def __init__(self):
        self.name = "PointsCommand"

    def execute(self, args: Namespace) -> CommandOutcome:
        ds = resolve_scaling(args)
        radius = positive("--radius", args.radius)
        frame = points_frame(ds, induced_map(ds), radius)
        logger.info(f"{self.name}: {len(frame)} rows for {ds.family_tag.label}")
        return CommandOutcome(exit_code=EXIT_OK, table=frame, text=frame_to_csv(frame))
