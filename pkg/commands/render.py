"""Команда render: SVG-рисунок решетки и образа"""
import logging
from argparse import Namespace

from commands.base import EXIT_OK, CommandOutcome, positive, resolve_scaling
from symmetry import induced_map
from ui.svg_figure import render_svg

logger = logging.getLogger(__name__)


class RenderCommand:
    def __init__(self):
        self.name = "RenderCommand"

    def execute(self, args: Namespace) -> CommandOutcome:
        ds = resolve_scaling(args)
        radius = positive("--radius", args.radius)
        svg = render_svg(ds, induced_map(ds), radius)
        return CommandOutcome(exit_code=EXIT_OK, text=svg)
