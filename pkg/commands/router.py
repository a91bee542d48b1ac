"""Маршрутизация подкоманд CLI к исполнителям"""
import logging
from argparse import Namespace
from typing import Dict

from commands.base import CommandOutcome, UsageError
from commands.check_float import CheckFloatCommand
from commands.family import FamilyCommand
from commands.points import PointsCommand
from commands.render import RenderCommand
from commands.schema import SchemaCommand
from commands.search import SearchCommand
from commands.verify import VerifyCommand

logger = logging.getLogger(__name__)


def create_command_router() -> Dict[str, object]:
    """Имя подкоманды -> объект с методом execute(args)"""
    return {
        "verify": VerifyCommand(),
        "family": FamilyCommand(),
        "search": SearchCommand(),
        "points": PointsCommand(),
        "render": RenderCommand(),
        "check-float": CheckFloatCommand(),
        "schema": SchemaCommand(),
    }


# Глобальный маршрутизатор
command_router = create_command_router()


def route(args: Namespace) -> CommandOutcome:
    command = command_router.get(args.command)
    if command is None:
        raise UsageError(f"unknown command {args.command!r}")
    logger.info(f"Routing to: {command.name}")
    return command.execute(args)
