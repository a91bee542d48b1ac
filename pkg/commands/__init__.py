"""Подкоманды CLI"""
from commands.base import CommandOutcome, UsageError
from commands.router import command_router, route

__all__ = ["CommandOutcome", "UsageError", "command_router", "route"]
