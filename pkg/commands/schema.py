"""Команда schema: JSON-схема отчета"""
import json
from argparse import Namespace

from cli.schemas import ReportDocument
from commands.base import EXIT_OK, CommandOutcome


class SchemaCommand:
    def __init__(self):
        self.name = "SchemaCommand"

    def execute(self, args: Namespace) -> CommandOutcome:
        schema = ReportDocument.model_json_schema()
        return CommandOutcome(exit_code=EXIT_OK, text=json.dumps(schema, indent=2, sort_keys=True) + "\n")
