"""Общие типы команд: результат выполнения, ошибки аргументов, разбор k"""
import logging
from argparse import Namespace
from dataclasses import dataclass
from typing import Optional, Tuple

import pandas as pd

from cli.schemas import ReportDocument, Results
from config import settings
from lattice import LatticeKind
from transform import DirectionalScaling, square_family, triangular_known

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

# Операционные параметры: на вывод не влияют и в отчет не попадают
NOT_ECHOED = ("command", "output", "format", "workers")


class UsageError(ValueError):
    """Arguments parsed but do not make sense together"""


@dataclass
class CommandOutcome:
    """document for JSON, table for --format table, text for raw payloads (CSV, SVG)"""
    exit_code: int
    document: Optional[ReportDocument] = None
    table: Optional[pd.DataFrame] = None
    text: Optional[str] = None


def resolve_scaling(args: Namespace) -> DirectionalScaling:
    """Square lattice needs --k >= 1; the triangular transform takes no k."""
    kind = LatticeKind(args.lattice)
    k = getattr(args, "k", None)
    if kind is LatticeKind.SQUARE:
        if k is None:
            raise UsageError("--k is required for the square lattice")
        if k < 1:
            raise UsageError(f"k must be a positive integer, got {k}")
        return square_family(k)
    if k is not None:
        raise UsageError("--k applies to the square lattice only")
    return triangular_known()


def positive(name: str, value: int) -> int:
    if value < 1:
        raise UsageError(f"{name} must be >= 1, got {value}")
    return value


def parse_range(text: str) -> Tuple[int, int]:
    """'A..B' -> (A, B) with A <= B"""
    try:
        low, high = (int(part) for part in text.split(".."))
    except ValueError:
        raise UsageError(f"expected a range like 1..20, got {text!r}") from None
    if low > high:
        raise UsageError(f"empty range {text!r}")
    return low, high


def build_document(args: Namespace, results: Results) -> ReportDocument:
    inputs = {key: value for key, value in sorted(vars(args).items()) if key not in NOT_ECHOED}
    return ReportDocument(
        schema_version=settings.SCHEMA_VERSION,
        command=args.command,
        inputs=inputs,
        results=results,
    )
