"""Команда check-float: сверка точного пути с формулой в плавающей точке"""
import logging
import math
from argparse import Namespace
from typing import List

import numpy as np
import pandas as pd

from cli.schemas import CheckFloatResults
from commands.base import EXIT_CLAIM_FAILED, EXIT_OK, CommandOutcome, UsageError, build_document, positive, resolve_scaling
from config import settings
from lattice import LatticeKind, LatticePoint, point_float
from transform import apply_exact, apply_float

logger = logging.getLogger(__name__)


def sample_points(kind: LatticeKind, samples: int, seed: int) -> List[LatticePoint]:
    """Origin first, then seeded uniform draws with |m|, |n| <= FLOAT_POINT_BOUND"""
    bound = settings.FLOAT_POINT_BOUND
    rng = np.random.default_rng(seed)
    draws = rng.integers(-bound, bound, size=(samples - 1, 2), endpoint=True)
    return [LatticePoint(0, 0, kind)] + [LatticePoint(int(m), int(n), kind) for m, n in draws]


def scientific(value: float) -> str:
    return np.format_float_scientific(value, precision=settings.DECIMAL_DIGITS - 1, unique=False)


class CheckFloatCommand:
    """Допуск относительный: |dz| / (1 + |z|) <= tol"""

    def __init__(self):
        self.name = "CheckFloatCommand"

    def execute(self, args: Namespace) -> CommandOutcome:
        ds = resolve_scaling(args)
        samples = positive("--samples", args.samples)
        if not args.tol > 0:
            raise UsageError(f"--tol must be positive, got {args.tol}")

        worst = LatticePoint(0, 0, ds.kind)
        max_dev = max_scaled = 0.0
        for p in sample_points(ds.kind, samples, args.seed):
            exact = apply_exact(ds, p).embed()
            xy = point_float(p)
            fx, fy = apply_float(ds, xy)
            dev = math.hypot(fx - exact.real, fy - exact.imag)
            scaled = dev / (1.0 + math.hypot(*xy))
            max_dev = max(max_dev, dev)
            if scaled > max_scaled:
                max_scaled, worst = scaled, p

        passed = max_scaled <= args.tol
        logger.info(f"{self.name}: {samples} samples, max scaled deviation {max_scaled:.3e}")
        results = CheckFloatResults(
            samples=samples,
            tolerance=scientific(args.tol),
            max_deviation=scientific(max_dev),
            max_scaled_deviation=scientific(max_scaled),
            worst_point=[worst.m, worst.n],
            passed=passed,
        )
        table = pd.DataFrame([results.model_dump(exclude={"kind"})])
        return CommandOutcome(
            exit_code=EXIT_OK if passed else EXIT_CLAIM_FAILED,
            document=build_document(args, results),
            table=table,
        )
