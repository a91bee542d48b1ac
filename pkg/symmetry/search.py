"""Поиск новых направленных масштабирований по значениям k"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from lattice import LatticeKind
from symmetry.verify import SymmetryReport, parallel_map, sorted_reports, verify_with_grid
from transform import scaling_from_k

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntegerRange:
    """k = kmin..kmax"""
    kmin: int
    kmax: int

    def candidates(self) -> List[Tuple[int, int]]:
        return [(k, 0) for k in range(self.kmin, self.kmax + 1)]


@dataclass(frozen=True)
class SqrtThreeMultiples:
    """k = b*sqrt(3), b = bmin..bmax"""
    bmin: int
    bmax: int

    def candidates(self) -> List[Tuple[int, int]]:
        return [(0, b) for b in range(self.bmin, self.bmax + 1)]


@dataclass(frozen=True)
class MixedQ3:
    """k = a + b*sqrt(3) over a rectangle of (a, b)"""
    amin: int
    amax: int
    bmin: int
    bmax: int

    def candidates(self) -> List[Tuple[int, int]]:
        return [(a, b) for a in range(self.amin, self.amax + 1) for b in range(self.bmin, self.bmax + 1)]


KForm = Union[IntegerRange, SqrtThreeMultiples, MixedQ3]


@dataclass(frozen=True)
class SearchSpec:
    kind: LatticeKind
    k_form: KForm
    grid_radius: int

    def __post_init__(self):
        candidates = self.k_form.candidates()
        if not candidates:
            raise ValueError(f"empty candidate range: {self.k_form}")
        if self.grid_radius < 1:
            raise ValueError(f"grid_radius must be positive, got {self.grid_radius}")
        bad = [(a, b) for a, b in candidates if a + b * math.sqrt(3) <= 0]
        if bad:
            raise ValueError(f"non-positive k among candidates: {bad[:5]}")


def _probe(task: Tuple[LatticeKind, int, int, int]) -> Optional[SymmetryReport]:
    kind, a, b, radius = task
    report = verify_with_grid(scaling_from_k(kind, a, b), radius, workers=1)
    if not report.verified:
        return None
    if not report.grid.passed:
        logger.warning(f"{report.transform.family_tag.label}: identity held on the basis but grid check failed")
        return None
    return report


def search(spec: SearchSpec, workers: Optional[int] = None) -> List[SymmetryReport]:
    """Verified reports only, ascending by (a, b)"""
    tasks = [(spec.kind, a, b, spec.grid_radius) for a, b in sorted(spec.k_form.candidates())]
    logger.info(f"Searching {len(tasks)} candidates on the {spec.kind.value} lattice")
    found = [r for r in parallel_map(_probe, tasks, workers) if r is not None]
    logger.info(f"Search found {len(found)} directional scaling symmetries")
    return sorted_reports(found)
