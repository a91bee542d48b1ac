"""Проверка доказательств: семейство k, треугольный случай, сетки совпадений"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, TypeVar

from config import settings
from lattice import (
    LatticePoint,
    mat_apply,
    mat_det,
    mat_is_positive_definite,
    point_to_elem,
)
from symmetry.induced import InducedMap, NotLatticePreserving, induced_map
from transform import DirectionalScaling, apply_exact, square_family, triangular_known

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class GridReport:
    radius: int
    checked: int
    failures: int
    injective: bool
    first_failure: Optional[LatticePoint] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.injective


@dataclass(frozen=True)
class SymmetryReport:
    """Итог проверки одного преобразования"""
    transform: DirectionalScaling
    induced: Optional[InducedMap]
    det: int
    raw_det: int
    sublattice_index: int
    verified: bool
    notes: str = ""
    grid: Optional[GridReport] = None

    @property
    def orientation_preserving(self) -> bool:
        return self.det > 0

    @property
    def positive_definite(self) -> bool:
        return self.induced is not None and mat_is_positive_definite(self.induced.matrix)


def parallel_map(func: Callable[[T], R], items: Sequence[T], workers: Optional[int] = None) -> List[R]:
    """Order-preserving map, in worker processes when workers > 1"""
    workers = workers or settings.WORKERS
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def verify_scaling(ds: DirectionalScaling) -> SymmetryReport:
    try:
        im = induced_map(ds)
    except NotLatticePreserving as e:
        logger.debug(f"{ds.family_tag.label}: {e}")
        return SymmetryReport(
            transform=ds, induced=None, det=0, raw_det=0, sublattice_index=0, verified=False, notes=str(e)
        )
    det = mat_det(im.matrix)
    return SymmetryReport(
        transform=ds,
        induced=im,
        det=det,
        raw_det=mat_det(im.raw_matrix),
        sublattice_index=abs(det),
        verified=True,
    )


def _verify_family_member(k: int) -> SymmetryReport:
    report = verify_scaling(square_family(k))
    if report.verified and report.raw_det != k * k + 4:
        logger.error(f"k={k}: determinant {report.raw_det} differs from k^2+4 = {k * k + 4}")
    return report


def verify_square_family(k_max: int, workers: Optional[int] = None) -> List[SymmetryReport]:
    """One report per k in 1..k_max"""
    if k_max < 1:
        raise ValueError(f"k_max must be positive, got {k_max}")
    logger.info(f"Verifying square family for k=1..{k_max}")
    reports = parallel_map(_verify_family_member, list(range(1, k_max + 1)), workers)
    failed = [r.transform.family_tag.label for r in reports if not r.verified]
    if failed:
        logger.error(f"Family members not lattice preserving: {failed}")
    return reports


def verify_triangular() -> SymmetryReport:
    return verify_scaling(triangular_known())


def _check_rows(task: Tuple[DirectionalScaling, InducedMap, Tuple[int, ...], int]):
    ds, im, rows, radius = task
    ring = ds.ring
    checked = failures = 0
    first_failure = None
    images = []
    for m in rows:
        for n in range(-radius, radius + 1):
            p = LatticePoint(m, n, ds.kind)
            image = apply_exact(ds, p)
            expected = im.scalar * point_to_elem(mat_apply(im.matrix, p), ring)
            checked += 1
            if image != expected:
                failures += 1
                if first_failure is None:
                    first_failure = p
            images.append(image.coeffs)
    return checked, failures, first_failure, images


def _chunks(values: List[int], parts: int) -> List[Tuple[int, ...]]:
    size = max(1, -(-len(values) // parts))
    return [tuple(values[i:i + size]) for i in range(0, len(values), size)]


def grid_coincidence_check(
    ds: DirectionalScaling,
    radius: int,
    im: Optional[InducedMap] = None,
    workers: Optional[int] = None,
) -> GridReport:
    """T(p) == scalar * (M p) exactly for every |m|, |n| <= radius, and no two
    grid points share an image."""
    if radius < 1:
        raise ValueError(f"radius must be positive, got {radius}")
    im = im or induced_map(ds)
    workers = workers or settings.WORKERS
    rows = list(range(-radius, radius + 1))
    tasks = [(ds, im, chunk, radius) for chunk in _chunks(rows, workers)]
    logger.info(f"{ds.family_tag.label}: checking {len(rows) ** 2} grid points in {len(tasks)} chunk(s)")

    checked = failures = 0
    first_failure = None
    seen = set()
    duplicates = 0
    for part_checked, part_failures, part_first, images in parallel_map(_check_rows, tasks, workers):
        checked += part_checked
        failures += part_failures
        first_failure = first_failure or part_first
        for key in images:
            if key in seen:
                duplicates += 1
            seen.add(key)

    if failures:
        logger.error(f"{ds.family_tag.label}: {failures} coincidence failures, first at {first_failure}")
    return GridReport(
        radius=radius,
        checked=checked,
        failures=failures,
        injective=duplicates == 0,
        first_failure=first_failure,
    )


def verify_with_grid(ds: DirectionalScaling, radius: int, workers: Optional[int] = None) -> SymmetryReport:
    """verify_scaling plus the coincidence sweep for verified transforms"""
    report = verify_scaling(ds)
    if not report.verified:
        return report
    grid = grid_coincidence_check(ds, radius, report.induced, workers)
    return replace(report, grid=grid)


def sorted_reports(reports: Iterable[SymmetryReport]) -> List[SymmetryReport]:
    def key(report: SymmetryReport):
        tag = report.transform.family_tag
        return (getattr(tag, "a", 0), getattr(tag, "b", 0))

    return sorted(reports, key=key)
