"""Инструменты для команд - сериализация отчетов, таблицы, CSV"""
import logging
from typing import List, Optional

import numpy as np
import pandas as pd

from cli.schemas import ExactValue, GridOut, IdealOut, SymmetryReportOut
from config import settings
from exact import TowerElement, to_radical
from lattice import IntMatrix2, grid_points, mat_apply, point_float
from symmetry import IdealReport, InducedMap, SymmetryReport
from transform import DirectionalScaling, apply_exact, theta_degrees

logger = logging.getLogger(__name__)

FAMILY_COLUMNS = [
    "family", "tan_theta", "tan_theta_decimal", "theta_deg", "S_r", "S_r_decimal",
    "matrix", "scalar", "scalar_decimal", "raw_det", "det", "index",
]


def decimal_str(value: float, digits: int = settings.DECIMAL_DIGITS) -> str:
    """Fixed significant digits, trailing zeros kept, '.' as decimal point"""
    value = value + 0.0
    exponent = int(np.floor(np.log10(abs(value)))) if value else 0
    return np.format_float_positional(
        value, precision=max(digits - 1 - exponent, 0), unique=False, fractional=True, trim="k"
    )


def exact_value(elem: TowerElement) -> ExactValue:
    return ExactValue(radical=to_radical(elem), decimal=decimal_str(elem.embed().real))


def matrix_rows(M: IntMatrix2) -> List[List[int]]:
    return [[M.a, M.b], [M.c, M.d]]


def symmetry_report_out(report: SymmetryReport, ideal: Optional[IdealReport] = None) -> SymmetryReportOut:
    ds = report.transform
    out = SymmetryReportOut(
        lattice=ds.kind.value,
        family=ds.family_tag.label,
        tan_theta=exact_value(ds.tan_theta),
        theta_degrees=decimal_str(theta_degrees(ds)),
        scale=exact_value(ds.scale),
        verified=report.verified,
        notes=report.notes,
    )
    if report.induced is None:
        return out

    im = report.induced
    out.scalar = exact_value(im.scalar)
    out.matrix = matrix_rows(im.matrix)
    out.raw_matrix = matrix_rows(im.raw_matrix)
    out.content = im.content
    out.det = report.det
    out.raw_det = report.raw_det
    out.sublattice_index = report.sublattice_index
    out.orientation_preserving = report.orientation_preserving
    out.positive_definite = report.positive_definite
    if report.grid is not None:
        out.grid = GridOut(
            radius=report.grid.radius,
            checked=report.grid.checked,
            failures=report.grid.failures,
            injective=report.grid.injective,
        )
    if ideal is not None:
        out.ideal = IdealOut(
            is_principal=ideal.is_principal,
            generator=None if ideal.generator is None else [ideal.generator.m, ideal.generator.n],
            index=ideal.index,
        )
    return out


def family_frame(rows: List[SymmetryReportOut]) -> pd.DataFrame:
    """Таблица семейства: одна строка на k"""
    records = []
    for r in rows:
        records.append({
            "family": r.family,
            "tan_theta": r.tan_theta.radical,
            "tan_theta_decimal": r.tan_theta.decimal,
            "theta_deg": r.theta_degrees,
            "S_r": r.scale.radical,
            "S_r_decimal": r.scale.decimal,
            "matrix": "-" if r.matrix is None else str(r.matrix).replace(" ", ""),
            "scalar": "-" if r.scalar is None else r.scalar.radical,
            "scalar_decimal": "-" if r.scalar is None else r.scalar.decimal,
            "raw_det": r.raw_det,
            "det": r.det,
            "index": r.sublattice_index,
        })
    return pd.DataFrame.from_records(records, columns=FAMILY_COLUMNS)


def points_frame(ds: DirectionalScaling, im: InducedMap, radius: int) -> pd.DataFrame:
    """m, n, x, y, x', y', M_m, M_n for every grid point"""
    records = []
    for p in grid_points(ds.kind, radius):
        x, y = point_float(p)
        image = apply_exact(ds, p).embed()
        q = mat_apply(im.matrix, p)
        records.append({
            "m": p.m,
            "n": p.n,
            "x": x + 0.0,
            "y": y + 0.0,
            "x'": image.real + 0.0,
            "y'": image.imag + 0.0,
            "M_m": q.m,
            "M_n": q.n,
        })
    return pd.DataFrame.from_records(records, columns=["m", "n", "x", "y", "x'", "y'", "M_m", "M_n"])


def frame_to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator="\n", float_format=f"%.{settings.DECIMAL_DIGITS}g")
