"""Индуцированное отображение: преобразование = скаляр * целочисленная матрица"""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from gmpy2 import mpq

from exact import TowerElement, elem_inv
from lattice import (
    IntMatrix2,
    LatticeKind,
    LatticePoint,
    mat_det,
    mat_primitive,
    point_to_elem,
    standard_ring,
)
from transform import DirectionalScaling, apply_exact

logger = logging.getLogger(__name__)


class NotLatticePreserving(Exception):
    """The image of a basis point is not scalar * (lattice point)"""

    def __init__(self, message: str, basis: Optional[LatticePoint] = None):
        super().__init__(message)
        self.basis = basis


@dataclass(frozen=True)
class InducedMap:
    """T(p) = scalar * (matrix @ p) on lattice coordinates"""
    scalar: TowerElement
    matrix: IntMatrix2
    primitive: bool
    raw_matrix: IntMatrix2
    content: int = 1


@dataclass(frozen=True)
class IdealReport:
    is_principal: bool
    generator: Optional[LatticePoint]
    index: int


def baseline_scalar(ds: DirectionalScaling) -> TowerElement:
    """x^2 / (1 + x^2)"""
    x2 = ds.tan_theta * ds.tan_theta
    return x2 / (1 + x2)


def _basis_column(ds: DirectionalScaling, basis: LatticePoint, s_inv: TowerElement) -> Tuple[int, int]:
    quotient = apply_exact(ds, basis) * s_inv
    pair = quotient.as_integer_pair(ds.kind.unit)
    if pair is None:
        raise NotLatticePreserving(
            f"T({basis.m},{basis.n}) / s is not an integer {ds.kind.value} lattice point", basis
        )
    return pair


def induced_map(ds: DirectionalScaling, primitive: bool = True) -> InducedMap:
    """Factor T as scalar * M; raises NotLatticePreserving if the lattice is not kept."""
    if ds.scale != ds.tan_theta * ds.tan_theta:
        raise ValueError("induced_map needs S_r = tan^2(theta)")
    s = baseline_scalar(ds)
    s_inv = elem_inv(s)
    first = _basis_column(ds, LatticePoint(1, 0, ds.kind), s_inv)
    second = _basis_column(ds, LatticePoint(0, 1, ds.kind), s_inv)
    raw = IntMatrix2.from_columns(first, second)
    if not primitive:
        return InducedMap(scalar=s, matrix=raw, primitive=False, raw_matrix=raw)

    g, matrix = mat_primitive(raw)
    logger.debug(f"Induced matrix {raw} = {g} * {matrix}")
    return InducedMap(scalar=s * g, matrix=matrix, primitive=True, raw_matrix=raw, content=g)


def _norm(elem: TowerElement) -> int:
    return int((elem * elem.ring.complex_conjugate(elem)).coefficient())


def _in_image(M: IntMatrix2, det: int, pair: Tuple[int, int]) -> bool:
    """pair in M*Z^2, by Cramer's rule"""
    p, q = pair
    return (M.d * p - M.b * q) % det == 0 and (M.a * q - M.c * p) % det == 0


def _euclid_gcd(g1: TowerElement, g2: TowerElement, unit: str) -> TowerElement:
    """gcd in Z[i] or Z[omega]; the quotient is rounded coordinatewise"""
    ring = g1.ring
    while not g2.is_zero():
        q = g1 / g2
        A, B = (int(math.floor(c + mpq(1, 2))) for c in (q.coefficient(), q.coefficient(unit)))
        g1, g2 = g2, g1 - g2 * (ring.constant(A) + ring.gen(unit) * B)
    return g1


def image_ideal_check(im: InducedMap, kind: LatticeKind) -> IdealReport:
    """Is M*Z^2 an ideal g*Z[unit] of the lattice ring?

    The Z-span is an ideal iff it is closed under multiplication by the
    unit; both rings are Euclidean, so the ideal is then generated by the
    gcd of the two columns. Column 1 is reported when it generates.
    """
    det = mat_det(im.matrix)
    if det == 0:
        raise ValueError("degenerate matrix has no image lattice")
    index = abs(det)
    ring = standard_ring(kind)
    unit = ring.gen(kind.unit)
    columns = [point_to_elem(LatticePoint(a, c, kind), ring) for a, c in im.matrix.columns()]
    for col in columns:
        if not _in_image(im.matrix, det, (col * unit).as_integer_pair(kind.unit)):
            return IdealReport(is_principal=False, generator=None, index=index)

    g = columns[0] if _norm(columns[0]) == index else _euclid_gcd(*columns, kind.unit)
    m, n = g.as_integer_pair(kind.unit)
    logger.debug(f"Image of {im.matrix} is the ideal ({m},{n}), index {index}")
    return IdealReport(is_principal=True, generator=LatticePoint(m, n, kind), index=index)
