"""Точки квадратной (Z[i]) и треугольной (Z[omega]) решеток"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional, Tuple

from gmpy2 import mpq

from exact import TowerElement, TowerRing, TowerSpec

logger = logging.getLogger(__name__)

OMEGA_NUMERIC = complex(-0.5, math.sqrt(3) / 2)


class LatticeKind(str, Enum):
    SQUARE = "square"
    TRIANGULAR = "triangular"

    @property
    def unit(self) -> str:
        """Имя генератора второго базисного вектора"""
        return "i" if self is LatticeKind.SQUARE else "omega"


def adjoin_sqrt(ring: TowerRing, d: int) -> TowerRing:
    return ring.extend(f"sqrt{d}", 0, d, math.sqrt(d))


def adjoin_unit(ring: TowerRing, kind: LatticeKind) -> TowerRing:
    """i**2 = -1 or omega**2 = -omega - 1, always the last generator"""
    if kind is LatticeKind.SQUARE:
        return ring.extend("i", 0, -1, 1j)
    return ring.extend("omega", -1, -1, OMEGA_NUMERIC)


@lru_cache(maxsize=None)
def standard_ring(kind: LatticeKind) -> TowerRing:
    """Q(i) for the square lattice, Q(sqrt3)(omega) for the triangular one"""
    base = TowerRing(TowerSpec())
    if kind is LatticeKind.TRIANGULAR:
        base = adjoin_sqrt(base, 3)
    return adjoin_unit(base, kind)


@dataclass(frozen=True)
class LatticePoint:
    """Пара целых (m, n): m + n*i или m + n*omega"""
    m: int
    n: int
    kind: LatticeKind = LatticeKind.SQUARE

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        if other.kind is not self.kind:
            raise ValueError(f"cannot add {self.kind.value} and {other.kind.value} points")
        return LatticePoint(self.m + other.m, self.n + other.n, self.kind)

    def __neg__(self) -> "LatticePoint":
        return LatticePoint(-self.m, -self.n, self.kind)


def point_to_elem(p: LatticePoint, ring: Optional[TowerRing] = None) -> TowerElement:
    ring = ring or standard_ring(p.kind)
    coeffs = [mpq(0)] * ring.size
    coeffs[0] = mpq(p.m)
    coeffs[1 << ring.index(p.kind.unit)] = mpq(p.n)
    return TowerElement(ring, tuple(coeffs))


def point_cartesian(p: LatticePoint, ring: Optional[TowerRing] = None) -> Tuple[TowerElement, TowerElement]:
    """Exact (x, y); the triangular case needs sqrt3 in the ring."""
    ring = ring or standard_ring(p.kind)
    if p.kind is LatticeKind.SQUARE:
        return ring.constant(p.m), ring.constant(p.n)
    # m + n*omega = (m - n/2) + i*(n*sqrt3/2)
    return ring.constant(mpq(2 * p.m - p.n, 2)), ring.gen("sqrt3") * mpq(p.n, 2)


def point_float(p: LatticePoint) -> Tuple[float, float]:
    if p.kind is LatticeKind.SQUARE:
        return float(p.m), float(p.n)
    return p.m - p.n / 2, p.n * math.sqrt(3) / 2


def grid_points(kind: LatticeKind, radius: int) -> Iterator[LatticePoint]:
    """All points with |m|, |n| <= radius, m-major order"""
    for m in range(-radius, radius + 1):
        for n in range(-radius, radius + 1):
            yield LatticePoint(m, n, kind)
