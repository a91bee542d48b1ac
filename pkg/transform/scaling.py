"""Направленное масштабирование: построение и применение (точно и в float)"""
import logging
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Tuple, Union

from gmpy2 import mpq

from exact import TowerElement, TowerRing, TowerSpec, quadratic_sqrt, rational_sqrt
from lattice import (
    LatticeKind,
    LatticePoint,
    adjoin_sqrt,
    adjoin_unit,
    point_cartesian,
    point_to_elem,
    standard_ring,
)

logger = logging.getLogger(__name__)


class KindMismatch(ValueError):
    """Point and transform belong to different lattices"""


@dataclass(frozen=True)
class SquareFamily:
    """tan(theta) is the positive root of x**2 = 1 - k*x, k = a + b*sqrt(3)"""
    a: int
    b: int = 0

    @property
    def k_value(self) -> float:
        return self.a + self.b * math.sqrt(3)

    @property
    def label(self) -> str:
        if not self.b:
            return f"k={self.a}"
        surd = "sqrt(3)" if self.b == 1 else f"{self.b}*sqrt(3)"
        if not self.a:
            return f"k={surd}"
        return f"k={self.a}+{surd}" if self.b > 0 else f"k={self.a}-{surd.lstrip('-')}"


@dataclass(frozen=True)
class TriangularKnown:
    label: str = "triangular pi/12"


@dataclass(frozen=True)
class Custom:
    label: str = "custom"


FamilyTag = Union[SquareFamily, TriangularKnown, Custom]


@dataclass(frozen=True)
class DirectionalScaling:
    """Scale by S_r along theta, fix the perpendicular; drag point at the origin.

    Only tan(theta) is stored; its relation lives in the tower.
    """
    kind: LatticeKind
    tan_theta: TowerElement
    scale: TowerElement
    family_tag: FamilyTag

    def __post_init__(self):
        if self.scale != self.tan_theta * self.tan_theta:
            raise ValueError("scale must equal tan_theta**2")
        if not self.tan_theta.ring.has(self.kind.unit):
            raise ValueError(f"tower {self.tan_theta.ring.names} lacks {self.kind.unit}")
        x = self.tan_theta.embed()
        if abs(x.imag) > 1e-12 or x.real <= 0:
            raise ValueError(f"tan_theta must be a positive real number, got {x}")

    @property
    def ring(self) -> TowerRing:
        return self.tan_theta.ring

    @cached_property
    def theta(self) -> float:
        return math.atan(self.tan_theta.embed().real)

    @cached_property
    def scale_float(self) -> float:
        return self.scale.embed().real

    @cached_property
    def conjugation_coefficients(self) -> Tuple[TowerElement, TowerElement]:
        """(A, B) with T(z) = A*z + B*conj(z)"""
        x = self.tan_theta
        s = self.scale
        i = self.ring.complex_unit()
        x2 = x * x
        # e^{2i theta} = (1 - x^2 + 2ix) / (1 + x^2)
        rotation = (1 - x2 + 2 * i * x) / (1 + x2)
        return (s + 1) * mpq(1, 2), (s - 1) * mpq(1, 2) * rotation


def theta_degrees(ds: DirectionalScaling) -> float:
    return math.degrees(ds.theta)


@lru_cache(maxsize=None)
def _family_ring(kind: LatticeKind, a: int, b: int) -> Tuple[TowerRing, TowerElement]:
    """Tower for x**2 = 1 - k*x with k = a + b*sqrt(3), and x inside it.

    When k**2 + 4 is a square in the coefficient field the root is built
    there and no x generator is adjoined.
    """
    prefix = TowerRing(TowerSpec())
    if b or kind is LatticeKind.TRIANGULAR:
        prefix = adjoin_sqrt(prefix, 3)
    k_num = a + b * math.sqrt(3)

    if prefix.has("sqrt3"):
        # k**2 + 4 = (a**2 + 3b**2 + 4) + 2ab*sqrt(3)
        root = quadratic_sqrt(mpq(a * a + 3 * b * b + 4), mpq(2 * a * b), 3)
    else:
        r = rational_sqrt(mpq(a * a + 4))
        root = None if r is None else (r, mpq(0))

    if root is not None:
        ring = adjoin_unit(prefix, kind)
        k = ring.constant(a) + (ring.gen("sqrt3") * b if b else ring.zero)
        sqrt_disc = ring.constant(root[0]) + (ring.gen("sqrt3") * root[1] if root[1] else ring.zero)
        logger.debug(f"k={k_num:.6f}: k^2+4 is a square, root stays in the base field")
        return ring, (sqrt_disc - k) * mpq(1, 2)

    k = prefix.constant(a) + (prefix.gen("sqrt3") * b if b else prefix.zero)
    # (sqrt(k^2+4) - k)/2 without cancellation
    x_num = 2.0 / (math.sqrt(k_num * k_num + 4) + k_num)
    ring = adjoin_unit(prefix.extend("x", -k, 1, x_num), kind)
    return ring, ring.gen("x")


def scaling_from_k(kind: LatticeKind, a: int, b: int = 0) -> DirectionalScaling:
    """S_r = tan^2(theta) with tan(theta) the positive root of x**2 = 1 - (a + b*sqrt3)*x"""
    if a + b * math.sqrt(3) <= 0:
        raise ValueError(f"k = {a} + {b}*sqrt(3) must be positive")
    ring, x = _family_ring(kind, a, b)
    return DirectionalScaling(kind=kind, tan_theta=x, scale=x * x, family_tag=SquareFamily(a, b))


def square_family(k: int) -> DirectionalScaling:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    return scaling_from_k(LatticeKind.SQUARE, k)


def triangular_known() -> DirectionalScaling:
    """theta = pi/12, tan(theta) = 2 - sqrt3, S_r = 7 - 4*sqrt3"""
    ring = standard_ring(LatticeKind.TRIANGULAR)
    x = 2 - ring.gen("sqrt3")
    return DirectionalScaling(
        kind=LatticeKind.TRIANGULAR, tan_theta=x, scale=x * x, family_tag=TriangularKnown()
    )


def custom_scaling(kind: LatticeKind, tan_theta: TowerElement) -> DirectionalScaling:
    return DirectionalScaling(kind=kind, tan_theta=tan_theta, scale=tan_theta * tan_theta, family_tag=Custom())


def apply_exact(ds: DirectionalScaling, p: LatticePoint) -> TowerElement:
    """T(z) = ((S+1)/2)*z + ((S-1)/2)*e^{2i theta}*conj(z)"""
    if p.kind is not ds.kind:
        raise KindMismatch(f"{p.kind.value} point under a {ds.kind.value} transform")
    z = point_to_elem(p, ds.ring)
    a, b = ds.conjugation_coefficients
    return a * z + b * ds.ring.complex_conjugate(z)


def apply_resolved_exact(ds: DirectionalScaling, p: LatticePoint) -> TowerElement:
    """Expanded form for any S_r, in Cartesian coordinates (X, Y):
    {S(X + Yx) - x(Y - Xx) + i[Y - Xx + xS(X + Yx)]} / (1 + x^2)"""
    if p.kind is not ds.kind:
        raise KindMismatch(f"{p.kind.value} point under a {ds.kind.value} transform")
    x, s = ds.tan_theta, ds.scale
    i = ds.ring.complex_unit()
    X, Y = point_cartesian(p, ds.ring)
    along = X + Y * x
    across = Y - X * x
    return (s * along - x * across + i * (across + x * s * along)) / (1 + x * x)


def directional_scale_float(theta: float, scale: float, xy: Tuple[float, float]) -> Tuple[float, float]:
    """S(m cos + n sin)(cos, sin) + (-m sin + n cos)(-sin, cos)"""
    c, s = math.cos(theta), math.sin(theta)
    m, n = xy
    along = scale * (m * c + n * s)
    across = -m * s + n * c
    return along * c - across * s, along * s + across * c


def apply_float(ds: DirectionalScaling, xy: Tuple[float, float]) -> Tuple[float, float]:
    return directional_scale_float(ds.theta, ds.scale_float, xy)
