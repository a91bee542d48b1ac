"""Целочисленные матрицы 2x2: определитель, примитивная форма, действие на точки"""
import math
from dataclasses import dataclass
from typing import Tuple

from lattice.points import LatticePoint


class LatticeError(Exception):
    """Base class for lattice failures"""


class ZeroMatrix(LatticeError):
    """The zero matrix has no primitive form"""


class NotUnimodular(LatticeError):
    """No integer inverse: |det| != 1"""


@dataclass(frozen=True)
class IntMatrix2:
    """Row-major: (m, n) -> (a*m + b*n, c*m + d*n)"""
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def identity(cls) -> "IntMatrix2":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_columns(cls, first: Tuple[int, int], second: Tuple[int, int]) -> "IntMatrix2":
        return cls(first[0], second[0], first[1], second[1])

    def rows(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    def columns(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return (self.a, self.c), (self.b, self.d)

    def __matmul__(self, other: "IntMatrix2") -> "IntMatrix2":
        return mat_mul(self, other)

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def mat_det(M: IntMatrix2) -> int:
    return M.a * M.d - M.b * M.c


def mat_primitive(M: IntMatrix2) -> Tuple[int, IntMatrix2]:
    """M = g * M' with g the gcd of the entries"""
    g = math.gcd(M.a, M.b, M.c, M.d)
    if g == 0:
        raise ZeroMatrix("zero matrix has no primitive form")
    return g, IntMatrix2(M.a // g, M.b // g, M.c // g, M.d // g)


def mat_apply(M: IntMatrix2, p: LatticePoint) -> LatticePoint:
    return LatticePoint(M.a * p.m + M.b * p.n, M.c * p.m + M.d * p.n, p.kind)


def mat_mul(M: IntMatrix2, N: IntMatrix2) -> IntMatrix2:
    return IntMatrix2(
        M.a * N.a + M.b * N.c,
        M.a * N.b + M.b * N.d,
        M.c * N.a + M.d * N.c,
        M.c * N.b + M.d * N.d,
    )


def mat_inverse(M: IntMatrix2) -> IntMatrix2:
    """Integer inverse (the adjugate over det) for |det| = 1"""
    det = mat_det(M)
    if det not in (1, -1):
        raise NotUnimodular(f"det {det} has no integer inverse")
    return IntMatrix2(M.d * det, -M.b * det, -M.c * det, M.a * det)


def mat_is_positive_definite(M: IntMatrix2) -> bool:
    """Positive definiteness of the symmetric part (M + M^T)/2"""
    # 4 * det((M + M^T)/2) = 4ad - (b + c)**2
    return M.a > 0 and 4 * M.a * M.d - (M.b + M.c) ** 2 > 0
