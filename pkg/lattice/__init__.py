"""Гауссовы и эйзенштейновы решетки, целочисленные матрицы 2x2"""
from lattice.matrix import (
    IntMatrix2,
    LatticeError,
    NotUnimodular,
    ZeroMatrix,
    mat_apply,
    mat_det,
    mat_inverse,
    mat_is_positive_definite,
    mat_mul,
    mat_primitive,
)
from lattice.points import (
    LatticeKind,
    LatticePoint,
    adjoin_sqrt,
    adjoin_unit,
    grid_points,
    point_cartesian,
    point_float,
    point_to_elem,
    standard_ring,
)

__all__ = [
    "IntMatrix2",
    "LatticeError",
    "LatticeKind",
    "LatticePoint",
    "NotUnimodular",
    "ZeroMatrix",
    "adjoin_sqrt",
    "adjoin_unit",
    "grid_points",
    "mat_apply",
    "mat_det",
    "mat_inverse",
    "mat_is_positive_definite",
    "mat_mul",
    "mat_primitive",
    "point_cartesian",
    "point_float",
    "point_to_elem",
    "standard_ring",
]
