"""Индуцированные отображения, проверка симметрий и поиск новых"""
from symmetry.induced import (
    IdealReport,
    InducedMap,
    NotLatticePreserving,
    baseline_scalar,
    image_ideal_check,
    induced_map,
)
from symmetry.search import IntegerRange, KForm, MixedQ3, SearchSpec, SqrtThreeMultiples, search
from symmetry.verify import (
    GridReport,
    SymmetryReport,
    grid_coincidence_check,
    parallel_map,
    verify_scaling,
    verify_square_family,
    verify_triangular,
    verify_with_grid,
)

__all__ = [
    "GridReport",
    "IdealReport",
    "InducedMap",
    "IntegerRange",
    "KForm",
    "MixedQ3",
    "NotLatticePreserving",
    "SearchSpec",
    "SqrtThreeMultiples",
    "SymmetryReport",
    "baseline_scalar",
    "grid_coincidence_check",
    "image_ideal_check",
    "induced_map",
    "parallel_map",
    "search",
    "verify_scaling",
    "verify_square_family",
    "verify_triangular",
    "verify_with_grid",
]
