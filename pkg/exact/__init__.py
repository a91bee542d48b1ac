"""Точная арифметика в башнях квадратичных расширений рациональных чисел"""
from exact.errors import (
    ConjugationUndefined,
    MalformedSpec,
    NotInvertible,
    NumericMismatch,
    SpecMismatch,
    TowerError,
    UnknownGenerator,
)
from exact.radicals import quadratic_sqrt, rational_sqrt, squarefree_decompose, to_radical
from exact.tower import (
    Generator,
    GeneratorSpec,
    TowerElement,
    TowerRing,
    TowerSpec,
    elem_arith,
    elem_as_integer_pair,
    elem_conjugate,
    elem_embed,
    elem_inv,
    tower_make,
)

__all__ = [
    "ConjugationUndefined",
    "Generator",
    "GeneratorSpec",
    "MalformedSpec",
    "NotInvertible",
    "NumericMismatch",
    "SpecMismatch",
    "TowerElement",
    "TowerError",
    "TowerRing",
    "TowerSpec",
    "UnknownGenerator",
    "elem_arith",
    "elem_as_integer_pair",
    "elem_conjugate",
    "elem_embed",
    "elem_inv",
    "quadratic_sqrt",
    "rational_sqrt",
    "squarefree_decompose",
    "tower_make",
    "to_radical",
]
