"""Серебряное, платиновое и золотое сечения как точные элементы"""
from functools import lru_cache
from typing import Dict

from gmpy2 import mpq

from exact import TowerElement, TowerRing, TowerSpec
from lattice import adjoin_sqrt


@lru_cache(maxsize=None)
def sqrt_ring(d: int) -> TowerRing:
    """Q(sqrt d)"""
    return adjoin_sqrt(TowerRing(TowerSpec()), d)


def _sqrt(d: int) -> TowerElement:
    return sqrt_ring(d).gen(f"sqrt{d}")


# Names follow the abstract: silver sqrt2 - 1, platinum 2 - sqrt3
SILVER = _sqrt(2) - 1
PLATINUM = 2 - _sqrt(3)
GOLDEN = (_sqrt(5) - 1) * mpq(1, 2)


def named_ratios() -> Dict[str, TowerElement]:
    return {"silver": SILVER, "platinum": PLATINUM, "golden": GOLDEN}
