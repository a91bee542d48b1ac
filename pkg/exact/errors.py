"""Ошибки точной арифметики в башнях квадратичных расширений"""


class TowerError(Exception):
    """Base class for tower arithmetic failures"""


class MalformedSpec(TowerError):
    """A relation references a later or unknown generator, or a name repeats"""


class NumericMismatch(TowerError):
    """The embedded numeric value does not satisfy its generator relation"""


class SpecMismatch(TowerError):
    """Operands live in different towers"""


class NotInvertible(TowerError, ZeroDivisionError):
    """A norm vanished while inverting"""


class UnknownGenerator(TowerError, KeyError):
    """No generator with that name in the tower"""


class ConjugationUndefined(TowerError):
    """A later relation references the generator, so t -> alpha - t is not a ring map"""
