"""Башни квадратичных расширений над Q: точная арифметика без погрешности"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from gmpy2 import mpq, mpz

from config import settings
from exact.errors import (
    ConjugationUndefined,
    MalformedSpec,
    NotInvertible,
    NumericMismatch,
    SpecMismatch,
    UnknownGenerator,
)

logger = logging.getLogger(__name__)

Coeffs = Tuple[mpq, ...]
RationalLike = Union[int, mpq]

_ZERO = mpq(0)
_ONE = mpq(1)
# exact scalars only
_SCALARS = (int, type(mpz(0)), type(_ZERO))


@dataclass(frozen=True)
class Generator:
    """Generator t with t**2 = alpha*t + beta; alpha, beta are coefficient
    vectors over the generators that precede t."""
    name: str
    alpha: Coeffs
    beta: Coeffs
    numeric: complex

    @property
    def alpha_scalar(self) -> Optional[mpq]:
        return _as_scalar(self.alpha)

    @property
    def beta_scalar(self) -> Optional[mpq]:
        return _as_scalar(self.beta)


@dataclass(frozen=True)
class TowerSpec:
    """Упорядоченный список генераторов башни"""
    generators: Tuple[Generator, ...] = ()

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class GeneratorSpec:
    """Declarative generator record for tower_make.

    alpha and beta map monomials ("1", "sqrt3", "sqrt3*x") to rational
    coefficients; monomials may only use generators declared earlier.
    """
    name: str
    alpha: Mapping[str, RationalLike]
    beta: Mapping[str, RationalLike]
    numeric: complex


def _as_scalar(coeffs: Coeffs) -> Optional[mpq]:
    if any(coeffs[1:]):
        return None
    return coeffs[0]


def _add(a: Coeffs, b: Coeffs) -> Coeffs:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Coeffs, b: Coeffs) -> Coeffs:
    return tuple(x - y for x, y in zip(a, b))


def _neg(a: Coeffs) -> Coeffs:
    return tuple(-x for x in a)


def _scale(a: Coeffs, c: mpq) -> Coeffs:
    return tuple(x * c for x in a)


def _times(a: Coeffs, rel: Coeffs, rel_scalar: Optional[mpq], gens: Sequence[Generator], level: int) -> Coeffs:
    """a * rel where rel is alpha or beta of a generator"""
    if rel_scalar is not None:
        if not rel_scalar:
            return (_ZERO,) * len(a)
        return _scale(a, rel_scalar)
    return _mul(a, rel, gens, level)


def _mul(a: Coeffs, b: Coeffs, gens: Sequence[Generator], level: int) -> Coeffs:
    """Произведение с немедленной редукцией t**2 -> alpha*t + beta.

    Layout: the top generator owns the high bit, so the first half of the
    vector is p and the second half is q in a = p + q*t.
    """
    if level == 0:
        return (a[0] * b[0],)
    h = len(a) >> 1
    p1, q1, p2, q2 = a[:h], a[h:], b[:h], b[h:]
    sub = level - 1
    q1_zero = not any(q1)
    q2_zero = not any(q2)
    if q1_zero and q2_zero:
        return _mul(p1, p2, gens, sub) + (_ZERO,) * h
    if q1_zero:
        return _mul(p1, p2, gens, sub) + _mul(p1, q2, gens, sub)
    if q2_zero:
        return _mul(p1, p2, gens, sub) + _mul(q1, p2, gens, sub)

    g = gens[level - 1]
    pp = _mul(p1, p2, gens, sub)
    qq = _mul(q1, q2, gens, sub)
    if level == 1:
        cross = (p1[0] * q2[0] + q1[0] * p2[0],)
    else:
        cross = _sub(_sub(_mul(_add(p1, q1), _add(p2, q2), gens, sub), pp), qq)
    low = _add(pp, _times(qq, g.beta, g.beta_scalar, gens, sub))
    high = _add(cross, _times(qq, g.alpha, g.alpha_scalar, gens, sub))
    return low + high


def _inv(a: Coeffs, gens: Sequence[Generator], level: int) -> Coeffs:
    """Обратный элемент через норму: a^-1 = sigma(a) / (a * sigma(a))"""
    if level == 0:
        if not a[0]:
            raise NotInvertible("zero has no inverse")
        return (1 / a[0],)
    h = len(a) >> 1
    p, q = a[:h], a[h:]
    sub = level - 1
    if not any(q):
        return _inv(p, gens, sub) + (_ZERO,) * h

    g = gens[level - 1]
    # sigma(a) = (p + q*alpha) - q*t
    sp = _add(p, _times(q, g.alpha, g.alpha_scalar, gens, sub))
    sq = _neg(q)
    # N(a) = p*sp - q**2*beta, an element of the subtower
    norm = _sub(_mul(p, sp, gens, sub), _times(_mul(q, q, gens, sub), g.beta, g.beta_scalar, gens, sub))
    if not any(norm):
        raise NotInvertible(f"norm over generator {g.name!r} vanishes")
    norm_inv = _inv(norm, gens, sub)
    return _mul(sp, norm_inv, gens, sub) + _mul(sq, norm_inv, gens, sub)


@dataclass(frozen=True)
class TowerRing:
    """Кольцо-контекст башни: константы, генераторы, фабрики элементов"""
    spec: TowerSpec
    _monomials: Tuple[complex, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        values: List[complex] = [1 + 0j]
        for g in self.spec.generators:
            values = values + [v * g.numeric for v in values]
        object.__setattr__(self, "_monomials", tuple(values))

    @property
    def size(self) -> int:
        return 1 << len(self.spec)

    @property
    def names(self) -> Tuple[str, ...]:
        return self.spec.names

    def index(self, name: str) -> int:
        try:
            return self.spec.names.index(name)
        except ValueError:
            raise UnknownGenerator(name) from None

    def has(self, name: str) -> bool:
        return name in self.spec.names

    def element(self, coeffs: Sequence[RationalLike]) -> "TowerElement":
        if len(coeffs) != self.size:
            raise MalformedSpec(f"expected {self.size} coefficients, got {len(coeffs)}")
        return TowerElement(self, tuple(mpq(c) for c in coeffs))

    def constant(self, value: RationalLike) -> "TowerElement":
        return TowerElement(self, (mpq(value),) + (_ZERO,) * (self.size - 1))

    @property
    def zero(self) -> "TowerElement":
        return self.constant(0)

    @property
    def one(self) -> "TowerElement":
        return self.constant(1)

    def gen(self, name: str) -> "TowerElement":
        idx = self.index(name)
        coeffs = [_ZERO] * self.size
        coeffs[1 << idx] = _ONE
        return TowerElement(self, tuple(coeffs))

    def subring(self, count: int) -> "TowerRing":
        """Ring of the first count generators"""
        return TowerRing(TowerSpec(self.spec.generators[:count]))

    def lift(self, elem: "TowerElement") -> "TowerElement":
        """Embed an element of a prefix subtower; monomials keep their index."""
        if elem.ring.spec.generators != self.spec.generators[:len(elem.ring.spec)]:
            raise SpecMismatch("element does not come from a prefix of this tower")
        return TowerElement(self, elem.coeffs + (_ZERO,) * (self.size - len(elem.coeffs)))

    def extend(
        self,
        name: str,
        alpha: Union["TowerElement", RationalLike],
        beta: Union["TowerElement", RationalLike],
        numeric: complex,
    ) -> "TowerRing":
        """Adjoin t with t**2 = alpha*t + beta; alpha, beta live in this ring."""
        if name in self.spec.names:
            raise MalformedSpec(f"generator {name!r} declared twice")
        alpha_e = alpha if isinstance(alpha, TowerElement) else self.constant(alpha)
        beta_e = beta if isinstance(beta, TowerElement) else self.constant(beta)
        for rel in (alpha_e, beta_e):
            if rel.ring.spec != self.spec:
                raise MalformedSpec(f"relation of {name!r} is not over the preceding generators")

        lhs = numeric * numeric
        rhs = alpha_e.embed() * numeric + beta_e.embed()
        tol = settings.NUMERIC_RELATION_TOL * (1.0 + abs(lhs))
        if abs(lhs - rhs) > tol:
            raise NumericMismatch(
                f"{name}: |t^2 - (alpha*t + beta)| = {abs(lhs - rhs):.3e} exceeds {tol:.1e}"
            )

        gen = Generator(name=name, alpha=alpha_e.coeffs, beta=beta_e.coeffs, numeric=complex(numeric))
        logger.debug(f"Adjoined {name} to tower {self.spec.names}")
        return TowerRing(TowerSpec(self.spec.generators + (gen,)))

    def imaginary_generator(self) -> Optional[str]:
        for g in self.spec.generators:
            if abs(g.numeric.imag) > settings.NUMERIC_RELATION_TOL:
                return g.name
        return None

    def complex_unit(self) -> "TowerElement":
        """i, exactly: the generator itself or (2*omega + 1)/sqrt3"""
        if self.has("i"):
            return self.gen("i")
        if self.has("omega") and self.has("sqrt3"):
            return (2 * self.gen("omega") + 1) * self.gen("sqrt3") * mpq(1, 3)
        raise UnknownGenerator("i")

    def complex_conjugate(self, a: "TowerElement") -> "TowerElement":
        name = self.imaginary_generator()
        if name is None:
            return a
        return elem_conjugate(a, name)


@dataclass(frozen=True)
class TowerElement:
    """Элемент башни: плотный вектор из 2**n рациональных коэффициентов"""
    ring: TowerRing
    coeffs: Coeffs

    def _coerce(self, other) -> Optional["TowerElement"]:
        if isinstance(other, TowerElement):
            return other
        if isinstance(other, _SCALARS):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return elem_arith(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return elem_arith(self, other, "sub")

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return elem_arith(other, self, "sub")

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return TowerElement(self.ring, _scale(self.coeffs, mpq(other)))
        if not isinstance(other, TowerElement):
            return NotImplemented
        return elem_arith(self, other, "mul")

    __rmul__ = __mul__

    def __neg__(self):
        return TowerElement(self.ring, _neg(self.coeffs))

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                raise NotInvertible("division by zero")
            return TowerElement(self.ring, _scale(self.coeffs, 1 / mpq(other)))
        if not isinstance(other, TowerElement):
            return NotImplemented
        return elem_arith(self, elem_inv(other), "mul")

    def __pow__(self, exponent: int):
        if exponent < 0:
            return elem_inv(self) ** (-exponent)
        result, base = self.ring.one, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def coefficient(self, *names: str) -> mpq:
        mask = 0
        for name in names:
            mask |= 1 << self.ring.index(name)
        return self.coeffs[mask]

    def norm_to_base(self) -> "TowerElement":
        """a * sigma(a) over the top generator, as an element of the subtower"""
        level = len(self.ring.spec)
        if level == 0:
            return self
        gens = self.ring.spec.generators
        h = self.ring.size >> 1
        p, q = self.coeffs[:h], self.coeffs[h:]
        g = gens[level - 1]
        sub = level - 1
        sp = _add(p, _times(q, g.alpha, g.alpha_scalar, gens, sub))
        norm = _sub(_mul(p, sp, gens, sub), _times(_mul(q, q, gens, sub), g.beta, g.beta_scalar, gens, sub))
        return TowerElement(self.ring.subring(sub), norm)

    def embed(self) -> complex:
        return elem_embed(self)

    def as_integer_pair(self, unit: str) -> Optional[Tuple[int, int]]:
        return elem_as_integer_pair(self, unit)

    def __repr__(self) -> str:
        terms = []
        for mask, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "*".join(n for j, n in enumerate(self.ring.names) if mask >> j & 1)
            terms.append(f"{c}*{mono}" if mono else f"{c}")
        return f"TowerElement({' + '.join(terms) or '0'})"


def _check_same(a: TowerElement, b: TowerElement) -> None:
    if a.ring is not b.ring and a.ring.spec != b.ring.spec:
        raise SpecMismatch(f"tower {a.ring.names} vs tower {b.ring.names}")


def tower_make(spec: Sequence[GeneratorSpec]) -> TowerRing:
    """Build a ring from declarative generator records, checking each relation."""
    ring = TowerRing(TowerSpec())
    for record in spec:
        known = ring.names
        alpha = _parse_relation(ring, record.name, record.alpha, known)
        beta = _parse_relation(ring, record.name, record.beta, known)
        ring = ring.extend(record.name, alpha, beta, record.numeric)
    return ring


def _parse_relation(
    ring: TowerRing, owner: str, terms: Mapping[str, RationalLike], known: Tuple[str, ...]
) -> TowerElement:
    coeffs: Dict[int, mpq] = {}
    for monomial, value in terms.items():
        mask = 0
        if monomial not in ("", "1"):
            for name in monomial.split("*"):
                name = name.strip()
                if name not in known:
                    raise MalformedSpec(f"relation of {owner!r} references {name!r}, not an earlier generator")
                bit = 1 << known.index(name)
                if mask & bit:
                    raise MalformedSpec(f"monomial {monomial!r} of {owner!r} is not square-free")
                mask |= bit
        coeffs[mask] = coeffs.get(mask, _ZERO) + mpq(value)
    return ring.element([coeffs.get(m, _ZERO) for m in range(ring.size)])


def elem_arith(a: TowerElement, b: TowerElement, op: str) -> TowerElement:
    _check_same(a, b)
    if op == "add":
        return TowerElement(a.ring, _add(a.coeffs, b.coeffs))
    if op == "sub":
        return TowerElement(a.ring, _sub(a.coeffs, b.coeffs))
    if op == "mul":
        gens = a.ring.spec.generators
        return TowerElement(a.ring, _mul(a.coeffs, b.coeffs, gens, len(gens)))
    raise ValueError(f"Unknown operation: {op}")


def elem_inv(a: TowerElement) -> TowerElement:
    gens = a.ring.spec.generators
    return TowerElement(a.ring, _inv(a.coeffs, gens, len(gens)))


def elem_conjugate(a: TowerElement, gen: str) -> TowerElement:
    """Substitute t -> alpha - t for the named generator."""
    ring = a.ring
    idx = ring.index(gen)
    bit = 1 << idx
    for later in ring.spec.generators[idx + 1:]:
        for rel in (later.alpha, later.beta):
            if any(c for mask, c in enumerate(rel) if mask & bit):
                raise ConjugationUndefined(f"relation of {later.name!r} references {gen!r}")

    # a = p + q*t with p, q free of t
    p = [_ZERO] * ring.size
    q = [_ZERO] * ring.size
    for mask, c in enumerate(a.coeffs):
        if mask & bit:
            q[mask ^ bit] = c
        else:
            p[mask] = c
    q_elem = TowerElement(ring, tuple(q))
    g = ring.spec.generators[idx]
    if g.alpha_scalar is not None:
        q_alpha = q_elem * g.alpha_scalar
    else:
        q_alpha = q_elem * ring.lift(ring.subring(idx).element(g.alpha))
    return TowerElement(ring, tuple(p)) + q_alpha - q_elem * ring.gen(gen)


def elem_embed(a: TowerElement) -> complex:
    re_terms, im_terms = [], []
    for c, mono in zip(a.coeffs, a.ring._monomials):
        if c:
            fc = float(c)
            re_terms.append(fc * mono.real)
            im_terms.append(fc * mono.imag)
    return complex(math.fsum(re_terms), math.fsum(im_terms))


def elem_as_integer_pair(a: TowerElement, unit: str) -> Optional[Tuple[int, int]]:
    """(A, B) if a == A + B*unit with rational integers A, B, else None."""
    if not a.ring.has(unit):
        return None
    bit = 1 << a.ring.index(unit)
    for mask, c in enumerate(a.coeffs):
        if mask not in (0, bit) and c:
            return None
    A, B = a.coeffs[0], a.coeffs[bit]
    if A.denominator != 1 or B.denominator != 1:
        return None
    return int(A), int(B)
