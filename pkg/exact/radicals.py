"""Точные квадратные корни в Q и Q(sqrt d), каноническая запись радикалов"""
import logging
import math
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import gmpy2
from gmpy2 import mpq

from config import settings
from exact.tower import TowerElement, TowerRing, TowerSpec

logger = logging.getLogger(__name__)


def squarefree_decompose(n: int) -> Tuple[int, int]:
    """n = f**2 * d with d square-free; returns (f, d). n must be positive."""
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")
    f, d = 1, 1
    rest = n
    p = 2
    while p * p <= rest:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        f *= p ** (e // 2)
        if e % 2:
            d *= p
        p = 3 if p == 2 else p + 2
    return f, d * rest


def rational_sqrt(q: mpq) -> Optional[mpq]:
    """Nonnegative rational square root, or None"""
    q = mpq(q)
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    if not (gmpy2.is_square(num) and gmpy2.is_square(den)):
        return None
    return mpq(gmpy2.isqrt(num), gmpy2.isqrt(den))


def quadratic_sqrt(p: mpq, q: mpq, d: int) -> Optional[Tuple[mpq, mpq]]:
    """(u, v) with (u + v*sqrt(d))**2 = p + q*sqrt(d) and u + v*sqrt(d) >= 0.

    d is a square-free integer > 1; returns None when the root is not in Q(sqrt d).
    """
    p, q = mpq(p), mpq(q)
    candidates = []
    if not q:
        u = rational_sqrt(p)
        if u is not None:
            candidates.append((u, mpq(0)))
        v = rational_sqrt(p / d)
        if v is not None:
            candidates.append((mpq(0), v))
    else:
        r = rational_sqrt(p * p - d * q * q)
        if r is not None:
            for half in ((p + r) / 2, (p - r) / 2):
                u = rational_sqrt(half)
                if u:
                    v = q / (2 * u)
                    if u * u + d * v * v == p:
                        candidates.append((u, v))
    if not candidates:
        return None
    u, v = candidates[0]
    if float(u) + float(v) * math.sqrt(d) < 0:
        u, v = -u, -v
    return u, v


def format_rational(c: mpq) -> str:
    c = mpq(c)
    if c.denominator == 1:
        return str(int(c))
    return f"{int(c.numerator)}/{int(c.denominator)}"


def format_quadratic(a: mpq, b: mpq, d: int) -> str:
    """a + b*sqrt(d) as (P+Q*sqrt(d))/R with gcd(P, Q, R) = 1 and R > 0"""
    a, b = mpq(a), mpq(b)
    if not b or d == 1:
        return format_rational(a + b)
    r = math.lcm(int(a.denominator), int(b.denominator))
    p, q = int(a * r), int(b * r)
    surd = f"sqrt({d})" if abs(q) == 1 else f"{abs(q)}*sqrt({d})"
    if p:
        body = f"{p}{'-' if q < 0 else '+'}{surd}"
    else:
        body = f"-{surd}" if q < 0 else surd
    if r == 1:
        return body
    return f"({body})/{r}" if p else f"{body}/{r}"


def quadratic_form(a: TowerElement) -> Optional[Tuple[mpq, mpq, int]]:
    """(A, B, d) with a = A + B*sqrt(d) when a depends on at most one real
    generator whose relation has rational coefficients; None otherwise."""
    ring = a.ring
    masks = [m for m in range(1, ring.size) if a.coeffs[m]]
    if not masks:
        return a.coeffs[0], mpq(0), 1
    if len(masks) > 1 or masks[0] & (masks[0] - 1):
        return None
    gen = ring.spec.generators[masks[0].bit_length() - 1]
    alpha, beta = gen.alpha_scalar, gen.beta_scalar
    if alpha is None or beta is None or abs(gen.numeric.imag) > settings.NUMERIC_RELATION_TOL:
        return None

    # t = (alpha + s*sqrt(D))/2, D = alpha**2 + 4*beta
    disc = alpha * alpha + 4 * beta
    if disc <= 0:
        return None
    root = math.sqrt(float(disc))
    sign = 1 if abs((float(alpha) + root) / 2 - gen.numeric.real) <= abs((float(alpha) - root) / 2 - gen.numeric.real) else -1
    c0, c1 = a.coeffs[0], a.coeffs[masks[0]]
    # sqrt(num/den) = sqrt(num*den)/den
    f, d = squarefree_decompose(int(disc.numerator * disc.denominator))
    surd_coeff = mpq(f, int(disc.denominator))
    return c0 + c1 * alpha / 2, c1 * sign * surd_coeff / 2, d


# sqrt(d) * sqrt(P + Q*sqrt(e)); d square-free, nest None or (P, Q, e) with integers
Surd = Tuple[int, Optional[Tuple[int, int, int]]]
SurdSum = Dict[Surd, mpq]

_RATIONAL: Surd = (1, None)


def _surd_value(key: Surd) -> float:
    d, nest = key
    value = math.sqrt(d)
    if nest is not None:
        P, Q, e = nest
        value *= math.sqrt(P + Q * math.sqrt(e))
    return value


def _sum_value(a: SurdSum) -> float:
    return math.fsum(float(c) * _surd_value(key) for key, c in a.items())


def _sum_add(a: SurdSum, b: SurdSum, sign: int = 1) -> SurdSum:
    out = dict(a)
    for key, c in b.items():
        out[key] = out.get(key, mpq(0)) + sign * c
    return {key: c for key, c in out.items() if c}


def _sum_mul(a: SurdSum, b: SurdSum) -> Optional[SurdSum]:
    out: SurdSum = {}
    for (d1, n1), c1 in a.items():
        for (d2, n2), c2 in b.items():
            if n1 is not None and n2 is not None:
                return None
            f, d = squarefree_decompose(d1 * d2)
            key = (d, n1 if n1 is not None else n2)
            out[key] = out.get(key, mpq(0)) + c1 * c2 * f
    return {key: c for key, c in out.items() if c}


def _rational_surd(q: mpq) -> SurdSum:
    """sqrt(q) for q >= 0 as f*sqrt(d)/den"""
    if not q:
        return {}
    f, d = squarefree_decompose(int(q.numerator * q.denominator))
    return {(d, None): mpq(f, int(q.denominator))}


def _sqrt_sum(a: SurdSum) -> Optional[SurdSum]:
    """Positive square root of a positive p + q*sqrt(e), denested when possible"""
    p = a.get(_RATIONAL, mpq(0))
    rest = [key for key in a if key != _RATIONAL]
    if not rest:
        return _rational_surd(p) if p > 0 else None
    if len(rest) > 1 or rest[0][1] is not None:
        return None
    e = rest[0][0]
    q = a[rest[0]]
    # sqrt(p + q*sqrt(e)) = sqrt(u) + sign(q)*sqrt(v) when p**2 - e*q**2 is a square
    r = rational_sqrt(p * p - e * q * q)
    if r is not None and p - r >= 0:
        return _sum_add(_rational_surd((p + r) / 2), _rational_surd((p - r) / 2), 1 if q > 0 else -1)
    den = math.lcm(int(p.denominator), int(q.denominator))
    return {(1, (int(p * den * den), int(q * den * den), e)): mpq(1, den)}


@lru_cache(maxsize=None)
def _generator_surds(spec: TowerSpec) -> Tuple[Optional[SurdSum], ...]:
    """Each real generator t**2 = alpha*t + beta as (alpha +- sqrt(alpha**2 + 4*beta))/2"""
    out: List[Optional[SurdSum]] = []
    for j, g in enumerate(spec.generators):
        if abs(g.numeric.imag) > settings.NUMERIC_RELATION_TOL:
            out.append(None)
            continue
        sub = TowerRing(TowerSpec(spec.generators[:j]))
        alpha_e, beta_e = sub.element(g.alpha), sub.element(g.beta)
        alpha = _element_surds(alpha_e, out)
        disc = _element_surds(alpha_e * alpha_e + 4 * beta_e, out)
        root = None if disc is None else _sqrt_sum(disc)
        if alpha is None or root is None:
            out.append(None)
            continue
        half = {key: c / 2 for key, c in alpha.items()}
        half_root = {key: c / 2 for key, c in root.items()}
        roots = (_sum_add(half, half_root), _sum_add(half, half_root, -1))
        out.append(min(roots, key=lambda t: abs(_sum_value(t) - g.numeric.real)))
    return tuple(out)


def _element_surds(a: TowerElement, gens: Sequence[Optional[SurdSum]]) -> Optional[SurdSum]:
    total: SurdSum = {}
    for mask, c in enumerate(a.coeffs):
        if not c:
            continue
        term: Optional[SurdSum] = {_RATIONAL: c}
        for j, gen in enumerate(gens):
            if mask >> j & 1:
                if gen is None:
                    return None
                term = _sum_mul(term, gen)
                if term is None:
                    return None
        total = _sum_add(total, term)
    return total


def _surd_text(key: Surd) -> str:
    d, nest = key
    parts = []
    if d > 1:
        parts.append(f"sqrt({d})")
    if nest is not None:
        parts.append(f"sqrt({format_quadratic(*nest)})")
    return "*".join(parts)


def format_surds(a: SurdSum) -> str:
    """(c0 + c1*sqrt(d1) + ...)/R, rational part first, then by radicand"""
    if not a:
        return "0"
    r = math.lcm(*(int(c.denominator) for c in a.values()))
    terms = []
    for key in sorted(a, key=lambda k: (k[1] is not None, k[1] or (0, 0, 0), k[0])):
        c = int(a[key] * r)
        surd = _surd_text(key)
        if not surd:
            text = str(abs(c))
        elif abs(c) == 1:
            text = surd
        else:
            text = f"{abs(c)}*{surd}"
        terms.append(f"{'-' if c < 0 else '+'}{text}")
    body = "".join(terms)
    body = body[1:] if body.startswith("+") else body
    if r == 1:
        return body
    return f"({body})/{r}" if len(terms) > 1 else f"{body}/{r}"


def radical_surds(a: TowerElement) -> Optional[SurdSum]:
    """a as a sum of rational multiples of real surds; None when a uses an
    imaginary generator or a generator with no surd form"""
    return _element_surds(a, _generator_surds(a.ring.spec))


def to_radical(a: TowerElement) -> str:
    """Каноническая строка: целые, +, -, *, /, sqrt(...), скобки."""
    form = quadratic_form(a)
    if form is not None:
        return format_quadratic(*form)
    surds = radical_surds(a)
    if surds is not None:
        return format_surds(surds)
    logger.debug(f"No surd form for {a!r}, writing monomials")
    terms = []
    for mask, c in enumerate(a.coeffs):
        if not c:
            continue
        mono = "*".join(n for j, n in enumerate(a.ring.names) if mask >> j & 1)
        coeff = format_rational(abs(c))
        if not mono:
            term = coeff
        elif abs(c) == 1:
            term = mono
        else:
            term = f"{coeff}*{mono}"
        sign = "-" if c < 0 else "+"
        terms.append(f"{sign}{term}")
    if not terms:
        return "0"
    text = "".join(terms)
    return text[1:] if text.startswith("+") else text
