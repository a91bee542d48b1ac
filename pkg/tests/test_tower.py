import math
import operator
from fractions import Fraction

import pytest
from gmpy2 import mpq, mpz
from hypothesis import given, settings

from exact import (
    ConjugationUndefined,
    GeneratorSpec,
    MalformedSpec,
    NotInvertible,
    NumericMismatch,
    SpecMismatch,
    UnknownGenerator,
    elem_arith,
    elem_as_integer_pair,
    elem_conjugate,
    elem_inv,
    tower_make,
)
from lattice import LatticeKind, standard_ring
from transform import scaling_from_k, square_family
from tests.strategies import SEARCH_RING, SQUARE_RING, elements, nonzero_elements

SQRT3 = 3 ** 0.5
OMEGA = complex(-0.5, SQRT3 / 2)
X_NUMERIC = 2 / (((1 + SQRT3) ** 2 + 4) ** 0.5 + 1 + SQRT3)


def close(u: complex, v: complex) -> bool:
    return abs(u - v) <= 1e-9 * (1 + abs(u) + abs(v))


class TestRingAxioms:
    @settings(max_examples=1000)
    @given(elements(), elements(), elements())
    def test_associativity(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)

    @settings(max_examples=1000)
    @given(elements(), elements())
    def test_commutativity(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @settings(max_examples=1000)
    @given(elements(), elements(), elements())
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(elements())
    def test_identities(self, a):
        assert a + SEARCH_RING.zero == a
        assert a * SEARCH_RING.one == a
        assert a - a == SEARCH_RING.zero
        assert -(-a) == a


@settings(max_examples=1000)
@given(nonzero_elements())
def test_inverse(a):
    assert a * elem_inv(a) == SEARCH_RING.one


@settings(max_examples=200)
@given(nonzero_elements(SQUARE_RING), elements(SQUARE_RING))
def test_division_undoes_multiplication(a, b):
    assert (b * a) / a == b


def test_zero_has_no_inverse():
    with pytest.raises(NotInvertible):
        elem_inv(SEARCH_RING.zero)
    with pytest.raises(ZeroDivisionError):
        SEARCH_RING.one / 0


class TestConjugation:
    @settings(max_examples=1000)
    @given(elements())
    def test_involution(self, a):
        for gen in ("x", "omega"):
            assert elem_conjugate(elem_conjugate(a, gen), gen) == a

    @settings(max_examples=1000)
    @given(elements(), elements())
    def test_homomorphism(self, a, b):
        for gen in ("x", "omega"):
            assert elem_conjugate(a * b, gen) == elem_conjugate(a, gen) * elem_conjugate(b, gen)
            assert elem_conjugate(a + b, gen) == elem_conjugate(a, gen) + elem_conjugate(b, gen)

    @given(elements())
    def test_complex_conjugate_matches_embedding(self, a):
        assert close(SEARCH_RING.complex_conjugate(a).embed(), a.embed().conjugate())

    def test_generator_referenced_later_is_rejected(self):
        # x**2 = -(1 + sqrt3)*x + 1 mentions sqrt3
        with pytest.raises(ConjugationUndefined):
            elem_conjugate(SEARCH_RING.gen("x"), "sqrt3")

    def test_omega_goes_to_omega_squared(self):
        omega = SEARCH_RING.gen("omega")
        assert elem_conjugate(omega, "omega") == omega * omega


class TestEmbed:
    @settings(max_examples=1000)
    @given(elements(), elements())
    def test_homomorphism(self, a, b):
        assert close((a * b).embed(), a.embed() * b.embed())
        assert close((a + b).embed(), a.embed() + b.embed())

    def test_generators(self):
        assert close(SEARCH_RING.gen("sqrt3").embed(), SQRT3)
        assert close(SEARCH_RING.gen("omega").embed(), OMEGA)
        assert close(SEARCH_RING.complex_unit().embed(), 1j)


class TestTowerMake:
    def test_eisenstein_ring(self):
        ring = tower_make([
            GeneratorSpec("sqrt3", {}, {"1": 3}, SQRT3),
            GeneratorSpec("omega", {"1": -1}, {"1": -1}, OMEGA),
        ])
        omega = ring.gen("omega")
        assert omega * omega * omega == ring.one
        assert ring.complex_unit() * ring.complex_unit() == -ring.one

    def test_relation_over_earlier_generators(self):
        ring = tower_make([
            GeneratorSpec("sqrt3", {}, {"1": 3}, SQRT3),
            GeneratorSpec("x", {"1": -1, "sqrt3": -1}, {"1": 1}, X_NUMERIC),
        ])
        x = ring.gen("x")
        assert x * x == (-1 - ring.gen("sqrt3")) * x + 1

    def test_forward_reference(self):
        with pytest.raises(MalformedSpec):
            tower_make([GeneratorSpec("x", {"y": 1}, {"1": 1}, 1.0)])

    def test_repeated_name(self):
        with pytest.raises(MalformedSpec):
            tower_make([
                GeneratorSpec("i", {}, {"1": -1}, 1j),
                GeneratorSpec("i", {}, {"1": -1}, 1j),
            ])

    def test_numeric_mismatch(self):
        with pytest.raises(NumericMismatch):
            tower_make([GeneratorSpec("sqrt2", {}, {"1": 2}, 1.5)])

    def test_unknown_generator(self):
        with pytest.raises(UnknownGenerator):
            SQUARE_RING.gen("omega")

    def test_spec_mismatch(self):
        with pytest.raises(SpecMismatch):
            elem_arith(SQUARE_RING.one, SEARCH_RING.one, "add")


def test_norm_to_base_is_product_with_conjugate():
    a = SQUARE_RING.element([1, mpq(1, 2), -3, 2])
    norm = a.norm_to_base()
    assert norm.ring.names == ("x",)
    assert SQUARE_RING.lift(norm) == a * elem_conjugate(a, "i")
    assert close(norm.embed(), abs(a.embed()) ** 2)


def test_power():
    i = SQUARE_RING.gen("i")
    assert i ** 4 == SQUARE_RING.one
    assert i ** -1 == -i
    x = SQUARE_RING.gen("x")
    assert close((x ** 5).embed(), x.embed() ** 5)


K1_RING = scaling_from_k(LatticeKind.SQUARE, 1).ring
K2_RING = scaling_from_k(LatticeKind.SQUARE, 2).ring


class TestInverseExamples:
    def test_two_minus_x(self):
        # x**2 = 1 - x
        x = K1_RING.gen("x")
        assert elem_inv(2 - x) == (3 + x) / 5

    def test_one_plus_x_squared(self):
        # x = sqrt2 - 1, so 1 + x**2 = 4 - 2*sqrt2
        x = square_family(2).tan_theta
        assert abs(elem_inv(1 + x * x).embed() - 0.8535533906) < 1e-9


@pytest.mark.parametrize("k", range(1, 51))
def test_family_generator_embeds_to_positive_root(k):
    x = square_family(k).tan_theta
    assert abs(x.embed() - (math.sqrt(k * k + 4) - k) / 2) < 1e-12


class TestIntegerPair:
    def test_gaussian_integer(self):
        ring = standard_ring(LatticeKind.SQUARE)
        assert elem_as_integer_pair(1 - ring.gen("i"), "i") == (1, -1)
        assert elem_as_integer_pair(ring.constant(mpq(1, 2)), "i") is None

    def test_irrational_part_is_rejected(self):
        assert elem_as_integer_pair(SQUARE_RING.gen("x") * SQUARE_RING.gen("i"), "i") is None
        assert elem_as_integer_pair(SQUARE_RING.constant(3), "i") == (3, 0)

    def test_missing_unit(self):
        assert elem_as_integer_pair(K2_RING.one, "omega") is None


@pytest.mark.parametrize("other", [Fraction(1, 2), 0.5, 1j])
def test_inexact_operands_raise_type_error(other):
    a = SQUARE_RING.gen("x")
    for op in (operator.add, operator.sub, operator.mul, operator.truediv):
        with pytest.raises(TypeError):
            op(a, other)
        with pytest.raises(TypeError):
            op(other, a)


def test_gmpy2_integers_are_exact_scalars():
    a = SQUARE_RING.gen("x")
    assert a * mpz(2) == a + a
    assert a + mpz(1) == a + 1
