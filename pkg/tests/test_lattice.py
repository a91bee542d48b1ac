import math

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from lattice import (
    IntMatrix2,
    LatticeKind,
    LatticePoint,
    NotUnimodular,
    ZeroMatrix,
    grid_points,
    mat_apply,
    mat_det,
    mat_inverse,
    mat_is_positive_definite,
    mat_mul,
    mat_primitive,
    point_cartesian,
    point_float,
    point_to_elem,
    standard_ring,
)
from tests.strategies import lattice_points

entries = st.integers(min_value=-50, max_value=50)
matrices = st.builds(IntMatrix2, entries, entries, entries, entries)


class TestPoints:
    def test_grid_size_and_order(self):
        points = list(grid_points(LatticeKind.SQUARE, 2))
        assert len(points) == 25
        assert points[0] == LatticePoint(-2, -2)
        assert points[1] == LatticePoint(-2, -1)
        assert points[-1] == LatticePoint(2, 2)

    def test_point_float_triangular(self):
        x, y = point_float(LatticePoint(0, 1, LatticeKind.TRIANGULAR))
        assert x == -0.5
        assert math.isclose(y, math.sqrt(3) / 2)

    @given(lattice_points(LatticeKind.TRIANGULAR))
    def test_cartesian_matches_embedding(self, p):
        ring = standard_ring(LatticeKind.TRIANGULAR)
        x, y = point_cartesian(p, ring)
        z = point_to_elem(p, ring)
        assert x + y * ring.complex_unit() == z

    @pytest.mark.parametrize("m, n, x, y", [(0, 2, -1, 1), (1, 1, mpq(1, 2), mpq(1, 2)), (2, 0, 2, 0)])
    def test_cartesian_triangular_examples(self, m, n, x, y):
        # y is the coefficient of sqrt3
        ring = standard_ring(LatticeKind.TRIANGULAR)
        X, Y = point_cartesian(LatticePoint(m, n, LatticeKind.TRIANGULAR), ring)
        assert X == ring.constant(x)
        assert Y == ring.gen("sqrt3") * y

    @given(lattice_points(LatticeKind.SQUARE), lattice_points(LatticeKind.SQUARE))
    def test_addition_is_additive_in_ring(self, p, q):
        assert point_to_elem(p + q) == point_to_elem(p) + point_to_elem(q)

    def test_mixed_kinds_do_not_add(self):
        with pytest.raises(ValueError):
            LatticePoint(1, 0) + LatticePoint(1, 0, LatticeKind.TRIANGULAR)


class TestMatrix:
    def test_primitive(self):
        g, M = mat_primitive(IntMatrix2(2, -2, -2, 6))
        assert g == 2
        assert M == IntMatrix2(1, -1, -1, 3)

    def test_zero_matrix(self):
        with pytest.raises(ZeroMatrix):
            mat_primitive(IntMatrix2(0, 0, 0, 0))

    def test_apply_uses_columns(self):
        M = IntMatrix2.from_columns((0, -1), (1, 4))
        assert M.rows() == ((0, 1), (-1, 4))
        assert mat_apply(M, LatticePoint(1, 0)) == LatticePoint(0, -1)
        assert mat_apply(M, LatticePoint(0, 1)) == LatticePoint(1, 4)

    @settings(max_examples=500)
    @given(matrices, matrices)
    def test_det_is_multiplicative(self, M, N):
        assert mat_det(M @ N) == mat_det(M) * mat_det(N)

    @given(matrices, matrices, lattice_points(LatticeKind.SQUARE, 100))
    def test_apply_composes(self, M, N, p):
        assert mat_apply(mat_mul(M, N), p) == mat_apply(M, mat_apply(N, p))

    def test_inverse(self):
        M = IntMatrix2(0, 1, -1, 4)
        assert M @ mat_inverse(M) == IntMatrix2.identity()
        with pytest.raises(NotUnimodular):
            mat_inverse(IntMatrix2(1, -1, -1, 3))

    def test_positive_definite(self):
        assert mat_is_positive_definite(IntMatrix2(1, -1, -1, 3))
        assert not mat_is_positive_definite(IntMatrix2(0, 1, -1, 4))
        assert str(IntMatrix2(2, -3, -3, 11)) == "[[2,-3],[-3,11]]"
