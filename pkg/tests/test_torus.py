import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import mapping_classes, primitive_classes
from vertical_manifolds.torus import (
    IDENTITY,
    MappingClass,
    PrimitiveClass,
    apply,
    compose,
    intersection,
    invert,
    is_parallel,
    power,
    solve_basis,
    twist_matrix,
)


def P(p, q):
    return PrimitiveClass(p, q)


def det(m: MappingClass) -> int:
    return m.a * m.d - m.b * m.c


class TestPrimitiveClass:
    def test_canonical_sign(self):
        assert P(-1, 3) == P(1, -3)
        assert P(0, -1).vector == (0, 1)

    def test_rejects_non_primitive(self):
        with pytest.raises(ValueError):
            P(2, 4)
        with pytest.raises(ValueError):
            P(0, 0)

    def test_mapping_class_requires_det_one(self):
        with pytest.raises(ValueError):
            MappingClass(2, 0, 0, 1)


class TestIntersection:
    def test_unit_basis(self):
        assert intersection(P(1, 0), P(0, 1)) == 1

    def test_pq_plus_one_instance(self):
        # (p, 1) . (-1, q) = pq + 1 with p = 0, q = 3
        assert intersection((0, 1), (-1, 3)) == 1

    def test_hand_determinant(self):
        assert intersection((2, 1), (-1, 4)) == 2 * 4 - 1 * (-1) == 9


class TestTwistMatrix:
    def test_diagonal_class(self):
        assert twist_matrix(P(1, 1)).rows == ((0, 1), (-1, 2))

    def test_first_basis_class(self):
        assert twist_matrix(P(1, 0)).rows == ((1, 1), (0, 1))

    def test_second_basis_class(self):
        assert twist_matrix(P(0, 1)).rows == ((1, 0), (-1, 1))

    @settings(max_examples=1000)
    @given(primitive_classes(10**4))
    def test_det_trace_fix(self, g):
        t = twist_matrix(g)
        assert det(t) == 1
        assert t.trace == 2
        assert t.act(g.vector) == g.vector

    @settings(max_examples=1000)
    @given(primitive_classes(200), st.tuples(st.integers(-200, 200), st.integers(-200, 200)))
    def test_picard_lefschetz(self, g, x):
        k = intersection(x, g)
        assert twist_matrix(g).act(x) == (x[0] - k * g.p, x[1] - k * g.q)

    @settings(max_examples=1000)
    @given(mapping_classes(), primitive_classes(40))
    def test_conjugation_equivariance(self, m, g):
        lhs = compose(compose(m, twist_matrix(g)), invert(m))
        assert lhs == twist_matrix(apply(m, g))


class TestApply:
    def test_twist_on_second_basis(self):
        assert apply(twist_matrix(P(1, 1)), P(0, 1)) == P(1, 2)

    def test_identity(self):
        assert apply(IDENTITY, P(3, 5)) == P(3, 5)

    def test_matrix_from_case_a(self):
        assert apply(MappingClass(4, 9, -1, -2), P(-1, 1)) == P(5, -1)


class TestPower:
    def test_fourth_power(self):
        assert power(twist_matrix(P(1, 0)), 4).rows == ((1, 4), (0, 1))

    @settings(max_examples=200)
    @given(primitive_classes())
    def test_inverse_cancels(self, g):
        assert compose(invert(twist_matrix(g)), twist_matrix(g)) == IDENTITY

    def test_negative_power_is_inverse(self):
        rng = random.Random(5)
        for _ in range(100):
            m = IDENTITY
            for _ in range(rng.randint(1, 6)):
                m = compose(m, power(twist_matrix(P(*rng.choice([(1, 0), (0, 1), (1, 1), (2, 1)]))), rng.choice([-1, 1])))
            assert power(m, -1) == invert(m)
            assert compose(power(m, -3), power(m, 3)) == IDENTITY

    def test_zero_power(self):
        assert power(twist_matrix(P(2, 3)), 0) == IDENTITY


class TestParallel:
    def test_same(self):
        assert is_parallel(P(0, 1), P(0, 1))

    def test_opposite_orientation(self):
        assert is_parallel((0, 1), (0, -1))

    def test_not_parallel(self):
        assert not is_parallel(P(1, 0), P(-1, 3))


class TestSolveBasis:
    @staticmethod
    def check(x, t):
        assert det(t) == 1
        assert t.act(x.vector) == (1, 0)

    def test_basis_vector(self):
        assert solve_basis(P(1, 0)) == IDENTITY

    def test_examples(self):
        for x, rows in [((2, 1), ((0, 1), (-1, 2))), ((3, 1), ((0, 1), (-1, 3)))]:
            t = solve_basis(P(*x))
            self.check(P(*x), t)
            assert t.rows == rows

    @settings(max_examples=1000)
    @given(primitive_classes(10**6))
    def test_postcondition_large(self, x):
        t = solve_basis(x)
        self.check(x, t)
        # minimal nonnegative Bezout coefficient
        if x.q != 0:
            assert 0 <= t.a < abs(x.q)
