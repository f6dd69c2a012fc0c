import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import mapping_classes, primitive_classes
from vertical_manifolds.lens import (
    S1S2,
    S3,
    LensSpace,
    ThreeManifold,
    connected_sum,
    equal,
    from_curve_pair,
    is_diffeo,
    is_oriented_diffeo,
    mirror,
    parse_manifold,
)
from vertical_manifolds.torus import apply, intersection


def L(p, q):
    return LensSpace(p, q)


def M(*lenses, s1s2=0):
    return ThreeManifold(tuple(lenses), s1s2)


class TestNormalization:
    def test_special_values(self):
        assert L(0, -1) == L(0, 1)
        assert L(1, 7) == L(1, 0)
        assert str(L(0, 1)) == "S1xS2" and str(L(1, 0)) == "S3"

    def test_negative_p(self):
        assert L(-9, 2) == L(9, -2) == L(9, 7)

    def test_reduction(self):
        assert L(5, 12) == L(5, 2)

    def test_not_coprime(self):
        with pytest.raises(ValueError):
            L(4, 2)

    def test_three_manifold_drops_spheres(self):
        assert M(L(1, 0)) == S3
        assert M(L(0, 1)) == S1S2


class TestFromCurvePair:
    def test_lens_of_case_a_pair(self):
        assert from_curve_pair((1, 0), (-1, 3)) == L(3, -1) == L(3, 2)

    def test_parallel_pair(self):
        assert from_curve_pair((0, 1), (0, 1)).is_s1s2
        assert from_curve_pair((0, 1), (0, -1)).is_s1s2

    def test_q4_pair(self):
        assert from_curve_pair((2, 1), (-1, 4)) == L(9, 4)

    @pytest.mark.parametrize("s", [1, -1])
    def test_pm2_pair(self, s):
        got = from_curve_pair((5, -s), (-1, 2 * s))
        assert is_oriented_diffeo(got, L(9 * s, -2))

    def test_validation_set(self):
        for q in range(3, 9):
            assert from_curve_pair((1, 0), (-1, q)) == L(q, -1)
            assert from_curve_pair((q - 2, 1), (0, 1)) == L(q - 2, 1)
            assert is_oriented_diffeo(from_curve_pair((q - 2, 1), (-1, q)), L((q - 1) ** 2, q))
        for s in (1, -1):
            assert is_oriented_diffeo(from_curve_pair((4 * s, 1), (0, 1)), L(4 * s, 1))
            for e2 in (1, -1):
                c2 = (-1 + 4 * s * e2, e2)
                assert is_oriented_diffeo(from_curve_pair(c2, (0, 1)), L(4 * s - e2, 1))

    @settings(max_examples=1000)
    @given(primitive_classes(), primitive_classes())
    def test_reversal_is_mirror(self, x, y):
        assert is_oriented_diffeo(from_curve_pair(y, x), mirror(from_curve_pair(x, y)))

    @settings(max_examples=300)
    @given(mapping_classes(), primitive_classes(30), primitive_classes(30))
    def test_mapping_class_invariance(self, m, x, y):
        assert from_curve_pair(apply(m, x), apply(m, y)) == from_curve_pair(x, y)

    @settings(max_examples=300)
    @given(primitive_classes(), primitive_classes())
    def test_order_is_intersection(self, x, y):
        k = abs(intersection(x, y))
        lens = from_curve_pair(x, y)
        if k == 0:
            assert lens.is_s1s2
        elif k == 1:
            assert lens.is_sphere
        else:
            assert lens.p == k


class TestMirror:
    def test_examples(self):
        assert mirror(L(9, 2)) == L(9, 7)
        assert mirror(S1S2) == S1S2
        assert mirror(L(2, 1)) == L(2, 1)

    @given(st.integers(2, 200), st.integers(-500, 500))
    def test_involution(self, p, q):
        if gcd(p, q) == 1:
            assert mirror(mirror(L(p, q))) == L(p, q)


class TestDiffeo:
    def test_inverse_residue(self):
        assert is_oriented_diffeo(L(7, 2), L(7, 4))
        assert is_oriented_diffeo(L(9, 4), L(9, 7))

    def test_unrelated(self):
        assert not is_diffeo(L(5, 1), L(5, 2))

    def test_mirror_only(self):
        assert not is_oriented_diffeo(L(9, 2), L(9, 7))
        assert is_diffeo(L(9, 2), L(9, 7))

    def test_equivalence_relation_on_sample(self):
        rng = random.Random(11)
        sample = []
        for _ in range(40):
            p = rng.randint(2, 40)
            q = rng.choice([r for r in range(1, p) if gcd(r, p) == 1])
            for lens in (L(p, q), L(p, pow(q, -1, p))):
                sample += [lens, lens.mirror()]
        for a in sample:
            assert is_oriented_diffeo(a, a)
            for b in sample:
                assert is_oriented_diffeo(a, b) == is_oriented_diffeo(b, a)
                if is_oriented_diffeo(a, b):
                    for c in sample:
                        if is_oriented_diffeo(b, c):
                            assert is_oriented_diffeo(a, c)


class TestConnectedSum:
    def test_identity(self):
        assert connected_sum(S3, M(L(9, 2))) == M(L(9, 2))

    def test_two_lenses(self):
        total = connected_sum(M(L(4, 1)), M(L(3, 1)))
        assert sorted(total.lens_summands) == [L(3, 1), L(4, 1)]

    def test_s1s2_counts_add(self):
        assert connected_sum(S1S2, S1S2).s1s2_count == 2

    def test_commutative_associative(self):
        a, b, c = M(L(5, 2)), M(L(7, 3), s1s2=1), M(L(2, 1))
        assert connected_sum(a, b) == connected_sum(b, a)
        assert connected_sum(connected_sum(a, b), c) == connected_sum(a, connected_sum(b, c))


class TestEqual:
    def test_examples(self):
        assert equal(M(L(9, 4)), M(L(9, 7)))
        assert not equal(M(L(9, 2)), M(L(9, 7)))
        assert equal(S3, S3)

    def test_agrees_with_normal_form(self):
        rng = random.Random(3)
        for _ in range(200):
            pieces = []
            for _ in range(rng.randint(0, 3)):
                p = rng.randint(2, 12)
                pieces.append(L(p, rng.choice([r for r in range(1, p) if gcd(r, p) == 1])))
            a = M(*pieces, s1s2=rng.randint(0, 1))
            b = M(*[L(l.p, pow(l.q, -1, l.p)) for l in pieces], s1s2=a.s1s2_count)
            assert equal(a, b) and a == b


class TestText:
    def test_rendering(self):
        assert str(S3) == "S3"
        assert str(M(L(9, 2), L(5, 1), s1s2=1)) == "L(9,2) # L(5,1) # S1xS2"

    def test_parse_round_trip(self):
        for text in ["S3", "S1xS2", "L(9,2) # L(5,1) # S1xS2", "L(4,1) # L(4,1)"]:
            assert str(parse_manifold(text)) == text

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_manifold("L(9,2) # T3")
