from vertical_manifolds.families import Witness, family_pairs, is_vertical_realizable, known_families
from vertical_manifolds.lens import S3, LensSpace, ThreeManifold


def M(*lenses, s1s2=0):
    return ThreeManifold(tuple(lenses), s1s2)


def L(p, q):
    return LensSpace(p, q)


class TestMembership:
    def test_sporadic_member(self):
        ok, w = is_vertical_realizable(M(L(9, 2), L(5, 1)))
        assert ok and w.family == 2 and w.k == 5

    def test_sphere(self):
        ok, w = is_vertical_realizable(S3)
        assert ok and (w.l, w.eps1, w.m, w.eps2, w.n) == (0, 0, 0, 0, 0)

    def test_negative_witness(self):
        ok, w = is_vertical_realizable(M(L(9, 2), L(3, 1)), k_bound=50, count_bound=5)
        assert not ok and w is None

    def test_strict_reading_rejects_sporadic_orientation(self):
        ok, _ = is_vertical_realizable(M(L(9, 2), L(5, 1)), allow_b_mirror=False)
        assert not ok

    def test_first_family(self):
        # k = 4: L(16,3) with one copy, L(5,1) block with m = 1, eps2 = 0
        m = M(L(16, 3), L(5, 1), L(5, -1), s1s2=2)
        ok, w = is_vertical_realizable(m)
        assert ok and w.family == 1 and abs(w.k) == 4 and w.n == 2

    def test_s1s2_bound(self):
        assert not is_vertical_realizable(M(s1s2=6), count_bound=5)[0]
        assert is_vertical_realizable(M(s1s2=5), count_bound=5)[0]

    def test_mirror_closed(self):
        m = M(L(9, 2), L(9, 2), L(9, 7), L(4, 1))
        assert is_vertical_realizable(m)[0] == is_vertical_realizable(m.mirror())[0]

    def test_generated_members_accepted(self):
        seen = 0
        for w, m in known_families(4, 2):
            ok, found = is_vertical_realizable(m, 4, 2, allow_b_mirror=False)
            assert ok, (w, m)
            seen += 1
        assert seen > 1000

    def test_witness_record(self):
        w = Witness(1, 3, 1, 0, 1, 0, 0, 0, 1)
        assert w.as_dict()["k"] == 3 and "family 1" in str(w)


def test_family_pairs_cover_sporadic():
    sporadic = {(f, k) for f, k, _, _, _ in family_pairs(0) if f > 1}
    assert sporadic == {(2, 2), (2, 5), (3, 3), (3, 5)}
