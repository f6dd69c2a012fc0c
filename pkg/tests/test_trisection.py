import json
import random

import pytest

from vertical_manifolds.enumeration import enumerate_all, enumerate_case_a, enumerate_case_b
from vertical_manifolds.lens import S1S2, S3, LensSpace, ThreeManifold
from vertical_manifolds.records import (
    data_from_record,
    data_to_record,
    dumps,
    six_tuple_from_record,
    six_tuple_to_record,
)
from vertical_manifolds.torus import PrimitiveClass
from vertical_manifolds.trisection import (
    InvalidData,
    Monodromy,
    SixTuple,
    TrisectionData,
    build_case_A,
    build_case_B,
    build_identity,
    canonical,
    reflect,
    six_tuple,
    swap_labels,
    validate,
)


def P(p, q):
    return PrimitiveClass(p, q)


def L(p, q):
    return LensSpace(p, q)


class TestMonodromy:
    def test_matrices(self):
        assert Monodromy.identity().matrix().rows == ((1, 0), (0, 1))
        assert Monodromy.twist(P(1, 1), 1).matrix().rows == ((0, 1), (-1, 2))
        assert Monodromy.twist(P(1, 1), -1).matrix().rows == ((2, -1), (1, 0))
        assert Monodromy.fourth(P(1, 0), 1).matrix().rows == ((1, 4), (0, 1))
        assert Monodromy.fourth(P(1, 0), -1).matrix().rows == ((1, -4), (0, 1))

    def test_inverse(self):
        mu = Monodromy.fourth(P(2, 1), 1)
        assert mu.inverse().matrix() == Monodromy.fourth(P(2, 1), -1).matrix()


class TestValidate:
    def seed(self, c2p=(-1, 3), mu=None):
        mu = mu or Monodromy.twist(P(-1, 1), 1)
        return TrisectionData.from_direct(P(1, 0), P(0, 1), P(*c2p), mu)

    def test_case_a_seed_is_valid(self):
        assert validate(self.seed()) == []

    def test_cusp_violation(self):
        problems = validate(self.seed(c2p=(-2, 3)))
        assert any("|b2.c2p| = 2" in p for p in problems)

    def test_case_violation(self):
        problems = validate(self.seed(mu=Monodromy.fourth(P(1, 1), 1)))
        assert any(p.startswith("case:") for p in problems)

    def test_monodromy_violation(self):
        d = build_case_A(1, "P0", 4)
        bad = TrisectionData(d.a2, d.b2, d.c2, d.a2p, P(0, 1), d.c2p, d.mu)
        assert any(p.startswith("monodromy:") for p in validate(bad))

    def test_six_tuple_refuses_invalid(self):
        with pytest.raises(InvalidData) as info:
            six_tuple(self.seed(c2p=(-2, 3)))
        assert info.value.violations


class TestBuilders:
    def test_parallel_positive(self):
        d = build_case_A(1, "P0", 4)
        assert d.b2p == P(1, 0) and d.c2 == P(2, 1)
        assert d.a2p == P(0, 1)

    def test_parallel_negative(self):
        assert build_case_A(-1, "P0", 4).c2 == P(-6, -1)

    def test_second_twisted(self):
        d = build_case_A(1, "Pm2")
        assert d.b2p == P(9, -2) and d.c2 == P(5, -1)

    def test_degenerate_parameter(self):
        for sign in (1, -1):
            with pytest.raises(ValueError):
                build_case_A(sign, "P0", sign)

    def test_case_b(self):
        assert build_case_B(1, 1, 1).c2 == P(0, 1)
        d = build_case_B(4, 1, -1)
        assert d.b2p == P(4, 1) and d.c2 == P(-5, -1)
        d = build_case_B(4, -1, 1)
        assert d.b2p == P(-4, 1) and d.c2 == P(-5, 1)

    def test_all_generated_data_valid(self):
        for inst in enumerate_all():
            assert validate(inst.data) == [], inst.describe()


class TestSixTuple:
    def test_parallel_q4(self):
        got = six_tuple(build_case_A(1, "P0", 4))
        assert got == SixTuple.of(S3, S3, L(9, 4), S1S2, L(2, 1), L(4, 3))

    def test_identity(self):
        assert six_tuple(build_identity()) == SixTuple(S1S2, S1S2, S1S2, S3, S3, S3)

    def test_case_b_fourth(self):
        got = six_tuple(build_case_B(4, 1, -1))
        assert got == SixTuple.of(S1S2, L(4, 1), L(4, 1), S3, L(5, 1), S3)

    def test_text(self):
        t = SixTuple.of(S3, S3, L(9, 4), S1S2, L(2, 1), L(4, 3))
        assert str(t) == "(S3, S3, L(9,4); S1xS2, L(2,1), L(4,3))"
        assert t.table().splitlines()[0].startswith("( S3")


def random_tuple(rng):
    def entry():
        k = rng.randint(0, 2)
        pieces = []
        for _ in range(k):
            p = rng.randint(2, 15)
            q = rng.choice([r for r in range(1, p) if __import__("math").gcd(r, p) == 1])
            pieces.append(L(p, q))
        return ThreeManifold(tuple(pieces), rng.randint(0, 1))

    return SixTuple(*(entry() for _ in range(6)))


class TestReflection:
    def test_printed_example(self):
        t = SixTuple.of(S3, L(9, -2), L(4, -1), L(2, 1), L(5, -1), S3)
        assert reflect(t) == SixTuple.of(S3, L(4, 1), L(9, 2), S3, L(5, 1), L(2, 1))

    def test_involution_and_canonical(self):
        rng = random.Random(7)
        for _ in range(300):
            t = random_tuple(rng)
            assert reflect(reflect(t)) == t
            c = canonical(t)
            assert canonical(c) == c
            assert canonical(reflect(t)) == c
            assert c in (t, reflect(t))

    def test_swap_labels_reflects(self):
        for inst in enumerate_all(-8, 8):
            if inst.case == "Id":
                continue
            swapped = swap_labels(inst.data)
            assert validate(swapped) == []
            assert six_tuple(swapped) == reflect(six_tuple(inst.data)), inst.describe()


class TestClosedForms:
    def test_case_a(self):
        for inst in enumerate_case_a(-20, 20):
            assert canonical(six_tuple(inst.data)) == canonical(inst.closed_form), inst.describe()

    def test_case_b(self):
        # case B forms are stated up to reflection
        for inst in enumerate_case_b():
            assert canonical(six_tuple(inst.data)) == canonical(inst.closed_form), inst.describe()

    def test_entries_use_allowed_primes(self):
        for inst in enumerate_all(-20, 20):
            for entry in six_tuple(inst.data).entries:
                assert len(entry.lens_summands) + entry.s1s2_count <= 1


class TestRecords:
    def test_data_round_trip(self):
        for inst in enumerate_all(-5, 5):
            text = dumps(data_to_record(inst.data))
            back = data_from_record(json.loads(text))
            assert back == inst.data
            assert dumps(data_to_record(back)) == text

    def test_derived_cycles_optional(self):
        rec = {"a2": [1, 0], "b2": [0, 1], "c2p": [-1, 4], "monodromy": {"kind": "twist", "d": [-1, 1], "sign": 1}}
        assert data_from_record(rec) == build_case_A(1, "P0", 4)

    def test_bad_records(self):
        for rec in (
            {"a2": [1, 0], "b2": [0, 1], "monodromy": {"kind": "identity"}},
            {"a2": [1, 0], "b2": [0, 1], "c2p": [2, 2], "monodromy": {"kind": "identity"}},
            {"a2": [1, 0], "b2": [0, 1], "c2p": [-1, 1], "monodromy": {"kind": "spin"}},
            {"a2": [1, 0], "b2": [0, 1], "c2p": [-1, 1], "extra": 1, "monodromy": {"kind": "identity"}},
        ):
            with pytest.raises(ValueError):
                data_from_record(rec)

    def test_six_tuple_round_trip(self):
        rng = random.Random(2)
        for _ in range(100):
            t = random_tuple(rng)
            rec = six_tuple_to_record(t)
            assert six_tuple_from_record(json.loads(dumps(rec))) == t
