"""The three families of vertical 3-manifolds and a membership test.

A family member is

    #^{l+e1, l} A  #  #^{m, m+e2} B  #  #^n S1xS2

where #^{x, y} M is x copies of M and y copies of its mirror, e1, e2 are 0
or 1, and (A, B) is one of

    (L(k^2, k-1), L(k+s, s))   k any integer, s = +-1
    (L(9, 2), L(k, 1))         k in {2, 5}
    (L(4, 1), L(k, 1))         k in {3, 5}

The whole sum may be orientation-reversed.  The membership test also lets
the B block be mirrored on its own (``b_mirrored`` in the witness); without
that, L(9,2) # L(5,1) would not be a member.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from .lens import LensSpace, ThreeManifold

__all__ = ["Witness", "family_pairs", "known_families", "is_vertical_realizable"]


@dataclass(frozen=True)
class Witness:
    family: int
    k: int
    sign: int
    l: int
    eps1: int
    m: int
    eps2: int
    n: int
    orientation: int
    b_mirrored: bool = False

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "k": self.k,
            "sign": self.sign,
            "l": self.l,
            "eps1": self.eps1,
            "m": self.m,
            "eps2": self.eps2,
            "n": self.n,
            "orientation": self.orientation,
            "b_mirrored": self.b_mirrored,
        }

    def __str__(self):
        flip = ", B mirrored" if self.b_mirrored else ""
        return (
            f"family {self.family}, k={self.k}, sign={self.sign:+d}, l={self.l}, eps1={self.eps1}, "
            f"m={self.m}, eps2={self.eps2}, n={self.n}, orientation={self.orientation:+d}{flip}"
        )


def family_pairs(k_bound: int) -> Iterator[Tuple[int, int, int, LensSpace, LensSpace]]:
    """(family, k, sign, A, B) for every parameter choice; sign is only
    meaningful in the first family."""
    for k in sorted(range(-k_bound, k_bound + 1), key=lambda x: (abs(x), x < 0)):
        for s in (1, -1):
            yield 1, k, s, LensSpace(k * k, k - 1), LensSpace(k + s, s)
    for k in (2, 5):
        yield 2, k, 1, LensSpace(9, 2), LensSpace(k, 1)
    for k in (3, 5):
        yield 3, k, 1, LensSpace(4, 1), LensSpace(k, 1)


def _block(lens: LensSpace, copies: int, mirrors: int):
    if lens.p < 2:
        return ()
    return (lens,) * copies + (lens.mirror(),) * mirrors


def known_families(k_bound: int, count_bound: int) -> Iterator[Tuple[Witness, ThreeManifold]]:
    """Every member with |k| <= k_bound and l, m, n <= count_bound, in both
    orientations.  Duplicates are not removed."""
    if k_bound < 0 or count_bound < 0:
        raise ValueError("bounds must be nonnegative")
    rng = range(count_bound + 1)
    for family, k, s, a, b in family_pairs(k_bound):
        for l in rng:
            for e1 in (0, 1):
                for m in rng:
                    for e2 in (0, 1):
                        for n in rng:
                            base = ThreeManifold(_block(a, l + e1, l) + _block(b, m, m + e2), n)
                            for orientation in (1, -1):
                                w = Witness(family, k, s, l, e1, m, e2, n, orientation)
                                yield w, base if orientation == 1 else base.mirror()


def _split_counts(counts: Counter, lens: LensSpace) -> Tuple[int, int]:
    """(copies, mirror copies) of ``lens`` in ``counts``; an amphichiral
    class is reported as (total, 0)."""
    c = lens.canonical()
    mc = lens.mirror().canonical()
    if c == mc:
        return counts.get(c, 0), 0
    return counts.get(c, 0), counts.get(mc, 0)


def _fit(copies: int, mirrors: int, amphichiral: bool, heavier_mirror: bool) -> Optional[Tuple[int, int]]:
    """(base count, eps) for a block with copies/mirrors as observed."""
    if amphichiral:
        total = copies + mirrors
        return total // 2, total % 2
    if heavier_mirror:
        copies, mirrors = mirrors, copies
    diff = copies - mirrors
    if diff in (0, 1):
        return mirrors, diff
    return None


def is_vertical_realizable(
    manifold: ThreeManifold,
    k_bound: int = 50,
    count_bound: int = 5,
    allow_b_mirror: bool = True,
) -> Tuple[bool, Optional[Witness]]:
    """Search the three families within the bounds for ``manifold``."""
    n = manifold.s1s2_count
    if n > count_bound:
        return False, None
    counts = manifold.summand_counts()
    for family, k, s, a, b in family_pairs(k_bound):
        for orientation in (1, -1):
            oa = a if orientation == 1 else a.mirror()
            ob = b if orientation == 1 else b.mirror()
            used = set()
            fit_a: Tuple[int, int] = (0, 0)
            if oa.p >= 2:
                x, y = _split_counts(counts, oa)
                amph = oa.canonical() == oa.mirror().canonical()
                res = _fit(x, y, amph, heavier_mirror=False)
                if res is None:
                    continue
                fit_a = res
                used |= {oa.canonical(), oa.mirror().canonical()}
            flips = (False, True) if allow_b_mirror else (False,)
            for flip in flips:
                fit_b: Tuple[int, int] = (0, 0)
                used_b = set(used)
                if ob.p >= 2:
                    if ob.canonical() in used or ob.mirror().canonical() in used:
                        continue
                    x, y = _split_counts(counts, ob)
                    amph = ob.canonical() == ob.mirror().canonical()
                    if amph and flip:
                        continue
                    res = _fit(x, y, amph, heavier_mirror=not flip)
                    if res is None:
                        continue
                    fit_b = res
                    used_b |= {ob.canonical(), ob.mirror().canonical()}
                elif flip:
                    continue
                if any(c and lens not in used_b for lens, c in counts.items()):
                    continue
                (l, e1), (m, e2) = fit_a, fit_b
                if l > count_bound or m > count_bound:
                    continue
                return True, Witness(family, k, s, l, e1, m, e2, n, orientation, flip)
    return False, None
