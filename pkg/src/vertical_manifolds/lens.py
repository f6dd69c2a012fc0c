"""Oriented lens spaces and connected sums of them.

Text rendering is fixed: ``S3``, ``S1xS2``, ``L(p,q)``, with summands
joined by `` # ``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Tuple

from .torus import PrimitiveClass, solve_basis

__all__ = [
    "LensSpace",
    "ThreeManifold",
    "S3",
    "S1S2",
    "from_curve_pair",
    "mirror",
    "is_oriented_diffeo",
    "is_diffeo",
    "connected_sum",
    "equal",
    "parse_manifold",
]


@dataclass(frozen=True, order=True)
class LensSpace:
    """L(p, q) with p >= 0.

    Any coprime pair is accepted; L(-p, -q) is rewritten to L(p, q) and q is
    reduced mod p.  L(0, 1) is S1xS2 and L(1, 0) is S3.
    """

    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if gcd(p, q) != 1:
            raise ValueError(f"L({p},{q}): entries are not coprime")
        if p < 0:
            p, q = -p, -q
        if p == 0:
            q = 1
        elif p == 1:
            q = 0
        else:
            q %= p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_sphere(self) -> bool:
        return self.p == 1

    @property
    def is_s1s2(self) -> bool:
        return self.p == 0

    def mirror(self) -> "LensSpace":
        return LensSpace(self.p, -self.q)

    def canonical(self) -> "LensSpace":
        """Representative of the oriented class: q replaced by min(q, q^-1)."""
        if self.p < 2:
            return self
        return LensSpace(self.p, min(self.q, pow(self.q, -1, self.p)))

    def __str__(self):
        if self.p == 0:
            return "S1xS2"
        if self.p == 1:
            return "S3"
        return f"L({self.p},{self.q})"


def is_oriented_diffeo(l1: LensSpace, l2: LensSpace) -> bool:
    if l1.p != l2.p:
        return False
    if l1.p < 2:
        return True
    return l2.q in (l1.q, pow(l1.q, -1, l1.p))


def is_diffeo(l1: LensSpace, l2: LensSpace) -> bool:
    return is_oriented_diffeo(l1, l2) or is_oriented_diffeo(l1, l2.mirror())


def _summand_key(lens: LensSpace):
    return (-lens.p, lens.q)


@dataclass(frozen=True)
class ThreeManifold:
    """Connected-sum normal form: prime lens summands plus S1xS2 copies.

    Summands are stored as canonical oriented representatives, so dataclass
    equality is oriented diffeomorphism.
    """

    lens_summands: Tuple[LensSpace, ...] = ()
    s1s2_count: int = 0

    def __post_init__(self):
        lenses = []
        extra = 0
        for lens in self.lens_summands:
            if lens.p == 0:
                extra += 1
            elif lens.p >= 2:
                lenses.append(lens.canonical())
        if self.s1s2_count < 0:
            raise ValueError("negative S1xS2 count")
        object.__setattr__(self, "lens_summands", tuple(sorted(lenses, key=_summand_key)))
        object.__setattr__(self, "s1s2_count", int(self.s1s2_count) + extra)

    @classmethod
    def of(cls, *pieces) -> "ThreeManifold":
        """Connected sum of LensSpace and ThreeManifold arguments."""
        total = cls()
        for piece in pieces:
            if isinstance(piece, LensSpace):
                piece = cls((piece,))
            total = connected_sum(total, piece)
        return total

    @property
    def is_sphere(self) -> bool:
        return not self.lens_summands and self.s1s2_count == 0

    def summand_counts(self) -> Counter:
        return Counter(self.lens_summands)

    def mirror(self) -> "ThreeManifold":
        return ThreeManifold(tuple(l.mirror() for l in self.lens_summands), self.s1s2_count)

    def __str__(self):
        parts = [str(l) for l in self.lens_summands] + ["S1xS2"] * self.s1s2_count
        return " # ".join(parts) if parts else "S3"


S3 = ThreeManifold()
S1S2 = ThreeManifold((), 1)


def mirror(m):
    """Orientation reversal of a LensSpace or ThreeManifold."""
    return m.mirror()


def connected_sum(a: ThreeManifold, b: ThreeManifold) -> ThreeManifold:
    return ThreeManifold(a.lens_summands + b.lens_summands, a.s1s2_count + b.s1s2_count)


def equal(a: ThreeManifold, b: ThreeManifold) -> bool:
    """Match lens summands bijectively up to oriented diffeomorphism."""
    if a.s1s2_count != b.s1s2_count or len(a.lens_summands) != len(b.lens_summands):
        return False
    remaining = list(b.lens_summands)
    for lens in a.lens_summands:
        for i, other in enumerate(remaining):
            if is_oriented_diffeo(lens, other):
                del remaining[i]
                break
        else:
            return False
    return True


def from_curve_pair(alpha: PrimitiveClass, beta: PrimitiveClass) -> LensSpace:
    """Closed 3-manifold from T^2 x I with 2-handles along alpha x 0 and
    beta x 1, capped off.

    After moving alpha to (1, 0) by T, T beta = (b1, b2) and the result is
    L(b2, b1).  b2 is the intersection number and b1 is only defined mod b2,
    so the choice of T does not matter.
    """
    if not isinstance(alpha, PrimitiveClass):
        alpha = PrimitiveClass(*alpha)
    if not isinstance(beta, PrimitiveClass):
        beta = PrimitiveClass(*beta)
    b1, b2 = solve_basis(alpha).act(beta)
    return LensSpace(b2, b1)


_TOKEN = re.compile(r"^L\((-?\d+),(-?\d+)\)$")


def parse_manifold(text: str) -> ThreeManifold:
    """Inverse of ``str(ThreeManifold)``."""
    text = text.strip()
    pieces: Iterable[str] = [t.strip() for t in text.split("#")] if text else []
    lenses = []
    s1s2 = 0
    for token in pieces:
        token = token.replace(" ", "")
        if token == "S3":
            continue
        if token == "S1xS2":
            s1s2 += 1
            continue
        m = _TOKEN.match(token)
        if not m:
            raise ValueError(f"cannot parse summand {token!r}")
        lenses.append(LensSpace(int(m.group(1)), int(m.group(2))))
    return ThreeManifold(tuple(lenses), s1s2)
