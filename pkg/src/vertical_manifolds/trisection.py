"""Vanishing-cycle data of simplified (2,0)-trisection maps and the six
vertical 3-manifolds over the standard arcs.

Cycle names follow the reference-path picture on the genus-1 fiber between
the two cusped circles: ``a2``/``a2p`` sit on either side of the branch cut
through edge e_a, ``b2`` on e_b and ``c2p`` on e_c; the remaining three are
their images under the monodromy ``mu`` (a2 = mu(a2p), b2p = mu(b2),
c2 = mu(c2p)).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import List, Optional, Tuple

from .lens import S1S2, S3, ThreeManifold, from_curve_pair
from .torus import (
    IDENTITY,
    MappingClass,
    PrimitiveClass,
    intersection,
    invert,
    is_parallel,
    power,
    twist_matrix,
)

__all__ = [
    "Monodromy",
    "TrisectionData",
    "SixTuple",
    "InvalidData",
    "validate",
    "build_case_A",
    "build_case_B",
    "build_identity",
    "swap_labels",
    "curve_pair",
    "vertical",
    "six_tuple",
    "reflect",
    "canonical",
    "ARC_NAMES",
]

IDENTITY_KIND = "identity"
TWIST = "twist"
FOURTH = "fourth"


class InvalidData(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class Monodromy:
    """Monodromy around the loop between the cusped circles: the identity,
    t_d^sign or t_d^(4 sign)."""

    kind: str = IDENTITY_KIND
    d: Optional[PrimitiveClass] = None
    sign: int = 1

    def __post_init__(self):
        if self.kind not in (IDENTITY_KIND, TWIST, FOURTH):
            raise ValueError(f"unknown monodromy kind {self.kind!r}")
        if self.kind != IDENTITY_KIND:
            if self.d is None:
                raise ValueError("twist monodromy needs a curve d")
            if self.sign not in (1, -1):
                raise ValueError("sign must be +1 or -1")
            if not isinstance(self.d, PrimitiveClass):
                object.__setattr__(self, "d", PrimitiveClass(*self.d))

    @classmethod
    def identity(cls) -> "Monodromy":
        return cls()

    @classmethod
    def twist(cls, d, sign: int = 1) -> "Monodromy":
        return cls(TWIST, d, sign)

    @classmethod
    def fourth(cls, d, sign: int = 1) -> "Monodromy":
        return cls(FOURTH, d, sign)

    @property
    def exponent(self) -> int:
        if self.kind == IDENTITY_KIND:
            return 0
        return self.sign * (1 if self.kind == TWIST else 4)

    def matrix(self) -> MappingClass:
        if self.kind == IDENTITY_KIND:
            return IDENTITY
        return power(twist_matrix(self.d), self.exponent)

    def inverse(self) -> "Monodromy":
        return replace(self, sign=-self.sign) if self.kind != IDENTITY_KIND else self

    def __str__(self):
        if self.kind == IDENTITY_KIND:
            return "id"
        return f"t_{self.d}^{self.exponent}"


@dataclass(frozen=True)
class TrisectionData:
    a2: PrimitiveClass
    b2: PrimitiveClass
    c2: PrimitiveClass
    a2p: PrimitiveClass
    b2p: PrimitiveClass
    c2p: PrimitiveClass
    mu: Monodromy

    def __post_init__(self):
        for name in ("a2", "b2", "c2", "a2p", "b2p", "c2p"):
            v = getattr(self, name)
            if not isinstance(v, PrimitiveClass):
                object.__setattr__(self, name, PrimitiveClass(*v))

    @property
    def d_opt(self) -> Optional[PrimitiveClass]:
        return self.mu.d

    @classmethod
    def from_direct(cls, a2, b2, c2p, mu: Monodromy) -> "TrisectionData":
        """Derive the primed/unprimed partners from the direct labels."""
        m = mu.matrix()
        a2 = PrimitiveClass(*a2)
        b2 = PrimitiveClass(*b2)
        c2p = PrimitiveClass(*c2p)
        return cls(
            a2=a2,
            b2=b2,
            c2=PrimitiveClass(*m.act(c2p)),
            a2p=PrimitiveClass(*invert(m).act(a2)),
            b2p=PrimitiveClass(*m.act(b2)),
            c2p=c2p,
            mu=mu,
        )

    def label(self, name: str) -> PrimitiveClass:
        return getattr(self, name)


def validate(data: TrisectionData) -> List[str]:
    """Constraint violations; empty when the data is consistent."""
    out = []
    for x, y in (("a2", "b2"), ("b2", "c2p"), ("a2p", "c2p")):
        k = abs(intersection(data.label(x), data.label(y)))
        if k != 1:
            out.append(f"cusp: |{x}.{y}| = {k}, expected 1")
    m = data.mu.matrix()
    for img, src in (("a2", "a2p"), ("b2p", "b2"), ("c2", "c2p")):
        if PrimitiveClass(*m.act(data.label(src))) != data.label(img):
            out.append(f"monodromy: mu({src}) != {img}")
    mu = data.mu
    if mu.kind != IDENTITY_KIND:
        cycles = (data.a2, data.b2, data.c2)
        parallel = any(is_parallel(mu.d, c) for c in cycles)
        if mu.kind == FOURTH and not parallel:
            out.append(f"case: fourth-power twist but d={mu.d} is parallel to none of a2, b2, c2")
        if mu.kind == TWIST and not parallel and not any(abs(intersection(mu.d, c)) == 1 for c in cycles):
            out.append(f"case: d={mu.d} meets none of a2, b2, c2 once")
    return out


def build_case_A(sign: int, subcase: str, q: Optional[int] = None) -> TrisectionData:
    """Case (A) data with a2 = (1,0), b2 = (0,1), c2p = (-1, q), d = (r, 1)
    and mu = t_d^sign.

    ``subcase`` is "P0" (a2p parallel to b2, needs ``q``), "Pm1" or "Pm2"
    (a2p = (-1, *) and (-2, *)).  For P0 the integer ``q`` is the raw second
    coordinate of c2p; the closed-form family uses ``sign * q``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if subcase == "P0":
        if q is None:
            raise ValueError("P0 needs q")
        if q == sign:
            # c2p would be parallel to d: that is case (B)
            raise ValueError(f"P0 with q = {q} degenerates to case B")
        r, cq = -sign, q
    elif subcase == "Pm1":
        r, cq = -2 * sign, 2 * sign
    elif subcase == "Pm2":
        r, cq = -3 * sign, sign
    else:
        raise ValueError(f"unknown subcase {subcase!r}")
    mu = Monodromy.twist((r, 1), sign)
    return TrisectionData.from_direct((1, 0), (0, 1), (-1, cq), mu)


def build_case_B(power_: int, sign: int, eps2: int) -> TrisectionData:
    """Case (B): a2 = a2p = d = (1,0), b2 = (0,1), c2p = (-1, eps2)."""
    if power_ not in (1, 4) or sign not in (1, -1) or eps2 not in (1, -1):
        raise ValueError("need power in {1, 4}, sign and eps2 in {+1, -1}")
    mu = Monodromy(TWIST if power_ == 1 else FOURTH, PrimitiveClass(1, 0), sign)
    return TrisectionData.from_direct((1, 0), (0, 1), (-1, eps2), mu)


def build_identity() -> TrisectionData:
    return TrisectionData.from_direct((1, 0), (0, 1), (-1, 1), Monodromy.identity())


def swap_labels(data: TrisectionData) -> TrisectionData:
    """Relabel the data as seen after the orientation-reversing symmetry of
    the disc that exchanges e_b and e_c and fixes the cut.

    Its six-tuple is the reflection of the original one.
    """
    mu_new = data.mu.inverse()
    return TrisectionData.from_direct(data.a2p, data.c2p, data.b2, mu_new)


ARC_NAMES = ("aa", "bb", "cc", "ba", "cb", "ac")

# (first, second) cycle met along each standard arc, counter-clockwise
_PAIRS = {
    "aa": ("a2", "a2p"),
    "bb": ("b2p", "b2"),
    "cc": ("c2", "c2p"),
    "ba": ("b2", "a2p"),
    "cb": ("c2", "b2"),
    "ac": ("a2", "c2p"),
}


def curve_pair(data: TrisectionData, arc: str) -> Tuple[PrimitiveClass, PrimitiveClass]:
    x, y = _PAIRS[arc]
    return data.label(x), data.label(y)


def vertical(data: TrisectionData, arc: str) -> ThreeManifold:
    """Vertical 3-manifold over the standard arc gamma_<arc>."""
    return ThreeManifold((from_curve_pair(*curve_pair(data, arc)),))


@dataclass(frozen=True)
class SixTuple:
    v_aa: ThreeManifold
    v_bb: ThreeManifold
    v_cc: ThreeManifold
    v_ba: ThreeManifold
    v_cb: ThreeManifold
    v_ac: ThreeManifold

    @classmethod
    def of(cls, *entries) -> "SixTuple":
        """Build from LensSpace/ThreeManifold entries in row order."""
        return cls(*(ThreeManifold.of(e) for e in entries))

    @property
    def entries(self) -> Tuple[ThreeManifold, ...]:
        return (self.v_aa, self.v_bb, self.v_cc, self.v_ba, self.v_cb, self.v_ac)

    def key(self) -> str:
        return "|".join(str(e) for e in self.entries)

    def rows(self) -> Tuple[Tuple[str, str, str], Tuple[str, str, str]]:
        e = [str(x) for x in self.entries]
        return (tuple(e[:3]), tuple(e[3:]))

    def table(self) -> str:
        rows = self.rows()
        width = max(len(s) for r in rows for s in r)
        return "\n".join("( " + "  ".join(s.ljust(width) for s in r).rstrip() + " )" for r in rows)

    def __str__(self):
        top, bottom = self.rows()
        return f"({', '.join(top)}; {', '.join(bottom)})"


def six_tuple(data: TrisectionData) -> SixTuple:
    problems = validate(data)
    if problems:
        raise InvalidData(problems)
    if data.mu.kind == IDENTITY_KIND:
        return SixTuple(S1S2, S1S2, S1S2, S3, S3, S3)
    return SixTuple(*(vertical(data, name) for name in ARC_NAMES))


def reflect(t: SixTuple) -> SixTuple:
    """Image under the orientation-reversing symmetry of the disc."""
    return SixTuple(
        t.v_aa.mirror(),
        t.v_cc.mirror(),
        t.v_bb.mirror(),
        t.v_ac.mirror(),
        t.v_cb.mirror(),
        t.v_ba.mirror(),
    )


def canonical(t: SixTuple) -> SixTuple:
    r = reflect(t)
    return r if r.key() < t.key() else t
