"""Closed-form six-tuples of the two monodromy cases and identification of
the source 4-manifold from them.

Two routes are implemented: a table lookup on the six-tuple, and, for the
cases with a single twist along a curve meeting a once, the intersection
form of the reduced two-component framed link.  They must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .lens import S1S2, S3, LensSpace, ThreeManifold  # noqa: F401
from .surgery import CP2_CP2, CP2_CP2bar, CP2bar_CP2bar, S2xS2, hopf_pair_form
from .torus import intersection, invert, is_parallel
from .trisection import (
    IDENTITY_KIND,
    TWIST,
    SixTuple,
    TrisectionData,
    reflect,
    six_tuple,
    swap_labels,
)

__all__ = [
    "FourManifoldVerdict",
    "UnrecognizedTuple",
    "ConsistencyError",
    "TableRow",
    "case_a_parallel_tuple",
    "case_a_twisted_tuple",
    "case_b_single_tuple",
    "case_b_fourth_tuple",
    "identity_tuple",
    "match_table",
    "classify_by_table",
    "classify_by_form",
    "classify_four_manifold",
    "mirror_name",
]


class UnrecognizedTuple(ValueError):
    pass


class ConsistencyError(AssertionError):
    pass


_MIRROR = {
    S2xS2: S2xS2,
    CP2_CP2bar: CP2_CP2bar,
    CP2_CP2: CP2bar_CP2bar,
    CP2bar_CP2bar: CP2_CP2,
}


def mirror_name(name: str) -> str:
    return _MIRROR[name]


@dataclass(frozen=True)
class FourManifoldVerdict:
    """Either one closed 4-manifold or an unresolved pair of candidates."""

    names: Tuple[str, ...]

    def __post_init__(self):
        if len(self.names) not in (1, 2) or any(n not in _MIRROR for n in self.names):
            raise ValueError(f"bad verdict {self.names}")

    @classmethod
    def unique(cls, name: str) -> "FourManifoldVerdict":
        return cls((name,))

    @classmethod
    def pair(cls, first: str, second: str) -> "FourManifoldVerdict":
        return cls((first, second))

    @property
    def is_pair(self) -> bool:
        return len(self.names) == 2

    def mirror(self) -> "FourManifoldVerdict":
        return FourManifoldVerdict(tuple(sorted(mirror_name(n) for n in self.names)))

    def __str__(self):
        if self.is_pair:
            return f"Pair({self.names[0]}, {self.names[1]})"
        return self.names[0]


# closed forms


def _lens(p: int, q: int) -> ThreeManifold:
    return ThreeManifold((LensSpace(p, q),))


def case_a_parallel_tuple(q: int, eps: int) -> SixTuple:
    """a2p parallel to b2; q != 1."""
    if q == 1:
        raise ValueError("q = 1 is excluded")
    return SixTuple(
        S3, S3, _lens((q - 1) ** 2, q - 1 + eps),
        S1S2, _lens(q - 2, eps), _lens(q, -eps),
    )


def case_a_twisted_tuple(eps: int) -> SixTuple:
    return SixTuple(
        S3, _lens(9, 2 * eps), _lens(4, eps),
        _lens(2, 1), _lens(5, eps), S3,
    )


def case_b_single_tuple(eps: int) -> SixTuple:
    return SixTuple(S1S2, S3, S3, S3, _lens(1 + eps, 1), S3)


def case_b_fourth_tuple(eps: int) -> SixTuple:
    return SixTuple(S1S2, _lens(4, 1), _lens(4, 1), S3, _lens(4 + eps, 1), S3)


def identity_tuple() -> SixTuple:
    return SixTuple(S1S2, S1S2, S1S2, S3, S3, S3)


@dataclass(frozen=True)
class TableRow:
    """A row of the classification table: ``case`` is 1..5, ``params`` holds
    (q, eps) for case 1 and (eps,) otherwise."""

    case: int
    params: Tuple[int, ...]
    tuple: SixTuple
    verdict: FourManifoldVerdict


def _row_verdict(case: int, params) -> FourManifoldVerdict:
    if case == 1:
        q = params[0]
        return FourManifoldVerdict.unique(S2xS2 if q % 2 == 0 else CP2_CP2bar)
    if case == 2:
        return FourManifoldVerdict.unique(CP2_CP2 if params[0] == -1 else CP2bar_CP2bar)
    if case == 3:
        return FourManifoldVerdict.unique(CP2_CP2 if params[0] == 1 else CP2_CP2bar)
    if case == 4:
        return FourManifoldVerdict.unique(CP2_CP2bar)
    return FourManifoldVerdict.pair(CP2_CP2, CP2bar_CP2bar)


def _q_candidates(t: SixTuple) -> List[int]:
    out = []
    for entry in (t.v_ac, reflect(t).v_ac):
        if entry.s1s2_count:
            out.append(0)
        elif entry.is_sphere:
            out.append(-1)
        elif len(entry.lens_summands) == 1:
            p = entry.lens_summands[0].p
            out += [p, -p]
    return sorted(set(out) - {1})


def _rows(t: SixTuple) -> Iterator[TableRow]:
    for q in _q_candidates(t):
        for eps in (1, -1):
            yield TableRow(1, (q, eps), case_a_parallel_tuple(q, eps), _row_verdict(1, (q,)))
    for eps in (1, -1):
        yield TableRow(2, (eps,), case_a_twisted_tuple(eps), _row_verdict(2, (eps,)))
    for eps in (1, -1):
        yield TableRow(3, (eps,), case_b_fourth_tuple(eps), _row_verdict(3, (eps,)))
    yield TableRow(4, (-1,), case_b_single_tuple(-1), _row_verdict(4, ()))
    yield TableRow(5, (1,), case_b_single_tuple(1), _row_verdict(5, ()))


def match_table(t: SixTuple) -> Tuple[TableRow, bool]:
    """The table row matching ``t``, and whether it matched only after
    reflection."""
    r = reflect(t)
    for row in _rows(t):
        if row.tuple == t:
            return row, False
    for row in _rows(t):
        if row.tuple == r:
            return row, True
    raise UnrecognizedTuple(f"six-tuple {t} is in no classified family")


def classify_by_table(t: SixTuple) -> FourManifoldVerdict:
    """Table lookup.  A tuple that matches a row only after reflection
    comes from the orientation-reversed picture, so the verdict is
    mirrored."""
    row, reflected = match_table(t)
    return row.verdict.mirror() if reflected else row.verdict


def classify_by_form(data: TrisectionData) -> Optional[FourManifoldVerdict]:
    """Intersection form of the reduced framed link for a single twist
    along a curve that meets a2 once; None outside that case."""
    mu = data.mu
    if mu.kind != TWIST or is_parallel(mu.d, data.a2):
        return None
    if is_parallel(data.b2, data.a2p):
        framing = (
            intersection(data.a2, data.c2p)
            * intersection(data.a2, data.b2)
            * intersection(data.b2, data.c2p)
        )
        return FourManifoldVerdict.unique(hopf_pair_form(framing, 0))
    if is_parallel(data.a2, data.c2p):
        inner = classify_by_form(swap_labels(data))
        return inner.mirror() if inner is not None else None
    # a2p taken as the honest image of the oriented a2, so the product of
    # signs below does not depend on the chosen representatives
    a2p = invert(mu.matrix()).act(data.a2.vector)
    kappa = (
        intersection(data.a2, data.b2)
        * intersection(data.b2, data.c2p)
        * intersection(data.c2p, a2p)
    )
    return FourManifoldVerdict.unique(hopf_pair_form(kappa, 2 * kappa))


def classify_four_manifold(data: TrisectionData) -> FourManifoldVerdict:
    if data.mu.kind == IDENTITY_KIND:
        raise UnrecognizedTuple("identity monodromy is not in the classification table")
    t = six_tuple(data)
    verdict = classify_by_table(t)
    row, _ = match_table(t)
    if row.case in (1, 2):
        check = classify_by_form(data)
        if check is None:
            raise ConsistencyError(f"no framed-link form for case {row.case} data")
        if check != verdict:
            raise ConsistencyError(f"table gives {verdict}, intersection form gives {check}")
    return verdict
