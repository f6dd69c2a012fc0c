"""Reduction of crossing words by cusp and bigon moves, splitting into
pieces, and evaluation of the vertical 3-manifold of an arc."""

from __future__ import annotations

import random
from typing import List, Optional, Tuple

from .geometry import (
    MODEL,
    Arc,
    CrossingWord,
    Event,
    SingularModel,
    compare_along,
    crossing_word,
    surd_sign,
)
from .lens import S3, ThreeManifold, connected_sum, from_curve_pair
from .torus import PrimitiveClass, power
from .trisection import TrisectionData

__all__ = ["reduce", "split", "evaluate", "decompose", "decompose_full", "cycle_at", "Decomposition"]


def _y_sign(e: Event) -> int:
    return surd_sign(*e.point.linear(0, 1), e.point.disc)


def _shared_cusp(model: SingularModel, e1: str, e2: str):
    s1, t1 = model.edge_cusps("C1", e1)
    s2, t2 = model.edge_cusps("C1", e2)
    if t1 == s2:
        return t1, "end"
    if s1 == t2:
        return s1, "start"
    raise AssertionError(f"edges {e1} and {e2} are not adjacent")


def _on_small_side(model: SingularModel, enter: Event, leave: Event, other: Event) -> bool:
    """Whether ``other`` lies on the arc of C1 that the move pushes across."""
    e1, e2 = enter.edge, leave.edge
    if e1 == e2:
        if other.edge != e1:
            return False
        axis = model.axis(e1)
        a = compare_along(other.point, enter.point, axis)
        b = compare_along(leave.point, other.point, axis)
        return a == b != 0
    _, where = _shared_cusp(model, e1, e2)
    if other.edge == e1:
        after = compare_along(other.point, enter.point, model.axis(e1)) > 0
        return after if where == "end" else not after
    if other.edge == e2:
        after = compare_along(other.point, leave.point, model.axis(e2)) > 0
        return not after if where == "end" else after
    return False


def _push_shift(enter: Event, leave: Event) -> int:
    """Change of winding caused by replacing the excursion into R0 by a path
    just outside C1 (clockwise passes across the cut count +1)."""
    e1, e2 = enter.edge, leave.edge
    y1, y2 = _y_sign(enter), _y_sign(leave)
    if e1 == e2 == "E0":
        if y1 < 0 < y2:
            return -1
        if y2 < 0 < y1:
            return 1
        return 0
    if (e1, e2) == ("E0", "E1"):
        return -1 if y1 < 0 else 0
    if (e1, e2) == ("E1", "E0"):
        return 1 if y2 < 0 else 0
    if (e1, e2) == ("E0", "E2"):
        return 1 if y1 > 0 else 0
    if (e1, e2) == ("E2", "E0"):
        return -1 if y2 > 0 else 0
    return 0


def _excursions(events: List[Event]) -> List[int]:
    return [
        i
        for i in range(len(events) - 1)
        if events[i].circle == "C1" and events[i].direction == "in" and events[i + 1].circle == "C1"
    ]


def reduce(
    word: CrossingWord,
    rng: Optional[random.Random] = None,
    model: SingularModel = MODEL,
) -> Tuple[CrossingWord, int]:
    """Remove every excursion into R0; returns the C1-free word and the
    number of bigon moves used.

    Innermost excursions are removed first, leftmost unless ``rng`` picks
    one at random.
    """
    events = list(word.events)
    bigons = 0
    while True:
        found = _excursions(events)
        if not found:
            break
        c1 = [e for e in events if e.circle == "C1"]
        innermost = [
            i
            for i in found
            if not any(
                _on_small_side(model, events[i], events[i + 1], e)
                for e in c1
                if e is not events[i] and e is not events[i + 1]
            )
        ]
        if not innermost:
            raise AssertionError("no innermost excursion into R0")
        i = rng.choice(innermost) if rng is not None else innermost[0]
        enter, leave = events[i], events[i + 1]
        if enter.edge == leave.edge:
            bigons += 1
        shift = _push_shift(enter, leave)
        events = events[:i] + [e.shifted(shift) for e in events[i + 2 :]]
    return CrossingWord(tuple(events)), bigons


def split(word: CrossingWord) -> List[CrossingWord]:
    """Cut a C1-free word along its excursions into A2 between C2 crossings;
    each piece is closed off across D."""
    if word.count("C1"):
        raise ValueError("split needs a word without C1 crossings")
    c2 = [e for e in word.events if e.circle == "C2"]
    if not c2:
        return [word]
    if len(c2) % 2:
        raise AssertionError("odd number of C2 crossings")
    d_in = next(e for e in word.events if e.circle == "D" and e.direction == "in")
    d_out = next(e for e in reversed(word.events) if e.circle == "D" and e.direction == "out")
    return [CrossingWord((d_in, c2[i], c2[i + 1], d_out)) for i in range(0, len(c2), 2)]


def cycle_at(event: Event, data: TrisectionData) -> PrimitiveClass:
    """Vanishing cycle of a C2 crossing: mu^w applied to the direct label."""
    m = power(data.mu.matrix(), event.winding)
    return PrimitiveClass(*m.act(data.label(event.label).vector))


def evaluate(piece: CrossingWord, data: TrisectionData) -> ThreeManifold:
    c2 = [e for e in piece.events if e.circle == "C2"]
    if not c2:
        return S3
    if len(c2) != 2:
        raise AssertionError(f"piece crosses C2 {len(c2)} times")
    return ThreeManifold.of(from_curve_pair(cycle_at(c2[0], data), cycle_at(c2[1], data)))


class Decomposition:
    """Everything computed on the way from an arc to its vertical manifold."""

    def __init__(self, word, reduced, bigons, pieces, values):
        self.word = word
        self.reduced = reduced
        self.bigons = bigons
        self.pieces = pieces
        self.values = values
        total = ThreeManifold((), bigons)
        for v in values:
            total = connected_sum(total, v)
        self.manifold = total


def decompose_full(
    arc: Arc,
    data: TrisectionData,
    rng: Optional[random.Random] = None,
    model: SingularModel = MODEL,
) -> Decomposition:
    word = crossing_word(arc, model)
    reduced, bigons = reduce(word, rng, model)
    pieces = split(reduced)
    values = [evaluate(p, data) for p in pieces]
    return Decomposition(word, reduced, bigons, pieces, values)


def decompose(
    arc: Arc,
    data: TrisectionData,
    rng: Optional[random.Random] = None,
    model: SingularModel = MODEL,
) -> ThreeManifold:
    return decompose_full(arc, data, rng, model).manifold
