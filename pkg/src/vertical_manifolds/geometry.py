"""The singular-value model and exact crossing words of polyline arcs.

The model is fixed: concentric circles of radius 1 (C1, inner cusped
circle), 2 (C2, outer cusped circle), 3 (D, definite folds) and 4 (the
boundary).  The branch cut is the segment 1 < x < 2 of the positive x-axis.

Crossing points of a rational segment with a circle have coordinates in
Q(sqrt(disc)); every predicate below reduces to the sign of an expression
u + v sqrt(D) (or a sum of two such surds) and is decided exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

__all__ = [
    "ArcDegeneracy",
    "Arc",
    "Event",
    "CrossingWord",
    "SurdPoint",
    "SingularModel",
    "MODEL",
    "crossing_word",
    "validate_arc",
    "parse_arc",
    "format_arc",
    "compare_along",
    "surd_sign",
    "two_surd_sign",
    "to_fraction",
]

Point = Tuple[Fraction, Fraction]


class ArcDegeneracy(ValueError):
    """The arc is not generic with respect to the model."""


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def surd_sign(u, v, disc) -> int:
    """Sign of u + v sqrt(disc) for rationals u, v and disc >= 0."""
    if disc == 0 or v == 0:
        return _sign(u)
    su, sv = _sign(u), _sign(v)
    if su == 0:
        return sv
    if su == sv:
        return su
    return su * _sign(u * u - v * v * disc)


def two_surd_sign(a, b, p, c, q) -> int:
    """Sign of a + b sqrt(p) + c sqrt(q)."""
    sx = surd_sign(a, b, p)
    sy = _sign(c) if q else 0
    if sy == 0:
        return sx
    if sx == 0 or sx == sy:
        return sy if sx == 0 else sx
    # opposite signs: compare squares
    return sx * surd_sign(a * a + b * b * p - c * c * q, 2 * a * b, p)


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("use exact rationals, not floats")
    return Fraction(value)


@dataclass(frozen=True)
class SurdPoint:
    """base + sign * sqrt(disc) * step, with rational base and step."""

    base: Point
    step: Point
    disc: Fraction
    sign: int

    def linear(self, ax, ay) -> Tuple[Fraction, Fraction]:
        """(u, v) with ax*x + ay*y = u + v sqrt(disc)."""
        u = ax * self.base[0] + ay * self.base[1]
        v = self.sign * (ax * self.step[0] + ay * self.step[1])
        return u, v

    def cross_sign(self, direction) -> int:
        """Sign of direction x self (positive when self is counter-clockwise
        of direction)."""
        dx, dy = direction
        return surd_sign(*self.linear(-dy, dx), self.disc)

    def approx(self) -> Tuple[float, float]:
        r = math.sqrt(self.disc) * self.sign
        return (
            float(self.base[0]) + r * float(self.step[0]),
            float(self.base[1]) + r * float(self.step[1]),
        )


def compare_along(p: SurdPoint, q: SurdPoint, axis) -> int:
    """Sign of axis x p - axis x q."""
    ax, ay = -axis[1], axis[0]
    u1, v1 = p.linear(ax, ay)
    u2, v2 = q.linear(ax, ay)
    if p.disc == q.disc:
        return surd_sign(u1 - u2, v1 - v2, p.disc)
    return two_surd_sign(u1 - u2, v1, p.disc, -v2, q.disc)


@dataclass(frozen=True)
class SingularModel:
    """Fixed model constants.  Cusp directions are listed counter-clockwise;
    edge i runs from cusp i to cusp i+1."""

    c1_radius: int = 1
    c2_radius: int = 2
    d_radius: int = 3
    boundary_radius: int = 4
    c2_cusps: Tuple[Tuple[int, int], ...] = ((1, 2), (-1, 0), (1, -2))
    c2_edges: Tuple[str, ...] = ("b", "c", "a")
    c1_cusps: Tuple[Tuple[int, int], ...] = ((0, 1), (-7, -4), (7, -4))
    c1_edges: Tuple[str, ...] = ("E1", "E2", "E0")
    # a direction inside each C1 edge, within 90 degrees of all its points
    c1_axes: Tuple[Tuple[str, Tuple[int, int]], ...] = (("E0", (2, 1)), ("E1", (-2, 1)), ("E2", (0, -1)))

    def radius_of(self, circle: str) -> int:
        return {"C1": self.c1_radius, "C2": self.c2_radius, "D": self.d_radius}[circle]

    def cusps(self, circle: str):
        return self.c1_cusps if circle == "C1" else self.c2_cusps

    def edges(self, circle: str):
        return self.c1_edges if circle == "C1" else self.c2_edges

    def axis(self, edge: str) -> Tuple[int, int]:
        return dict(self.c1_axes)[edge]

    def edge_cusps(self, circle: str, edge: str):
        """(start cusp, end cusp) of an edge, counter-clockwise."""
        cusps = self.cusps(circle)
        i = self.edges(circle).index(edge)
        return cusps[i], cusps[(i + 1) % len(cusps)]


MODEL = SingularModel()

_LEVEL = {"C1": 1, "C2": 2, "D": 3}
_LABELS = {("a", 1): "a2", ("a", -1): "a2p", ("b", 0): "b2", ("c", 0): "c2p"}


@dataclass(frozen=True)
class Event:
    """One transverse crossing of C1, C2 or D.

    ``winding`` is the net number of clockwise passes across the cut made
    before this crossing; ``side`` is the sign of y on edge e_a and 0
    elsewhere.
    """

    circle: str
    direction: str
    edge: Optional[str] = None
    side: int = 0
    winding: int = 0
    angle: float = field(default=0.0, compare=False)
    segment: int = field(default=-1, compare=False)
    point: Optional[SurdPoint] = field(default=None, compare=False, repr=False)

    @property
    def label(self) -> Optional[str]:
        """Direct vanishing-cycle label of a C2 crossing."""
        if self.circle != "C2":
            return None
        return _LABELS[(self.edge, self.side)]

    def shifted(self, amount: int) -> "Event":
        return Event(self.circle, self.direction, self.edge, self.side,
                     self.winding + amount, self.angle, self.segment, self.point)

    def as_dict(self) -> dict:
        out = {"circle": self.circle, "direction": self.direction}
        if self.edge is not None:
            out["edge"] = self.edge
        if self.circle == "C2" and self.edge == "a":
            out["side"] = self.side
        if self.circle != "D":
            out["winding"] = self.winding
        out["angle"] = round(self.angle, 3)
        return out

    def __str__(self):
        if self.circle == "D":
            return f"D-{self.direction}"
        if self.circle == "C2":
            name = f"e_{self.edge}" + ({1: "+", -1: "-"}.get(self.side, "") if self.edge == "a" else "")
        else:
            name = self.edge
        return f"{self.circle}({name},{self.direction},w={self.winding})"


@dataclass(frozen=True)
class CrossingWord:
    events: Tuple[Event, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))

    def __iter__(self):
        return iter(self.events)

    def __len__(self):
        return len(self.events)

    def count(self, circle: str) -> int:
        return sum(1 for e in self.events if e.circle == circle)

    def check_regions(self) -> None:
        """Consecutive events must respect region adjacency."""
        region = 3
        for e in self.events:
            level = _LEVEL[e.circle]
            if e.direction == "in":
                if region != level:
                    raise AssertionError(f"cannot cross {e.circle} inward from region {region}")
                region = level - 1
            else:
                if region != level - 1:
                    raise AssertionError(f"cannot cross {e.circle} outward from region {region}")
                region = level
        if region != 3:
            raise AssertionError("word does not end outside D")

    def as_list(self) -> List[dict]:
        return [e.as_dict() for e in self.events]

    def __str__(self):
        return "[" + ", ".join(str(e) for e in self.events) + "]"


@dataclass(frozen=True)
class Arc:
    vertices: Tuple[Point, ...]

    def __post_init__(self):
        pts = tuple((to_fraction(x), to_fraction(y)) for x, y in self.vertices)
        object.__setattr__(self, "vertices", pts)

    def reverse(self) -> "Arc":
        return Arc(tuple(reversed(self.vertices)))

    def __len__(self):
        return len(self.vertices)


def _orient(p, q, r) -> int:
    return _sign((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]))


def _on_segment(p, q, r) -> bool:
    """r collinear with p, q lies within their bounding box."""
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def _segments_meet(p1, p2, q1, q2) -> bool:
    o1, o2 = _orient(p1, p2, q1), _orient(p1, p2, q2)
    o3, o4 = _orient(q1, q2, p1), _orient(q1, q2, p2)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    return (
        (o1 == 0 and _on_segment(p1, p2, q1))
        or (o2 == 0 and _on_segment(p1, p2, q2))
        or (o3 == 0 and _on_segment(q1, q2, p1))
        or (o4 == 0 and _on_segment(q1, q2, p2))
    )


def validate_arc(arc: Arc, model: SingularModel = MODEL) -> None:
    pts = arc.vertices
    if len(pts) < 2:
        raise ArcDegeneracy("an arc needs at least two vertices")
    rb = model.boundary_radius ** 2
    for i in (0, len(pts) - 1):
        x, y = pts[i]
        if x * x + y * y != rb:
            raise ArcDegeneracy(f"endpoint vertex {i} {_fmt(pts[i])} is not on the boundary circle")
    radii = {model.radius_of(c) ** 2: c for c in ("C1", "C2", "D")}
    for i, (x, y) in enumerate(pts):
        r2 = x * x + y * y
        if 0 < i < len(pts) - 1 and r2 >= rb:
            raise ArcDegeneracy(f"vertex {i} {_fmt(pts[i])} is not inside the boundary circle")
        if r2 in radii:
            raise ArcDegeneracy(f"vertex {i} {_fmt(pts[i])} lies on {radii[r2]}")
        if y == 0 and model.c1_radius <= x <= model.c2_radius:
            raise ArcDegeneracy(f"vertex {i} {_fmt(pts[i])} lies on the branch cut")
        if i and pts[i] == pts[i - 1]:
            raise ArcDegeneracy(f"vertices {i - 1} and {i} coincide")
    _check_simple(pts)


def _check_simple(pts) -> None:
    segs = list(zip(pts, pts[1:]))
    boxes = [
        (min(p[0], q[0]), max(p[0], q[0]), min(p[1], q[1]), max(p[1], q[1]))
        for p, q in segs
    ]
    n = len(segs)
    for i in range(n):
        bi = boxes[i]
        for j in range(i + 1, n):
            bj = boxes[j]
            if bi[1] < bj[0] or bj[1] < bi[0] or bi[3] < bj[2] or bj[3] < bi[2]:
                continue
            p1, p2 = segs[i]
            q1, q2 = segs[j]
            if j == i + 1:
                # adjacent segments share p2 == q1; they may not fold back
                if _orient(p1, p2, q2) == 0 and _on_segment(p1, p2, q2) or (
                    _orient(q1, q2, p1) == 0 and _on_segment(q1, q2, p1)
                ):
                    raise ArcDegeneracy(f"segments {i} and {j} overlap")
                continue
            if _segments_meet(p1, p2, q1, q2):
                raise ArcDegeneracy(f"segments {i} and {j} intersect")


def _fmt(p) -> str:
    return f"({p[0]}, {p[1]})"


def _angle(point: SurdPoint) -> float:
    x, y = point.approx()
    return math.degrees(math.atan2(y, x)) % 360.0


def _classify_edge(model: SingularModel, circle: str, point: SurdPoint, where: str) -> str:
    cusps = model.cusps(circle)
    for u in cusps:
        if point.cross_sign(u) == 0 and surd_sign(*point.linear(*u), point.disc) > 0:
            raise ArcDegeneracy(f"{where} crosses {circle} at a cusp")
    for name, (start, end) in zip(model.edges(circle), zip(cusps, cusps[1:] + cusps[:1])):
        if point.cross_sign(start) > 0 and point.cross_sign(end) < 0:
            return name
    raise AssertionError("crossing point lies on no edge")


def _segment_events(model: SingularModel, index: int, a: Point, b: Point):
    """Events on one segment as (sort key, kind, payload) in traversal order."""
    where = f"segment {index} {_fmt(a)}-{_fmt(b)}"
    dx, dy = b[0] - a[0], b[1] - a[1]
    qa = dx * dx + dy * dy
    qb = a[0] * dx + a[1] * dy
    qc = a[0] * a[0] + a[1] * a[1]
    t_min = -qb / qa
    base = (a[0] + t_min * dx, a[1] + t_min * dy)
    step = (dx / qa, dy / qa)
    out = []
    for circle in ("C1", "C2", "D"):
        r2 = model.radius_of(circle) ** 2
        disc = qb * qb - qa * (qc - r2)
        if disc < 0:
            continue
        if disc == 0:
            if 0 <= t_min <= 1:
                raise ArcDegeneracy(f"{where} is tangent to {circle}")
            continue
        for sign in (-1, 1):
            inside = surd_sign(-qb, sign, disc) > 0 and surd_sign(-qb - qa, sign, disc) < 0
            if not inside:
                continue
            point = SurdPoint(base, step, disc, sign)
            edge = None
            side = 0
            if circle in ("C1", "C2"):
                edge = _classify_edge(model, circle, point, where)
                y_sign = surd_sign(*point.linear(0, 1), disc)
                x_sign = surd_sign(*point.linear(1, 0), disc)
                if y_sign == 0 and x_sign > 0:
                    raise ArcDegeneracy(f"{where} crosses {circle} on the branch cut")
                if circle == "C2" and edge == "a":
                    side = y_sign
            key = (sign, sign * r2)
            out.append((key, "circle", (circle, "in" if sign < 0 else "out", edge, side, point)))
    if dy != 0:
        t_cut = -a[1] / dy
        if 0 < t_cut < 1:
            x_cut = a[0] + t_cut * dx
            if x_cut in (model.c1_radius, model.c2_radius):
                raise ArcDegeneracy(f"{where} meets the end of the branch cut")
            if model.c1_radius < x_cut < model.c2_radius:
                side = _sign(t_cut - t_min)
                f_cut = (a[0] + t_cut * dx) ** 2
                out.append(((side, side * f_cut), "cut", 1 if dy < 0 else -1))
    elif a[1] == 0:
        lo, hi = sorted((a[0], b[0]))
        if hi > model.c1_radius and lo < model.c2_radius:
            raise ArcDegeneracy(f"{where} runs along the branch cut")
    out.sort(key=lambda item: item[0])
    return out


def crossing_word(arc: Arc, model: SingularModel = MODEL) -> CrossingWord:
    """Exact sequence of fold crossings along ``arc``."""
    validate_arc(arc, model)
    events: List[Event] = []
    winding = 0
    pts = arc.vertices
    for i in range(len(pts) - 1):
        for _, kind, payload in _segment_events(model, i, pts[i], pts[i + 1]):
            if kind == "cut":
                winding += payload
                continue
            circle, direction, edge, side, point = payload
            events.append(Event(circle, direction, edge, side, winding, _angle(point), i, point))
    word = CrossingWord(tuple(events))
    if word.count("D") > 2:
        raise ArcDegeneracy("the arc leaves the definite-fold disc and re-enters it")
    word.check_regions()
    return word


def parse_arc(text: str) -> Arc:
    """One vertex per line as two rationals ("3/2 -1/5"); '#' starts a
    comment."""
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two coordinates")
        try:
            pts.append((Fraction(parts[0]), Fraction(parts[1])))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return Arc(tuple(pts))


def format_arc(arc: Arc) -> str:
    return "".join(f"{x} {y}\n" for x, y in arc.vertices)
