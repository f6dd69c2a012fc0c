"""Fixed polylines for the standard arcs and generators of random generic
arcs.

Points are placed by angle on rational circles: an angle maps to the
rational point of the unit circle with parameter tan(angle/2), rounded, and
is then scaled by a rational radius.  Points at the same angle therefore lie
on one exact ray.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .geometry import Arc

__all__ = [
    "ray_point",
    "standard_arc",
    "STANDARD_ANGLES",
    "chord_in_a3",
    "chord_in_a2",
    "omega_two",
    "snake_arc",
    "connected_sum_template",
    "nested_pieces_template",
    "Line",
    "Gadget",
    "SnakeSpec",
    "random_spec",
    "with_extra_bigon",
    "random_arc",
    "template_names",
    "named_template",
]

OUTER = Fraction(4)
TURN = Fraction(5, 2)  # radius of U-turns in A2
PASS = Fraction(3, 2)  # radius of the single pass of a standard arc
STEP = 8.0  # maximal angular step of polyline approximations, degrees


def _unit(theta: float) -> Tuple[Fraction, Fraction]:
    theta = theta % 360.0
    if abs(theta - 180.0) < 1e-12:
        return Fraction(-1), Fraction(0)
    t = Fraction(math.tan(math.radians(theta) / 2)).limit_denominator(20000)
    d = 1 + t * t
    return (1 - t * t) / d, 2 * t / d


def ray_point(theta: float, radius) -> Tuple[Fraction, Fraction]:
    r = Fraction(radius)
    x, y = _unit(theta)
    return r * x, r * y


def _avoid_cut(theta: float) -> float:
    # keep vertices off the x-axis
    k = round(theta / 360.0)
    if abs(theta - 360.0 * k) < 0.25:
        return 360.0 * k + 0.5
    return theta


def _sweep(radius, start: float, end: float) -> List[Tuple[Fraction, Fraction]]:
    """Polyline along a circle from angle ``start`` to ``end`` (either
    direction), endpoints included."""
    n = max(1, math.ceil(abs(end - start) / STEP))
    pts = []
    for i in range(n + 1):
        theta = start + (end - start) * i / n
        if 0 < i < n:
            theta = _avoid_cut(theta)
        pts.append(ray_point(theta, radius))
    return pts


def _dedupe(pts):
    out = []
    for p in pts:
        if not out or out[-1] != p:
            out.append(p)
    return out


# entry and exit angles of the standard arcs, travelled counter-clockwise
STANDARD_ANGLES: Dict[str, Tuple[float, float]] = {
    "aa": (30.0, 330.0),
    "bb": (170.0, 433.0),
    "cc": (280.0, 560.0),
    "ba": (100.0, 330.0),
    "cb": (200.0, 440.0),
    "ac": (30.0, 250.0),
}


def _pass_arc(start: float, end: float, radius=PASS) -> Arc:
    pts = [ray_point(start, OUTER)] + _sweep(radius, start, end) + [ray_point(end, OUTER)]
    return Arc(tuple(_dedupe(pts)))


def standard_arc(name: str) -> Arc:
    """The arc gamma_<name> for name in aa, bb, cc, ba, cb, ac."""
    start, end = STANDARD_ANGLES[name]
    return _pass_arc(start, end)


def chord_in_a3(start: float = 10.0, end: float = 50.0) -> Arc:
    return Arc((ray_point(start, OUTER), ray_point(end, OUTER)))


def chord_in_a2(start: float = 10.0, end: float = 50.0) -> Arc:
    return _pass_arc(start, end, TURN)


def omega_two() -> Arc:
    """Short arc around the cusp of C2 between e_b and e_c."""
    return _pass_arc(170.0, 190.0)


@dataclass(frozen=True)
class Gadget:
    """Excursions into R0 from the lowest pass, at positions measured along
    the pass direction.  Two positions give one dip; four give a dip with a
    second one nested on its inner side."""

    positions: Tuple[float, ...]


@dataclass(frozen=True)
class Line:
    """One pass through A1 between legs at unrolled positions left < right."""

    left: float
    right: float
    forward: bool  # left to right, i.e. counter-clockwise


@dataclass(frozen=True)
class SnakeSpec:
    """A snake of passes, top (outermost) first; U-turns in A2 join
    consecutive passes and the two free ends run out to the boundary.

    Unrolled position x corresponds to angle base + x.
    """

    lines: Tuple[Line, ...]
    base: float = 240.0
    gadgets: Tuple[Gadget, ...] = ()
    empty_kind: str = "a3"  # arc used when there are no lines

    def radii(self) -> List[Fraction]:
        n = len(self.lines)
        return [2 - Fraction(k + 1, n + 1) for k in range(n)]


def _gadget_path(spec: SnakeSpec, radius: Fraction, start: float, end: float) -> List:
    """Pass of the lowest line from ``start`` to ``end`` with its gadgets."""
    ang = lambda x: spec.base + x  # noqa: E731
    forward = end > start
    low = Fraction(1, 2)
    mid_r0 = Fraction(3, 4)
    mid_a1 = (1 + radius) / 2
    gadgets = sorted(spec.gadgets, key=lambda g: g.positions[0], reverse=not forward)
    pts = []
    cur = start
    for g in gadgets:
        xs = g.positions
        pts += _sweep(radius, ang(cur), ang(xs[0]))
        if len(xs) == 2:
            pts.append(ray_point(ang(xs[0]), low))
            pts += _sweep(low, ang(xs[0]), ang(xs[1]))
            pts.append(ray_point(ang(xs[1]), radius))
            cur = xs[1]
        else:
            x1, x2, x3, x4 = xs
            pts += _sweep(low, ang(x1), ang(x4))
            pts += _sweep(mid_a1, ang(x4), ang(x3))
            pts += _sweep(mid_r0, ang(x3), ang(x2))
            pts.append(ray_point(ang(x2), radius))
            cur = x2
    pts += _sweep(radius, ang(cur), ang(end))
    return pts


def snake_arc(spec: SnakeSpec) -> Arc:
    if not spec.lines:
        if spec.empty_kind == "a2":
            return chord_in_a2(spec.base, spec.base + 40.0)
        return chord_in_a3(spec.base, spec.base + 40.0)
    ang = lambda x: spec.base + x  # noqa: E731
    radii = spec.radii()
    pts = []
    last = len(spec.lines) - 1
    for k, (line, r) in enumerate(zip(spec.lines, radii)):
        start, end = (line.left, line.right) if line.forward else (line.right, line.left)
        if k == 0:
            pts.append(ray_point(ang(start), OUTER))
        if k == last and spec.gadgets:
            pts += _gadget_path(spec, r, start, end)
        else:
            pts += _sweep(r, ang(start), ang(end))
        if k == last:
            pts.append(ray_point(ang(end), OUTER))
        else:
            nxt = spec.lines[k + 1]
            nstart = nxt.left if nxt.forward else nxt.right
            pts += _sweep(TURN, ang(end), ang(nstart))
    return Arc(tuple(_dedupe(pts)))


def connected_sum_template(r: int, s: int, base: float = 240.0) -> Arc:
    """r passes of type cc below s passes of type cb.

    The cc pass next to the cb block runs counter-clockwise and directions
    alternate, so there are ceil(r/2) counter-clockwise cc passes and
    ceil(s/2) clockwise cb passes.
    """
    if r < 0 or s < 0 or r + s == 0 or max(r, s) > 6:
        raise ValueError("need 0 <= r, s <= 6, not both zero")
    lines = []
    for i in range(s):
        t = s - 1 - i  # distance from the cc block
        lines.append(Line(52.0 - 2 * i, 190.0 + 4 * i, forward=t % 2 == 1))
    for j in range(r):
        lines.append(Line(30.0 - 2 * j, 320.0 + 3 * j, forward=j % 2 == 0))
    return snake_arc(SnakeSpec(tuple(lines), base))


def nested_pieces_template() -> Arc:
    """Three passes, the middle one nested inside the U-turns of the
    others; splits into three pieces."""
    lines = (Line(40.0, 200.0, True), Line(30.0, 210.0, False), Line(20.0, 220.0, True))
    return snake_arc(SnakeSpec(lines, 240.0))


_C1_CUSP_ANGLES = (90.0, math.degrees(math.atan2(-4, -7)) % 360, math.degrees(math.atan2(-4, 7)) % 360)


def _c1_edge(theta: float) -> str:
    theta %= 360.0
    a, b, c = _C1_CUSP_ANGLES
    if a < theta < b:
        return "E1"
    if b < theta < c:
        return "E2"
    return "E0"


def _near(theta: float, targets, margin: float) -> bool:
    return any(abs(((theta - t) + 180.0) % 360.0 - 180.0) < margin for t in targets)


_AVOID = (0.0, 63.435, 180.0, 296.565) + _C1_CUSP_ANGLES


def random_spec(rng: random.Random, max_lines: int = 4, max_gadgets: int = 2) -> SnakeSpec:
    """Random snake with up to ``max_lines`` passes and gadgets on the
    lowest pass."""
    n = rng.randint(0, max_lines)
    base = round(rng.uniform(0.0, 360.0), 1)
    if n == 0:
        return SnakeSpec((), base, (), rng.choice(("a2", "a3")))

    def pick(lo, hi, count):
        while True:
            xs = sorted(round(rng.uniform(lo, hi), 1) for _ in range(count))
            if all(b - a > 1.0 for a, b in zip(xs, xs[1:])) and not any(
                _near(base + x, _AVOID, 1.0) for x in xs
            ):
                return xs

    lefts = pick(4.0, 170.0, n)[::-1]
    rights = pick(190.0, 356.0, n)
    first = rng.random() < 0.5
    lines = tuple(Line(l, r, first if k % 2 == 0 else not first) for k, (l, r) in enumerate(zip(lefts, rights)))
    bottom = lines[-1]
    gadgets = []
    k = rng.randint(0, max_gadgets)
    if k:
        cuts = pick(bottom.left + 2.0, bottom.right - 2.0, 4 * k)
        for i in range(k):
            xs = cuts[4 * i : 4 * i + 4]
            if rng.random() < 0.5:
                xs = [xs[0], xs[3]]
            if not bottom.forward:
                xs = xs[::-1]
            gadgets.append(Gadget(tuple(xs)))
    return SnakeSpec(lines, base, tuple(gadgets))


def with_extra_bigon(spec: SnakeSpec, rng: random.Random) -> Optional[SnakeSpec]:
    """The same snake with one more small dip whose ends lie on a single
    edge of C1, or None if there is no room."""
    if not spec.lines:
        return None
    bottom = spec.lines[-1]
    taken = [(min(g.positions), max(g.positions)) for g in spec.gadgets]
    for _ in range(200):
        x = round(rng.uniform(bottom.left + 2.0, bottom.right - 4.0), 1)
        lo, hi = x, x + 1.5
        if any(not (hi + 0.5 < a or lo - 0.5 > b) for a, b in taken):
            continue
        t1, t2 = spec.base + lo, spec.base + hi
        if _near(t1, _AVOID, 1.0) or _near(t2, _AVOID, 1.0) or _c1_edge(t1) != _c1_edge(t2):
            continue
        if _near((t1 + t2) / 2, (0.0,) + _C1_CUSP_ANGLES, 1.5):
            continue
        pos = (lo, hi) if bottom.forward else (hi, lo)
        return replace(spec, gadgets=spec.gadgets + (Gadget(pos),))
    return None


def random_arc(rng: random.Random, **kwargs) -> Arc:
    return snake_arc(random_spec(rng, **kwargs))


def template_names() -> List[str]:
    return [f"gamma_{n}" for n in STANDARD_ANGLES] + ["chord_a3", "chord_a2", "omega2", "nested3"]


def named_template(name: str) -> Arc:
    """Look up a template by name; ``sum_R_S`` gives the connected-sum
    snake with r = R and s = S."""
    if name.startswith("gamma_"):
        return standard_arc(name[len("gamma_") :])
    if name == "chord_a3":
        return chord_in_a3()
    if name == "chord_a2":
        return chord_in_a2()
    if name == "omega2":
        return omega_two()
    if name == "nested3":
        return nested_pieces_template()
    if name.startswith("sum_"):
        parts = name.split("_")
        if len(parts) == 3:
            return connected_sum_template(int(parts[1]), int(parts[2]))
    raise KeyError(f"unknown template {name!r}")
