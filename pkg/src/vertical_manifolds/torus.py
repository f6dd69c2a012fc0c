"""Homology classes and mapping classes of the torus fiber.

Curves are unoriented essential simple closed curves, stored as primitive
integer pairs with a canonical sign.  Mapping classes are SL(2, Z) matrices.
Python integers are unbounded, so nothing here can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Tuple

__all__ = [
    "PrimitiveClass",
    "MappingClass",
    "IDENTITY",
    "intersection",
    "twist_matrix",
    "apply",
    "compose",
    "invert",
    "power",
    "is_parallel",
    "solve_basis",
]


def _canonical_sign(p: int, q: int) -> Tuple[int, int]:
    if p < 0 or (p == 0 and q < 0):
        return -p, -q
    return p, q


@dataclass(frozen=True)
class PrimitiveClass:
    """Unoriented primitive class (p, q) in H_1(T^2; Z).

    The stored pair is the representative whose first nonzero coordinate
    is positive, so ``PrimitiveClass(-1, 3) == PrimitiveClass(1, -3)``.
    """

    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if gcd(p, q) != 1:
            raise ValueError(f"({p}, {q}) is not a primitive class")
        p, q = _canonical_sign(p, q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def of(cls, v: Iterable[int]) -> "PrimitiveClass":
        p, q = v
        return cls(p, q)

    @property
    def vector(self) -> Tuple[int, int]:
        return (self.p, self.q)

    def __iter__(self):
        return iter((self.p, self.q))

    def __str__(self):
        return f"({self.p},{self.q})"


@dataclass(frozen=True)
class MappingClass:
    """Orientation-preserving torus mapping class as a 2x2 matrix
    ``((a, b), (c, d))`` acting on column vectors."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self.rows} is not 1")

    @classmethod
    def from_rows(cls, rows) -> "MappingClass":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @property
    def rows(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    @property
    def trace(self) -> int:
        return self.a + self.d

    def act(self, v) -> Tuple[int, int]:
        """Matrix-vector product on a raw integer pair (no canonicalization)."""
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def __matmul__(self, other: "MappingClass") -> "MappingClass":
        return compose(self, other)

    def __call__(self, x: PrimitiveClass) -> PrimitiveClass:
        return apply(self, x)

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


IDENTITY = MappingClass(1, 0, 0, 1)


def intersection(x, y) -> int:
    """Algebraic intersection ``x1*y2 - x2*y1``.

    Accepts PrimitiveClass (canonical representative used) or raw pairs.
    """
    x1, x2 = x
    y1, y2 = y
    return x1 * y2 - x2 * y1


def twist_matrix(gamma: PrimitiveClass) -> MappingClass:
    """Right-handed Dehn twist along ``gamma``."""
    p, q = gamma
    return MappingClass(1 - p * q, p * p, -q * q, 1 + p * q)


def apply(m: MappingClass, x: PrimitiveClass) -> PrimitiveClass:
    return PrimitiveClass(*m.act(x))


def compose(m: MappingClass, n: MappingClass) -> MappingClass:
    """The product ``m n`` (apply ``n`` first)."""
    return MappingClass(
        m.a * n.a + m.b * n.c,
        m.a * n.b + m.b * n.d,
        m.c * n.a + m.d * n.c,
        m.c * n.b + m.d * n.d,
    )


def invert(m: MappingClass) -> MappingClass:
    return MappingClass(m.d, -m.b, -m.c, m.a)


def power(m: MappingClass, k: int) -> MappingClass:
    if k < 0:
        m, k = invert(m), -k
    result = IDENTITY
    base = m
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def is_parallel(x, y) -> bool:
    return intersection(x, y) == 0


def _bezout(p: int, q: int) -> Tuple[int, int]:
    """Return (a, b) with a*p + b*q == 1, where 0 <= a < |q| when q != 0."""
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_s, s = s, old_s - k * s
        old_t, t = t, old_t - k * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    if old_r != 1:
        raise ValueError(f"({p}, {q}) is not primitive")
    a, b = old_s, old_t
    if q != 0:
        # move along the solution line (a + t q, b - t p)
        t = (a % abs(q) - a) // q
        a, b = a + t * q, b - t * p
    else:
        a, b = p, 0  # p == +-1
    return a, b


def solve_basis(x: PrimitiveClass) -> MappingClass:
    """A mapping class T with ``T x = (1, 0)``.

    For x = (p, q) this is ``[[a, b], [-q, p]]`` with ``a p + b q = 1`` and
    ``0 <= a < |q|``, which makes the choice deterministic.
    """
    p, q = x
    a, b = _bezout(p, q)
    return MappingClass(a, b, -q, p)
