"""Surgery presentations on two-component links, their homology, and the
intersection forms used to name closed 4-manifolds.

Distinctness of surgered manifolds is only witnessed at the level of H_1;
hyperbolicity is not certified here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import List, Optional, Sequence, Tuple

__all__ = [
    "AbelianGroup",
    "SurgeryPresentation",
    "DoubleForm",
    "FamilyReport",
    "smith_normal_form",
    "homology",
    "distinguish_family",
    "classify_double",
    "hopf_pair_form",
    "form_signature",
    "HYPERBOLICITY_NOTE",
    "S2xS2",
    "CP2_CP2bar",
    "CP2_CP2",
    "CP2bar_CP2bar",
    "DOUBLE_EVEN",
    "DOUBLE_ODD",
]

S2xS2 = "S2xS2"
CP2_CP2bar = "CP2#CP2bar"
CP2_CP2 = "CP2#CP2"
CP2bar_CP2bar = "CP2bar#CP2bar"
DOUBLE_EVEN = "#2 S2xS2"
DOUBLE_ODD = "#2 CP2 # 2 CP2bar"

HYPERBOLICITY_NOTE = (
    "hyperbolicity not certified; distinctness is shown by first homology only"
)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group by invariant factors d1 | d2 | ...

    Factors equal to 1 are dropped; 0 stands for a copy of Z and sorts last.
    """

    factors: Tuple[int, ...]

    def __post_init__(self):
        fs = [abs(int(f)) for f in self.factors if abs(int(f)) != 1]
        torsion = sorted(f for f in fs if f)
        free = [0] * (len(fs) - len(torsion))
        object.__setattr__(self, "factors", tuple(torsion + free))

    @property
    def rank(self) -> int:
        return sum(1 for f in self.factors if f == 0)

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(f for f in self.factors if f)

    @property
    def order(self) -> Optional[int]:
        """Order of the group, None when infinite."""
        if self.rank:
            return None
        out = 1
        for f in self.factors:
            out *= f
        return out

    def __str__(self):
        parts = [f"Z/{d}" for d in self.torsion]
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        return " + ".join(parts) if parts else "0"


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> AbelianGroup:
    """Invariant factors of Z^rows / (column span of ``matrix``).

    Any rectangular shape is accepted; zero diagonal entries, and rows left
    over when there are fewer columns, give free summands.
    """
    a = [list(map(int, row)) for row in matrix]
    n_rows = len(a)
    n_cols = len(a[0]) if n_rows else 0

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]

    diag: List[int] = []
    for t in range(min(n_rows, n_cols)):
        while True:
            nonzero = [(abs(a[i][j]), i, j) for i in range(t, n_rows) for j in range(t, n_cols) if a[i][j]]
            if not nonzero:
                break
            _, i, j = min(nonzero)
            a[t], a[i] = a[i], a[t]
            swap_cols(t, j)
            p = a[t][t]
            for i in range(t + 1, n_rows):
                k = a[i][t] // p
                a[i] = [x - k * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, n_cols):
                k = a[t][j] // p
                for row in a:
                    row[j] -= k * row[t]
            if any(a[i][t] for i in range(t + 1, n_rows)) or any(a[t][j] for j in range(t + 1, n_cols)):
                continue
            bad = next((i for i in range(t + 1, n_rows) for j in range(t + 1, n_cols) if a[i][j] % p), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
    diag += [0] * (n_rows - len(diag))
    return AbelianGroup(tuple(diag))


@dataclass(frozen=True)
class SurgeryPresentation:
    """Integral surgery on a two-component link with slopes r1, r2 and
    linking number n.

    ``two_bridge_slope`` is bookkeeping only and is never checked against a
    link diagram.
    """

    r1: int
    r2: int
    n: int
    two_bridge_slope: Optional[Tuple[int, int]] = field(default=None, compare=False)

    @property
    def relation_matrix(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return ((self.r1, self.n), (self.n, self.r2))


def homology(pres: SurgeryPresentation) -> AbelianGroup:
    """H_1 = <mu1, mu2 | r1 mu1 + n mu2, r2 mu2 + n mu1>."""
    return smith_normal_form(pres.relation_matrix)


@dataclass
class FamilyReport:
    groups: List[AbelianGroup]
    coincidences: List[Tuple[int, int]]
    note: str = HYPERBOLICITY_NOTE

    @property
    def success(self) -> bool:
        return not self.coincidences


def distinguish_family(params: Sequence[SurgeryPresentation]) -> FamilyReport:
    if not params:
        raise ValueError("empty family")
    groups = [homology(p) for p in params]
    same = [(i, j) for i, j in combinations(range(len(groups)), 2) if groups[i] == groups[j]]
    return FamilyReport(groups, same)


def form_signature(gram: Sequence[Sequence[int]]) -> int:
    """Signature of a nondegenerate symmetric integer matrix, by exact
    symmetric elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in gram]
    n = len(a)
    pos = neg = 0
    remaining = list(range(n))
    while remaining:
        k = next((i for i in remaining if a[i][i] != 0), None)
        if k is None:
            # all diagonal entries vanish: replace e_i by e_i + e_j
            i = remaining[0]
            j = next((j for j in remaining if j != i and a[i][j] != 0), None)
            if j is None:
                raise ValueError("degenerate form")
            for m in range(n):
                a[i][m] += a[j][m]
            for m in range(n):
                a[m][i] += a[m][j]
            continue
        remaining.remove(k)
        piv = a[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for i in remaining:
            f = a[i][k] / piv
            if f:
                for m in range(n):
                    a[i][m] -= f * a[k][m]
                for m in range(n):
                    a[m][i] -= f * a[m][k]
    return pos - neg


def _det2(m) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def hopf_pair_form(f1: int, f2: int) -> str:
    """Closed 4-manifold from a Hopf link with framings f1, f2."""
    gram = ((f1, 1), (1, f2))
    det = _det2(gram)
    if abs(det) != 1:
        raise ValueError(f"framings ({f1}, {f2}) give a non-unimodular form")
    even = f1 % 2 == 0 and f2 % 2 == 0
    sig = form_signature(gram)
    if sig == 0:
        return S2xS2 if even else CP2_CP2bar
    # definite rank-2 unimodular forms are odd
    return CP2_CP2 if sig > 0 else CP2bar_CP2bar


@dataclass(frozen=True)
class DoubleForm:
    """Kirby data of the double: link components with framings f1, f2 and
    linking number n, each with a 0-framed meridian."""

    f1: int
    f2: int
    n: int

    @property
    def gram(self):
        return (
            (self.f1, self.n, 1, 0),
            (self.n, self.f2, 0, 1),
            (1, 0, 0, 0),
            (0, 1, 0, 0),
        )

    def __post_init__(self):
        if _det4(self.gram) != 1:
            raise ValueError("double form is not unimodular")


def _det4(m) -> int:
    total = 0
    for perm in permutations(range(4)):
        sign = 1
        for i in range(4):
            for j in range(i + 1, 4):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = 1
        for i in range(4):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total


def _congruence(gram, basis):
    """B G B^T for the rows of ``basis``."""
    n = len(gram)
    return tuple(
        tuple(
            sum(basis[i][k] * gram[k][l] * basis[j][l] for k in range(n) for l in range(n))
            for j in range(len(basis))
        )
        for i in range(len(basis))
    )


def split_double(form: DoubleForm):
    """Change basis by e1 -> e1 - n e4 and return the two 2x2 blocks
    ((f1, 1), (1, 0)) and ((f2, 1), (1, 0))."""
    n = form.n
    basis = (
        (1, 0, 0, -n),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
    )
    g = _congruence(form.gram, basis)
    # reorder as (e1, e3) + (e2, e4)
    order = (0, 2, 1, 3)
    g = tuple(tuple(g[i][j] for j in order) for i in order)
    if any(g[i][j] for i in (0, 1) for j in (2, 3)):
        raise AssertionError("base change failed to split the form")
    return ((g[0][0], g[0][1]), (g[1][0], g[1][1])), ((g[2][2], g[2][3]), (g[3][2], g[3][3]))


def classify_double(form: DoubleForm) -> str:
    b1, b2 = split_double(form)
    even = all(b[i][i] % 2 == 0 for b in (b1, b2) for i in (0, 1))
    sig = form_signature(b1) + form_signature(b2)
    if sig != 0:
        raise AssertionError("double form has nonzero signature")
    return DOUBLE_EVEN if even else DOUBLE_ODD
