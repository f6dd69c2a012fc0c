"""Parameter grids of the classified families, each instance paired with
the closed form its six-tuple must match up to reflection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, Tuple

from .classify import (
    case_a_parallel_tuple,
    case_a_twisted_tuple,
    case_b_fourth_tuple,
    case_b_single_tuple,
    identity_tuple,
)
from .trisection import SixTuple, TrisectionData, build_case_A, build_case_B, build_identity

__all__ = ["Instance", "enumerate_case_a", "enumerate_case_b", "enumerate_identity", "enumerate_all"]


@dataclass(frozen=True)
class Instance:
    case: str
    params: Tuple[Tuple[str, int], ...]
    data: TrisectionData
    closed_form: SixTuple

    @property
    def param_dict(self) -> Dict[str, object]:
        return dict(self.params)

    def describe(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self.params)


def enumerate_case_a(q_min: int = -20, q_max: int = 20) -> Iterator[Instance]:
    """Parallel subcase for every family parameter q != 1 in range, then the
    two twisted subcases, each for both signs of the twist.

    The family parameter is sign * (second coordinate of c2p).
    """
    for sign in (1, -1):
        for q in range(q_min, q_max + 1):
            if q == 1:
                continue
            data = build_case_A(sign, "P0", sign * q)
            yield Instance("A", (("sign", sign), ("subcase", "P0"), ("q", q)), data, case_a_parallel_tuple(q, sign))
    for sign in (1, -1):
        yield Instance("A", (("sign", sign), ("subcase", "Pm1")), build_case_A(sign, "Pm1"), case_a_twisted_tuple(sign))
        yield Instance("A", (("sign", sign), ("subcase", "Pm2")), build_case_A(sign, "Pm2"), case_a_twisted_tuple(-sign))


def enumerate_case_b() -> Iterator[Instance]:
    for power in (1, 4):
        for sign in (1, -1):
            for eps2 in (1, -1):
                eps = -sign * eps2
                form = case_b_single_tuple(eps) if power == 1 else case_b_fourth_tuple(eps)
                yield Instance(
                    "B",
                    (("power", power), ("sign", sign), ("eps2", eps2)),
                    build_case_B(power, sign, eps2),
                    form,
                )


def enumerate_identity() -> Iterator[Instance]:
    yield Instance("Id", (), build_identity(), identity_tuple())


def enumerate_all(q_min: int = -20, q_max: int = 20) -> Iterator[Instance]:
    yield from enumerate_case_a(q_min, q_max)
    yield from enumerate_case_b()
    yield from enumerate_identity()
