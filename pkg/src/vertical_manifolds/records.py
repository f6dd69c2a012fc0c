"""JSON records for trisection data, six-tuples and decompositions.

Trisection data::

    {"a2": [1, 0], "b2": [0, 1], "c2p": [-1, 4],
     "c2": [2, 1], "a2p": [0, 1], "b2p": [1, 0],
     "monodromy": {"kind": "twist", "d": [-1, 1], "sign": 1}}

``kind`` is "identity", "twist" or "fourth".  The derived cycles c2, a2p,
b2p may be omitted; they are then computed from the monodromy.
"""

from __future__ import annotations

import json
from typing import Any, Dict

from .lens import parse_manifold
from .torus import PrimitiveClass
from .trisection import Monodromy, SixTuple, TrisectionData

__all__ = [
    "dumps",
    "data_to_record",
    "data_from_record",
    "six_tuple_to_record",
    "six_tuple_from_record",
]

_CYCLES = ("a2", "b2", "c2", "a2p", "b2p", "c2p")


def dumps(record: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, final newline."""
    return json.dumps(record, indent=2, sort_keys=True) + "\n"


def _pair(value, name):
    if not isinstance(value, (list, tuple)) or len(value) != 2 or not all(isinstance(v, int) for v in value):
        raise ValueError(f"{name}: expected a pair of integers")
    return PrimitiveClass(*value)


def monodromy_from_record(rec: Dict[str, Any]) -> Monodromy:
    kind = rec.get("kind")
    if kind == "identity":
        return Monodromy.identity()
    if kind not in ("twist", "fourth"):
        raise ValueError(f"monodromy kind must be identity, twist or fourth, not {kind!r}")
    sign = rec.get("sign", 1)
    if sign not in (1, -1):
        raise ValueError("monodromy sign must be 1 or -1")
    return Monodromy(kind, _pair(rec.get("d"), "monodromy.d"), sign)


def monodromy_to_record(mu: Monodromy) -> Dict[str, Any]:
    if mu.kind == "identity":
        return {"kind": "identity"}
    return {"kind": mu.kind, "d": list(mu.d.vector), "sign": mu.sign}


def data_from_record(rec: Dict[str, Any]) -> TrisectionData:
    if not isinstance(rec, dict):
        raise ValueError("trisection data must be a JSON object")
    unknown = set(rec) - set(_CYCLES) - {"monodromy"}
    if unknown:
        raise ValueError(f"unknown fields: {', '.join(sorted(unknown))}")
    mu = monodromy_from_record(rec.get("monodromy") or {})
    for name in ("a2", "b2", "c2p"):
        if name not in rec:
            raise ValueError(f"missing field {name}")
    derived = TrisectionData.from_direct(_pair(rec["a2"], "a2"), _pair(rec["b2"], "b2"), _pair(rec["c2p"], "c2p"), mu)
    given = {n: _pair(rec[n], n) for n in ("c2", "a2p", "b2p") if n in rec}
    if not given:
        return derived
    fields = {n: given.get(n, getattr(derived, n)) for n in _CYCLES}
    return TrisectionData(mu=mu, **fields)


def data_to_record(data: TrisectionData) -> Dict[str, Any]:
    rec: Dict[str, Any] = {n: list(getattr(data, n).vector) for n in _CYCLES}
    rec["monodromy"] = monodromy_to_record(data.mu)
    return rec


def six_tuple_to_record(t: SixTuple) -> Dict[str, str]:
    names = ("v_aa", "v_bb", "v_cc", "v_ba", "v_cb", "v_ac")
    return {n: str(getattr(t, n)) for n in names}


def six_tuple_from_record(rec: Dict[str, str]) -> SixTuple:
    names = ("v_aa", "v_bb", "v_cc", "v_ba", "v_cb", "v_ac")
    return SixTuple(*(parse_manifold(rec[n]) for n in names))
