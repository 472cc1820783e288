"""File formats: profile JSON, digraph JSON, DOT and the sweep CSV."""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable, Sequence

from .bounds import BoundReport
from .core import MajorityDigraph, Profile
from .errors import InputError
from .triangle import TriPoint

SWEEP_HEADER = ("n", "r", "achieved", "upper_bound", "lower_bound", "time_ms")


def profile_to_dict(profile: Profile) -> dict[str, Any]:
    data: dict[str, Any] = {
        "n": profile.n,
        "k": profile.k,
        "orders": [list(o.ranking) for o in profile.orders],
    }
    if profile.labels is not None:
        data["labels"] = list(profile.labels)
    return data


def dumps_profile(profile: Profile) -> str:
    return json.dumps(profile_to_dict(profile)) + "\n"


def _require_int(data: dict, key: str) -> int:
    value = data.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise InputError(f"field {key!r} must be an integer")
    return value


def profile_from_dict(data: Any) -> Profile:
    if not isinstance(data, dict):
        raise InputError("profile JSON must be an object")
    n = _require_int(data, "n")
    k = _require_int(data, "k")
    orders = data.get("orders")
    if not isinstance(orders, list) or not all(isinstance(o, list) for o in orders):
        raise InputError("field 'orders' must be a list of lists")
    if len(orders) != k:
        raise InputError(f"k={k} but {len(orders)} orders given")
    for o in orders:
        if len(o) != n or not all(isinstance(v, int) and not isinstance(v, bool) for v in o):
            raise InputError(f"every order must list {n} integer ids")
    return Profile(orders, data.get("labels"))


def loads_profile(text: str) -> Profile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed profile JSON: {exc}") from None
    return profile_from_dict(data)


def digraph_to_dict(d: MajorityDigraph) -> dict[str, Any]:
    return {"n": d.n, "edges": [list(e) for e in d.edges()]}


def dumps_digraph(d: MajorityDigraph) -> str:
    return json.dumps(digraph_to_dict(d)) + "\n"


def digraph_from_dict(data: Any) -> MajorityDigraph:
    if not isinstance(data, dict):
        raise InputError("digraph JSON must be an object")
    n = _require_int(data, "n")
    edges = data.get("edges")
    if not isinstance(edges, list):
        raise InputError("field 'edges' must be a list")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, int) for v in e)):
            raise InputError(f"bad edge {e!r}; expected [u, v]")
        pairs.append((e[0], e[1]))
    return MajorityDigraph.from_edges(n, pairs)


def loads_digraph(text: str) -> MajorityDigraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed digraph JSON: {exc}") from None
    return digraph_from_dict(data)


def load_any(text: str) -> Profile | MajorityDigraph:
    """Parse either a profile (has ``orders``) or a digraph (has ``edges``)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    if isinstance(data, dict) and "orders" in data:
        return profile_from_dict(data)
    if isinstance(data, dict) and "edges" in data:
        return digraph_from_dict(data)
    raise InputError("JSON is neither a profile (orders) nor a digraph (edges)")


def export_dot(d: MajorityDigraph, points: Sequence[TriPoint] | None = None, name: str = "G") -> str:
    """DOT text with edges ascending by tail, then head."""
    lines = [f"digraph {name} {{"]
    if points is not None:
        for v, p in enumerate(points):
            lines.append(f"  // {v}: ({p.x},{p.y},{p.z})")
    for v in range(d.n):
        lines.append(f"  {v};")
    for u, v in d.edges():
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def sweep_csv(rows: Iterable[BoundReport], timing: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        writer.writerow(
            [
                row.n,
                row.r,
                row.achieved,
                f"{row.upper:.4f}",
                row.lower,
                f"{row.time_ms:.3f}" if timing else "0",
            ]
        )
    return buf.getvalue()
