"""File formats: JSON instances and plain-text graphs.

Instance files carry every rational as the exact string "p/q" (decimal
floats are rejected): the finely tuned constants like mu = 1 + 1/(2knN)
do not survive rounding.  Writing is canonical (sorted keys, two-space
indent, trailing newline) so a canonical file round-trips byte-identically
through read + write.

Graph files are "n m" on the first line followed by m lines "u v" with
1-indexed vertices; '#' starts a comment line.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .gadgets import GadgetInstance, GadgetParams, Graph
from .geometry import PointSet, WeightedPoint
from .numerics import format_rational, parse_rational

_PARAM_RATIONALS = ("mu", "C", "V", "eps")


def instance_to_doc(inst: GadgetInstance) -> dict:
    params: dict = {"k": inst.params.k, "n": inst.params.n, "N": inst.params.N}
    if inst.params.t is not None:
        params["t"] = inst.params.t
    for name in _PARAM_RATIONALS:
        value = getattr(inst.params, name)
        if value is not None:
            params[name] = format_rational(value)
    doc = {
        "dim": inst.points.dim,
        "problem": inst.problem,
        "params": params,
        "expected_positive": _value_to_json(inst.expected_positive),
        "points": [
            {
                "coords": [format_rational(c) for c in p.coords],
                "color": p.color,
                "weight": p.weight,
                **({"in_S": True} if p.in_s else {}),
            }
            for p in inst.points.points
        ],
    }
    if inst.expected_negative is not None:
        doc["expected_negative"] = format_rational(inst.expected_negative)
    return doc


def _value_to_json(value) -> Union[int, str]:
    if isinstance(value, int):
        return value
    return format_rational(value)


def _value_from_json(value):
    if isinstance(value, bool):
        raise ValueError("expected value must be an integer or 'p/q' string")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    raise ValueError(f"expected value must be an integer or 'p/q' string, got {value!r}")


def instance_from_doc(doc: dict) -> GadgetInstance:
    dim = doc["dim"]
    raw_params = doc["params"]
    params = GadgetParams(
        k=raw_params["k"],
        n=raw_params["n"],
        N=raw_params["N"],
        t=raw_params.get("t"),
        **{
            name: parse_rational(raw_params[name]) if name in raw_params else None
            for name in _PARAM_RATIONALS
        },
    )
    pts = []
    for entry in doc["points"]:
        coords = entry["coords"]
        if len(coords) != dim:
            raise ValueError("coords length does not match dim")
        for c in coords:
            if not isinstance(c, str):
                raise ValueError(f"coordinates must be 'p/q' strings, got {c!r}")
        pts.append(
            WeightedPoint(
                tuple(parse_rational(c) for c in coords),
                entry.get("color"),
                entry.get("weight", 1),
                entry.get("in_S", False),
            )
        )
    expected_negative = doc.get("expected_negative")
    return GadgetInstance(
        params=params,
        points=PointSet(dim, tuple(pts)),
        problem=doc["problem"],
        expected_positive=_value_from_json(doc["expected_positive"]),
        expected_negative=(
            parse_rational(expected_negative) if expected_negative is not None else None
        ),
    )


def dumps_instance(inst: GadgetInstance) -> str:
    return json.dumps(instance_to_doc(inst), indent=2, sort_keys=True) + "\n"


def write_instance(path: Union[str, Path], inst: GadgetInstance) -> None:
    Path(path).write_text(dumps_instance(inst), encoding="utf-8")


def read_instance(path: Union[str, Path]) -> GadgetInstance:
    return instance_from_doc(json.loads(Path(path).read_text(encoding="utf-8")))


def parse_graph(text: str) -> Graph:
    """Parse the "n m" / "u v" plain-text graph format."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, stripped))
    if not lines:
        raise ValueError("empty graph file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ValueError(f"line {lineno}: expected 'n m' header")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"line {lineno}: expected 'n m' header") from None
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    seen = set()
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected 'u v'") from None
        if u == v:
            raise ValueError(f"line {lineno}: loops forbidden (graph is simple)")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"line {lineno}: vertex out of range")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return Graph.make(n, edges)


def read_graph(path: Union[str, Path]) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))
