"""Readers and writers for ``.uhg`` text files and the JSON mirror.

``.uhg`` layout::

    # comments start with '#'
    k n m
    v v v      <- m lines of k 0-based vertex indices

JSON numbers are written with 17 significant digits so that every double
round-trips exactly and output is byte-stable across runs.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

import numpy as np

from .errors import HypergraphError, NotUniform, ParseError
from .hypergraph import Hypergraph

SCHEMA_VERSION = 1


def parse_uhg(text: str) -> Hypergraph:
    header: tuple[int, int, int] | None = None
    header_line = 0
    edges: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(values) != 3:
                raise ParseError("header must be 'k n m'", lineno)
            k, n, m = values
            if k < 1 or n < 0 or m < 0:
                raise ParseError(f"bad header values k={k} n={n} m={m}", lineno)
            header, header_line = (k, n, m), lineno
            continue
        k, n, m = header
        if len(edges) == m:
            raise ParseError(f"more than m={m} edge lines", lineno)
        if len(values) != k:
            raise ParseError(f"edge has {len(values)} vertices, expected k={k}", lineno)
        bad = [v for v in values if not 0 <= v < n]
        if bad:
            raise ParseError(f"vertex {bad[0]} outside 0..{n - 1}", lineno)
        edges.append(tuple(values))
        try:
            Hypergraph(n, tuple(edges), k)
        except HypergraphError as exc:
            raise ParseError(str(exc), lineno) from None
    if header is None:
        raise ParseError("missing 'k n m' header")
    k, n, m = header
    if len(edges) != m:
        raise ParseError(f"header declares m={m} edges but found {len(edges)}", header_line)
    return Hypergraph(n, tuple(edges), k)


def format_uhg(G: Hypergraph) -> str:
    if G.k is None:
        raise NotUniform(".uhg needs a k-uniform hypergraph")
    lines = [f"{G.k} {G.n} {G.m}"]
    lines += [" ".join(map(str, e)) for e in G.edges]
    return "\n".join(lines) + "\n"


def read_uhg(path: str | Path) -> Hypergraph:
    return parse_uhg(Path(path).read_text(encoding="utf-8"))


def write_uhg(G: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(format_uhg(G), encoding="utf-8")


def hypergraph_to_dict(G: Hypergraph) -> dict[str, Any]:
    out: dict[str, Any] = {"n": G.n, "edges": [list(e) for e in G.edges]}
    if G.k is not None:
        out["k"] = G.k
    return out


def hypergraph_from_dict(data: dict[str, Any]) -> Hypergraph:
    try:
        n = data["n"]
        edges = data["edges"]
    except (KeyError, TypeError):
        raise ParseError("hypergraph JSON needs 'n' and 'edges'") from None
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ParseError("'n' must be an int and 'edges' a list")
    try:
        return Hypergraph(n, tuple(tuple(e) for e in edges), data.get("k"))
    except HypergraphError as exc:
        raise ParseError(str(exc)) from None


def load_hypergraph(path: str | Path) -> Hypergraph:
    """Read ``.json`` files as the JSON mirror and anything else as ``.uhg``."""
    path = Path(path)
    if path.suffix.lower() == ".json":
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno) from None
        return hypergraph_from_dict(data)
    return read_uhg(path)


def format_float(x: float) -> str:
    return f"{x:.17g}"


def _encode(obj: Any, out: list[str]) -> None:
    if isinstance(obj, bool) or obj is None:
        out.append(json.dumps(obj))
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        x = float(obj)
        out.append(format_float(x) if math.isfinite(x) else "null")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (key, value) in enumerate(obj.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(str(key)))
            out.append(": ")
            _encode(value, out)
        out.append("}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        out.append("[")
        for i, value in enumerate(obj):
            if i:
                out.append(", ")
            _encode(value, out)
        out.append("]")
    else:
        raise TypeError(f"cannot encode {type(obj).__name__} as JSON")


def dumps(obj: Any) -> str:
    """JSON text with floats at 17 significant digits; key order is preserved."""
    out: list[str] = []
    _encode(obj, out)
    return "".join(out)
