"""Named hypertree families and the pendant/identification constructions.

Labelings are fixed so that every file written from a family is byte-stable:

* loose path: vertices ``0..n-1`` in edge order, edge ``i`` is
  ``{i(k-1), ..., i(k-1)+k-1}``;
* hyperstar: center ``0``, edge ``i`` is ``{0} | {1+i(k-1), ..., (i+1)(k-1)}``;
* broom: the loose path first (its end vertex ``0`` is the star center), the
  extra star edges after it;
* double broom: ``u=0``, ``v=1``, bridge vertices ``2..k-1``, then the leaves
  of ``u``'s edges and of ``v``'s edges; edges ordered u-star, v-star, bridge.

Vertex indices are 0-based; the usual 1-based ``v_1..v_n`` map to ``0..n-1``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from .errors import (
    BadA,
    BadAnchorDegrees,
    BadDelta,
    BadDivisibility,
    BadS,
    FamilyError,
    NotUniform,
    ParseError,
    TooSmall,
    VertexOutOfRange,
)
from .hypergraph import Hypergraph, degree


def edge_count(n: int, k: int) -> int:
    """``(n-1)/(k-1)``, the edge count of any k-uniform hypertree of order n."""
    if k < 2:
        raise BadDivisibility(f"k must be at least 2, got {k}")
    if n < 1 or (n - 1) % (k - 1):
        raise BadDivisibility(f"n-1={n - 1} is not a nonnegative multiple of k-1={k - 1}")
    return (n - 1) // (k - 1)


def loose_path(n: int, k: int) -> Hypergraph:
    m = edge_count(n, k)
    edges = tuple(tuple(range(i * (k - 1), i * (k - 1) + k)) for i in range(m))
    return Hypergraph(n, edges, k)


def hyperstar(n: int, k: int) -> Hypergraph:
    m = edge_count(n, k)
    edges = tuple((0,) + tuple(range(1 + i * (k - 1), 1 + (i + 1) * (k - 1))) for i in range(m))
    return Hypergraph(n, edges, k)


def broom(n: int, k: int, delta: int) -> Hypergraph:
    """Hyperstar with ``delta-1`` edges glued at an end of a loose path.

    For ``delta`` in {1, 2} this is the loose path itself.
    """
    m = edge_count(n, k)
    if not 1 <= delta <= max(m, 1):
        raise BadDelta(f"delta={delta} outside 1..{m}")
    star_edges = max(delta - 1, 0)
    path = loose_path(n - star_edges * (k - 1), k)
    edges = list(path.edges)
    nxt = path.n
    for _ in range(star_edges):
        edges.append((0,) + tuple(range(nxt, nxt + k - 1)))
        nxt += k - 1
    return Hypergraph(n, tuple(edges), k)


def f_graph(n: int, k: int) -> Hypergraph:
    """Loose path on ``n-k+1`` vertices plus a pendant edge at a degree-one
    vertex of its second edge; for ``k = 2`` this is ``broom(n, 2, 3)``.

    The pendant edge goes on vertex ``k``, the first vertex of the second
    edge that is not shared with a neighbouring edge.
    """
    m = edge_count(n, k)
    if m < 3:
        raise TooSmall(f"F needs at least 3 edges, (n-1)/(k-1) = {m}")
    if k == 2:
        return broom(n, 2, 3)
    path = loose_path(n - k + 1, k)
    pendant = (k,) + tuple(range(path.n, n))
    return Hypergraph(n, path.edges + (pendant,), k)


def double_broom_range(n: int, k: int) -> range:
    """Admissible ``a`` values: ``1..floor((n-k) / (2(k-1)))``."""
    edge_count(n, k)
    return range(1, (n - k) // (2 * (k - 1)) + 1)


def double_broom(n: int, k: int, a: int) -> Hypergraph:
    """Hyperstars of ``a`` and ``b = (n-k)/(k-1) - a`` edges whose centers
    ``u, v`` are joined by the edge ``{u, v, w_1, ..., w_{k-2}}``."""
    m = edge_count(n, k)
    admissible = double_broom_range(n, k)
    if m < 3 or a not in admissible:
        raise BadA(f"a={a} not in 1..{admissible.stop - 1} for n={n}, k={k}")
    b = m - 1 - a
    edges: list[tuple[int, ...]] = []
    nxt = k
    for center, count in ((0, a), (1, b)):
        for _ in range(count):
            edges.append((center,) + tuple(range(nxt, nxt + k - 1)))
            nxt += k - 1
    edges.append(tuple(range(k)))
    return Hypergraph(n, tuple(edges), k)


def _require_k(G: Hypergraph) -> int:
    if G.k is None:
        raise NotUniform("construction needs a k-uniform hypergraph")
    return G.k


def attach_pendant_path(G: Hypergraph, u: int, p: int) -> Hypergraph:
    """Hang ``p`` new edges off ``u`` as a chain, each bringing ``k-1`` fresh
    vertices; the chain continues from the last fresh vertex of each edge."""
    if not 0 <= u < G.n:
        raise VertexOutOfRange(f"vertex {u} not in 0..{G.n - 1}")
    if p < 0:
        raise FamilyError(f"path length must be nonnegative, got {p}")
    k = _require_k(G)
    edges = list(G.edges)
    anchor, nxt = u, G.n
    for _ in range(p):
        fresh = tuple(range(nxt, nxt + k - 1))
        edges.append((anchor,) + fresh)
        anchor, nxt = fresh[-1], nxt + k - 1
    return Hypergraph(nxt, tuple(edges), k)


def two_pendant_paths(G: Hypergraph, u: int, v: int, p: int, q: int) -> Hypergraph:
    """``G_u(p, q)`` when ``u == v``, otherwise ``G_{u,v}(p, q)``."""
    return attach_pendant_path(attach_pendant_path(G, u, p), v, q)


def split_anchor(G: Hypergraph, e: int) -> tuple[tuple[int, ...], int]:
    """Return ``(w_1..w_{k-1}, w_k)`` for an edge whose vertices all have
    degree one except a single ``w_k`` of degree at least two."""
    edge = G.edges[e]
    low = tuple(w for w in edge if degree(G, w) == 1)
    high = [w for w in edge if degree(G, w) >= 2]
    if len(high) != 1 or len(low) != len(edge) - 1:
        raise BadAnchorDegrees(
            f"edge {e} = {list(edge)} needs exactly one vertex of degree >= 2, "
            f"found {len(high)}"
        )
    return low, high[0]


def g_es(G: Hypergraph, e: int, s: int, parts: Sequence[tuple[Hypergraph, int]]) -> Hypergraph:
    """Glue rooted parts onto edge ``e``.

    Part ``i`` (1-based) has its root identified with ``w_i`` when ``i > s``
    and with ``w_k`` when ``i <= s``. Part vertices other than the root are
    appended after ``G``'s, part by part.
    """
    k = _require_k(G)
    if not 0 <= e < G.m:
        raise FamilyError(f"edge index {e} not in 0..{G.m - 1}")
    if not 0 <= s <= k - 1:
        raise BadS(f"s={s} outside 0..{k - 1}")
    if len(parts) != k - 1:
        raise BadS(f"need k-1={k - 1} parts, got {len(parts)}")
    low, wk = split_anchor(G, e)
    edges = list(G.edges)
    nxt = G.n
    for i, (H, root) in enumerate(parts, start=1):
        if not 0 <= root < H.n:
            raise VertexOutOfRange(f"root {root} of part {i} not in 0..{H.n - 1}")
        if H.m and H.k != k:
            raise NotUniform(f"part {i} is not {k}-uniform")
        target = wk if i <= s else low[i - 1]
        mapping = {}
        for x in range(H.n):
            if x == root:
                mapping[x] = target
            else:
                mapping[x] = nxt
                nxt += 1
        edges.extend(tuple(mapping[x] for x in h) for h in H.edges)
    return Hypergraph(nxt, tuple(edges), k)


def hyperstar_parts(ts: Sequence[int], k: int) -> list[tuple[Hypergraph, int]]:
    """Hyperstars with ``t_i`` edges rooted at their centers."""
    if any(t < 0 for t in ts):
        raise FamilyError(f"star sizes must be nonnegative: {list(ts)}")
    return [(hyperstar(t * (k - 1) + 1, k), 0) for t in ts]


def g_es_stars(G: Hypergraph, e: int, s: int, ts: Sequence[int]) -> Hypergraph:
    return g_es(G, e, s, hyperstar_parts(ts, _require_k(G)))


KINDS = (
    "LoosePath",
    "HyperStar",
    "Broom",
    "FGraph",
    "DoubleBroom",
    "PendantAttach",
    "TwoPendantAttach",
    "EdgeSplit",
    "Explicit",
)

_ALIASES = {
    "loose-path": "LoosePath",
    "hyperstar": "HyperStar",
    "broom": "Broom",
    "f-graph": "FGraph",
    "double-broom": "DoubleBroom",
    "pendant-attach": "PendantAttach",
    "two-pendant-attach": "TwoPendantAttach",
    "edge-split": "EdgeSplit",
    "explicit": "Explicit",
}


def canonical_kind(kind: str) -> str:
    if kind in KINDS:
        return kind
    try:
        return _ALIASES[kind.lower()]
    except KeyError:
        raise FamilyError(f"unknown family kind {kind!r}") from None


@dataclass(frozen=True)
class FamilySpec:
    """A named family instance.

    The graft kinds (``PendantAttach``, ``TwoPendantAttach``, ``EdgeSplit``)
    carry their base hypergraph as a nested spec under ``params["base"]``;
    ``Explicit`` carries ``n``, ``k`` and ``edges`` directly.
    """

    kind: str
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "kind", canonical_kind(self.kind))

    def _int(self, name: str) -> int:
        try:
            value = self.params[name]
        except KeyError:
            raise FamilyError(f"{self.kind} needs parameter {name!r}") from None
        if not isinstance(value, int) or isinstance(value, bool):
            raise FamilyError(f"{self.kind} parameter {name!r} must be an integer")
        return value

    def _base(self) -> Hypergraph:
        base = self.params.get("base")
        if isinstance(base, dict):
            base = FamilySpec.from_dict(base)
        if not isinstance(base, FamilySpec):
            raise FamilyError(f"{self.kind} needs a nested 'base' spec")
        return base.build()

    def build(self) -> Hypergraph:
        kind = self.kind
        if kind == "LoosePath":
            return loose_path(self._int("n"), self._int("k"))
        if kind == "HyperStar":
            return hyperstar(self._int("n"), self._int("k"))
        if kind == "Broom":
            return broom(self._int("n"), self._int("k"), self._int("delta"))
        if kind == "FGraph":
            return f_graph(self._int("n"), self._int("k"))
        if kind == "DoubleBroom":
            return double_broom(self._int("n"), self._int("k"), self._int("a"))
        if kind == "PendantAttach":
            return attach_pendant_path(self._base(), self._int("u"), self._int("p"))
        if kind == "TwoPendantAttach":
            u = self._int("u")
            v = self.params.get("v", u)
            return two_pendant_paths(self._base(), u, v, self._int("p"), self._int("q"))
        if kind == "EdgeSplit":
            ts = self.params.get("t")
            if ts is None:
                numbered = sorted(
                    (int(key[1:]), value)
                    for key, value in self.params.items()
                    if key[:1] == "t" and key[1:].isdigit()
                )
                ts = [value for _, value in numbered]
            return g_es_stars(self._base(), self._int("e"), self._int("s"), list(ts))
        if kind == "Explicit":
            return Hypergraph(
                self._int("n"), tuple(tuple(e) for e in self.params.get("edges", [])), self.params.get("k")
            )
        raise FamilyError(f"unknown family kind {kind!r}")

    def to_dict(self) -> dict[str, Any]:
        params = {}
        for key, value in self.params.items():
            if isinstance(value, FamilySpec):
                value = value.to_dict()
            elif isinstance(value, tuple):
                value = [list(x) if isinstance(x, tuple) else x for x in value]
            params[key] = value
        return {"kind": self.kind, "params": params}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> FamilySpec:
        if not isinstance(data, dict) or "kind" not in data:
            raise ParseError("family spec JSON needs a 'kind'")
        params = dict(data.get("params", {}))
        if isinstance(params.get("base"), dict):
            params["base"] = cls.from_dict(params["base"])
        return cls(data["kind"], params)

    @classmethod
    def explicit(cls, G: Hypergraph) -> FamilySpec:
        return cls("Explicit", {"n": G.n, "k": G.k, "edges": [list(e) for e in G.edges]})
