"""Finite hypergraphs on dense vertex indices ``0..n-1``.

A :class:`Hypergraph` is immutable. Edges keep the order they were given in,
but equality and hashing only look at the edge *set*.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import (
    DuplicateEdge,
    EdgeIndexOutOfRange,
    EdgeOutOfRange,
    EmptyEdge,
    EmptySubset,
    NotUniform,
    RepeatedVertex,
    VertexOutOfRange,
)

Edge = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """Vertex count plus an ordered list of edges.

    ``k`` is the uniformity witness. It is inferred when every edge has the
    same size; it may also be passed explicitly, which is the only way to mark
    an edgeless hypergraph (e.g. the one-vertex hyperstar) as k-uniform.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    k: int | None = None
    _incidence: tuple[tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise VertexOutOfRange(f"vertex count must be nonnegative, got {self.n}")
        normalized: list[Edge] = []
        seen: set[Edge] = set()
        for i, raw in enumerate(self.edges):
            raw = list(raw)
            if not raw:
                raise EmptyEdge(f"edge {i} is empty")
            edge = tuple(sorted(int(v) for v in raw))
            if len(set(edge)) != len(edge):
                raise RepeatedVertex(f"edge {i} repeats a vertex: {raw}")
            if edge[0] < 0 or edge[-1] >= self.n:
                raise EdgeOutOfRange(f"edge {i} = {raw} has a vertex outside 0..{self.n - 1}")
            if edge in seen:
                raise DuplicateEdge(f"edge {i} = {raw} duplicates an earlier edge")
            seen.add(edge)
            normalized.append(edge)
        sizes = {len(e) for e in normalized}
        k = self.k
        if k is not None:
            if k < 1 or sizes - {k}:
                raise NotUniform(f"declared k={k} but edge sizes are {sorted(sizes)}")
        elif len(sizes) == 1:
            k = sizes.pop()
        incidence: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(normalized):
            for v in e:
                incidence[v].append(i)
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "_incidence", tuple(tuple(x) for x in incidence))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def incident(self, v: int) -> tuple[int, ...]:
        """Indices of the edges containing ``v``."""
        _check_vertex(self, v)
        return self._incidence[v]

    def neighbors(self, v: int) -> set[int]:
        """Vertices sharing at least one edge with ``v`` (2-section adjacency)."""
        out: set[int] = set()
        for i in self.incident(v):
            out.update(self.edges[i])
        out.discard(v)
        return out

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.k == other.k and self.edge_set == other.edge_set

    def __hash__(self):
        return hash((self.n, self.k, self.edge_set))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, k={self.k}, edges={[list(e) for e in self.edges]})"


@dataclass(frozen=True)
class ComponentPartition:
    blocks: tuple[frozenset[int], ...]

    def __len__(self):
        return len(self.blocks)

    def block_of(self, v: int) -> frozenset[int]:
        for b in self.blocks:
            if v in b:
                return b
        raise VertexOutOfRange(f"vertex {v} is in no block")


def build(n: int, edges: Iterable[Iterable[int]], k: int | None = None) -> Hypergraph:
    """Validate and construct a hypergraph."""
    return Hypergraph(n, tuple(tuple(e) for e in edges), k)


def _check_vertex(G: Hypergraph, v: int) -> None:
    if not 0 <= v < G.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{G.n - 1}")


def degree(G: Hypergraph, v: int) -> int:
    return len(G.incident(v))


def degrees(G: Hypergraph) -> list[int]:
    return [len(G._incidence[v]) for v in range(G.n)]


def components(G: Hypergraph) -> ComponentPartition:
    """Connected components, each block listed once, ordered by smallest vertex."""
    seen = [False] * G.n
    blocks = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        block = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for i in G._incidence[v]:
                for w in G.edges[i]:
                    if not seen[w]:
                        seen[w] = True
                        block.append(w)
                        queue.append(w)
        blocks.append(frozenset(block))
    return ComponentPartition(tuple(blocks))


def is_connected(G: Hypergraph) -> bool:
    return len(components(G)) == 1


def has_cycle(G: Hypergraph) -> bool:
    """Search explicitly for a cycle made of walks.

    A cycle is ``(v0, e1, v1, ..., es, v0)`` with at least two distinct edges,
    consecutive vertices different and all vertices distinct apart from the
    closing one. The search is exhaustive (exponential in general) and serves
    as the reference against :func:`is_hypertree`'s counting test.
    """
    edges = G.edges
    inc = G._incidence

    def extend(start: int, v: int, used_edges: set[int], used_vertices: set[int]) -> bool:
        for i in inc[v]:
            if i in used_edges:
                continue
            for w in edges[i]:
                if w == v:
                    continue
                if w == start:
                    if used_edges:
                        return True
                    continue
                # cycles are rooted at their smallest vertex
                if w < start or w in used_vertices:
                    continue
                used_edges.add(i)
                used_vertices.add(w)
                if extend(start, w, used_edges, used_vertices):
                    return True
                used_edges.discard(i)
                used_vertices.discard(w)
        return False

    return any(extend(s, s, set(), {s}) for s in range(G.n))


def is_hypertree(G: Hypergraph) -> bool:
    """Connected and ``n == 1 + (k-1) m``; requires a uniform hypergraph."""
    if G.k is None:
        raise NotUniform("is_hypertree needs a k-uniform hypergraph")
    return G.n >= 1 and G.n == 1 + (G.k - 1) * G.m and is_connected(G)


def delete_vertex(G: Hypergraph, u: int) -> Hypergraph:
    """Strong deletion: drop ``u`` and every edge through it, then compact labels."""
    _check_vertex(G, u)
    kept = [tuple(v - (v > u) for v in e) for e in G.edges if u not in e]
    return Hypergraph(G.n - 1, tuple(kept), G.k)


def delete_edge(G: Hypergraph, index: int) -> Hypergraph:
    if not 0 <= index < G.m:
        raise EdgeIndexOutOfRange(f"edge index {index} not in 0..{G.m - 1}")
    return Hypergraph(G.n, G.edges[:index] + G.edges[index + 1 :], G.k)


def induced(G: Hypergraph, X: Iterable[int]) -> Hypergraph:
    """Sub-hypergraph on ``X`` with edges ``e & X``.

    Every nonempty intersection is kept, singletons included, deduplicated as
    sets. Vertices are relabeled in increasing order of their old index, so the
    result need not be k-uniform.
    """
    keep = sorted(set(X))
    if not keep:
        raise EmptySubset("induced() needs a nonempty vertex set")
    for v in keep:
        _check_vertex(G, v)
    index = {v: i for i, v in enumerate(keep)}
    out: list[Edge] = []
    seen: set[Edge] = set()
    for e in G.edges:
        cut = tuple(index[v] for v in e if v in index)
        if cut and cut not in seen:
            seen.add(cut)
            out.append(cut)
    return Hypergraph(len(keep), tuple(out))


def relabel(G: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Image of ``G`` under the vertex map ``v -> perm[v]``."""
    if sorted(perm) != list(range(G.n)):
        raise VertexOutOfRange("relabel() needs a permutation of 0..n-1")
    return Hypergraph(G.n, tuple(tuple(perm[v] for v in e) for e in G.edges), G.k)


def disjoint_union(G: Hypergraph, H: Hypergraph) -> Hypergraph:
    """Union with ``H``'s vertices shifted past ``G``'s."""
    k = G.k if G.k == H.k else None
    shifted = tuple(tuple(v + G.n for v in e) for e in H.edges)
    return Hypergraph(G.n + H.n, G.edges + shifted, k)
