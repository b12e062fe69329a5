"""Canonical forms, isomorphism, automorphism orbits, hypertree generation.

Canonical labeling is an individualization-refinement search. Colorings
are ordered partitions stored as one integer rank per vertex. Refinement
replaces each rank by the rank of an invariant signature (own color plus the
multiset of colors seen through each incident edge), so cells only ever split
in place. The search takes the smallest edge code over all discrete leaves
and is exact. Sibling subtrees that an already-found automorphism maps onto
each other are skipped. This is sound because the automorphism fixes the
individualized prefix pointwise. A leaf equivalent to the first leaf also
ends the search below the point where its path left the first path.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .errors import EnumerationTooLarge
from .hypergraph import Hypergraph, relabel

Code = tuple


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Total-order key of an isomorphism class: ``(n, sorted relabeled edges)``."""

    code: Code

    @property
    def n(self) -> int:
        return self.code[0]

    def to_hypergraph(self, k: int | None = None) -> Hypergraph:
        return Hypergraph(self.code[0], self.code[1], k)

    def to_list(self) -> list:
        return [self.code[0], [list(e) for e in self.code[1]]]


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple[frozenset[int], ...]

    def __len__(self):
        return len(self.orbits)

    def orbit_of(self, v: int) -> frozenset[int]:
        for orbit in self.orbits:
            if v in orbit:
                return orbit
        raise KeyError(v)


def _rerank(signatures: list) -> list[int]:
    ranks = {sig: r for r, sig in enumerate(sorted(set(signatures)))}
    return [ranks[sig] for sig in signatures]


@dataclass
class _Search:
    G: Hypergraph
    best_code: Code | None = None
    best_perm: list[int] | None = None
    leaves: dict = field(default_factory=dict)
    generators: list[tuple[int, ...]] = field(default_factory=list)
    first_path: list[int] | None = None
    first_code: Code | None = None

    def refine(self, colors: list[int]) -> list[int]:
        edges, inc = self.G.edges, self.G._incidence
        count = len(set(colors))
        while True:
            edge_colors = [sorted(colors[w] for w in e) for e in edges]
            sigs = []
            for v in range(self.G.n):
                cv = colors[v]
                seen = []
                for i in inc[v]:
                    ec = list(edge_colors[i])
                    ec.remove(cv)
                    seen.append(tuple(ec))
                seen.sort()
                sigs.append((cv, tuple(seen)))
            colors = _rerank(sigs)
            new_count = colors and max(colors) + 1
            if new_count == count:
                return colors
            count = new_count

    def leaf(self, colors: list[int], prefix: list[int]) -> int | None:
        """Record a discrete coloring; return the level to jump back to, if any.

        A leaf with the same code as the first leaf yields an automorphism
        that fixes the common prefix of the two paths, so every remaining
        leaf below the divergence point is an image of an explored one.
        """
        code = tuple(sorted(tuple(sorted(colors[v] for v in e)) for e in self.G.edges))
        previous = self.leaves.get(code)
        if previous is None:
            self.leaves[code] = list(colors)
            if self.first_path is None:
                self.first_path = list(prefix)
                self.first_code = code
            if self.best_code is None or code < self.best_code:
                self.best_code, self.best_perm = code, list(colors)
            return None
        # previous[x] == colors[y]  =>  gamma(x) = y
        inverse = [0] * len(colors)
        for y, c in enumerate(colors):
            inverse[c] = y
        gamma = tuple(inverse[previous[x]] for x in range(len(colors)))
        if any(gamma[x] != x for x in range(len(gamma))):
            self.generators.append(gamma)
        if code != self.first_code:
            return None
        level = 0
        while level < len(prefix) and prefix[level] == self.first_path[level]:
            level += 1
        return level

    def _orbit_roots(self, prefix: list[int]) -> list[int]:
        parent = list(range(self.G.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.generators:
            if all(gamma[p] == p for p in prefix):
                for x, y in enumerate(gamma):
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[max(rx, ry)] = min(rx, ry)
        return [find(x) for x in range(self.G.n)]

    def run(self, colors: list[int], prefix: list[int]) -> int | None:
        n = self.G.n
        counts = [0] * n
        for c in colors:
            counts[c] += 1
        target = next((c for c in range(n) if counts[c] > 1), None)
        if target is None:
            return self.leaf(colors, prefix)
        cell = [v for v in range(n) if colors[v] == target]
        explored_roots: set[int] = set()
        for w in cell:
            if explored_roots:
                roots = self._orbit_roots(prefix)
                explored_roots = {roots[x] for x in explored_roots}
                if roots[w] in explored_roots:
                    continue
            explored_roots.add(w)
            split = [(c, 0 if v == w else 1) for v, c in enumerate(colors)]
            jump = self.run(self.refine(_rerank(split)), prefix + [w])
            if jump is not None and jump < len(prefix):
                return jump
        return None


def _search(G: Hypergraph, colors: Sequence[int] | None = None) -> _Search:
    s = _Search(G)
    if G.n == 0:
        s.best_code, s.best_perm = (), []
        return s
    start = _rerank(list(colors)) if colors is not None else [0] * G.n
    s.run(s.refine(start), [])
    return s


def canonical_labeling(G: Hypergraph) -> tuple[CanonicalForm, list[int]]:
    """Canonical form plus a permutation ``perm`` with ``relabel(G, perm)``
    having exactly the canonical edge set."""
    s = _search(G)
    return CanonicalForm((G.n, s.best_code)), s.best_perm


def canonical_form(G: Hypergraph) -> CanonicalForm:
    return canonical_labeling(G)[0]


def canonical_relabel(G: Hypergraph) -> Hypergraph:
    """Copy of ``G`` whose edges are listed in canonical order."""
    form = canonical_form(G)
    return Hypergraph(G.n, form.code[1], G.k)


def are_isomorphic(G: Hypergraph, H: Hypergraph) -> bool:
    if G.n != H.n or G.m != H.m:
        return False
    if sorted(map(len, G.edges)) != sorted(map(len, H.edges)):
        return False
    return canonical_form(G) == canonical_form(H)


def automorphism_orbits(G: Hypergraph) -> OrbitPartition:
    """Vertex orbits of the full automorphism group.

    Automorphisms found by the canonical search merge orbits first. Any
    remaining candidates in a common refinement cell are decided exactly by
    comparing canonical forms with one vertex individualized.
    """
    n = G.n
    if n == 0:
        return OrbitPartition(())
    s = _search(G)
    roots = s._orbit_roots([])
    cells = s.refine([0] * n)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(roots[v], []).append(v)

    marked_codes: dict[int, Code] = {}
    by_cell: dict[int, list[int]] = {}
    for root in classes:
        by_cell.setdefault(cells[root], []).append(root)
    merged: dict[int, int] = {r: r for r in classes}
    for members in by_cell.values():
        if len(members) < 2:
            continue
        for r in members:
            marks = [0 if v == r else 1 for v in range(n)]
            marked_codes[r] = _search(G, marks).best_code
        first_with: dict[Code, int] = {}
        for r in members:
            merged[r] = first_with.setdefault(marked_codes[r], r)

    orbits: dict[int, set[int]] = {}
    for root, members in classes.items():
        orbits.setdefault(merged[root], set()).update(members)
    return OrbitPartition(tuple(sorted((frozenset(o) for o in orbits.values()), key=min)))


def permute(G: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    return relabel(G, perm)


MAX_ENUMERATION_EDGES = 9
MAX_ENUMERATION_ORDER = 25


def generate_hypertrees(k: int, m: int) -> list[Hypergraph]:
    """One representative per isomorphism class of k-uniform hypertrees with
    ``m`` edges, sorted by canonical form and labeled canonically.

    Grows every class with ``j`` edges by a fresh pendant edge at each vertex
    and keeps one hypertree per canonical form.
    """
    if k < 2 or m < 0:
        raise ValueError(f"need k >= 2 and m >= 0, got k={k}, m={m}")
    if m > MAX_ENUMERATION_EDGES or 1 + (k - 1) * m > MAX_ENUMERATION_ORDER:
        raise EnumerationTooLarge(
            f"k={k}, m={m} exceeds the desk-scale limits "
            f"(m <= {MAX_ENUMERATION_EDGES}, n <= {MAX_ENUMERATION_ORDER})"
        )
    level = {canonical_form(Hypergraph(1, (), k)): Hypergraph(1, (), k)}
    for _ in range(m):
        nxt: dict[CanonicalForm, Hypergraph] = {}
        for T in level.values():
            for u in range(T.n):
                grown = Hypergraph(T.n + k - 1, T.edges + ((u,) + tuple(range(T.n, T.n + k - 1)),), k)
                form = canonical_form(grown)
                if form not in nxt:
                    nxt[form] = form.to_hypergraph(k)
        level = nxt
    return [level[form] for form in sorted(level)]
