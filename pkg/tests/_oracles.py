"""Independent reference implementations used only by the tests.

Nothing here calls the package's search, BFS or power-iteration code, so an
agreement between the two routes is meaningful.
"""

from __future__ import annotations

import itertools
import math

import numpy as np


def floyd_warshall(n: int, edges) -> np.ndarray:
    inf = n + 1
    d = np.full((n, n), inf, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for e in edges:
        for u in e:
            for v in e:
                if u != v:
                    d[u, v] = 1
    for w in range(n):
        d = np.minimum(d, d[:, [w]] + d[[w], :])
    return d


def dense_rho(n: int, edges) -> float:
    return float(np.linalg.eigvalsh(floyd_warshall(n, edges).astype(float))[-1])


def dense_perron(n: int, edges) -> np.ndarray:
    _, vecs = np.linalg.eigh(floyd_warshall(n, edges).astype(float))
    x = vecs[:, -1]
    return x if x.sum() > 0 else -x


def incidence_forest(n: int, edges) -> bool:
    """Berge-acyclic iff the vertex/edge incidence graph is a forest (union-find)."""
    parent = list(range(n + len(edges)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, e in enumerate(edges):
        for v in e:
            a, b = find(v), find(n + i)
            if a == b:
                return False
            parent[a] = b
    return True


def brute_connected(n: int, edges) -> bool:
    return n == 0 or int((floyd_warshall(n, edges) <= n).sum()) == n * n


def relabel_code(edges, perm) -> tuple:
    return tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in edges))


def brute_code(n: int, edges) -> tuple:
    """Smallest relabeled edge list over all n! permutations."""
    return min(relabel_code(edges, p) for p in itertools.permutations(range(n)))


def brute_automorphisms(n: int, edges) -> list[tuple[int, ...]]:
    target = relabel_code(edges, range(n))
    return [p for p in itertools.permutations(range(n)) if relabel_code(edges, p) == target]


def brute_orbits(n: int, edges) -> set[frozenset[int]]:
    auts = brute_automorphisms(n, edges)
    return {frozenset(p[v] for p in auts) for v in range(n)}


def labeled_hypertrees(k: int, m: int):
    n = 1 + (k - 1) * m
    for chosen in itertools.combinations(itertools.combinations(range(n), k), m):
        if incidence_forest(n, chosen) and brute_connected(n, chosen):
            yield chosen


def brute_classes(k: int, m: int) -> set[tuple]:
    """Isomorphism classes as brute-force canonical codes."""
    n = 1 + (k - 1) * m
    perms = list(itertools.permutations(range(n)))
    codes: set[tuple] = set()
    seen: set[tuple] = set()
    for chosen in labeled_hypertrees(k, m):
        key = relabel_code(chosen, range(n))
        if key in seen:
            continue
        orbit = {relabel_code(chosen, p) for p in perms}
        seen |= orbit
        codes.add(min(orbit))
    return codes


def quotient_rho(n: int, edges, orbits) -> float:
    """Largest eigenvalue of the orbit quotient of the distance matrix."""
    d = floyd_warshall(n, edges)
    orbits = [sorted(o) for o in orbits]
    q = np.array([[d[o[0], p].sum() for p in orbits] for o in orbits], dtype=float)
    return float(max(np.linalg.eigvals(q).real))


def labeled_count_by_orbit_stabilizer(n: int, reps) -> int:
    return sum(math.factorial(n) // len(brute_automorphisms(n, T.edges)) for T in reps)
