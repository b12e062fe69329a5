"""Distances, the distance matrix and its Perron pair.

Distances are hop counts in the 2-section (two vertices adjacent iff they
share an edge); a hypergraph path of length ``p`` uses ``p`` edges, so the two
notions coincide.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .errors import Disconnected, NoConvergence, NotUnit, VertexOutOfRange
from .hypergraph import Hypergraph

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 200_000
STALL_WINDOW = 1000
STALL_RATIO = 0.9999


@dataclass(frozen=True)
class DistanceMatrix:
    d: np.ndarray

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def to_csv(self) -> str:
        return "".join(",".join(str(int(x)) for x in row) + "\n" for row in self.d)


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    perron: np.ndarray
    residual: float
    iterations: int

    def to_dict(self) -> dict:
        return {
            "rho": self.rho,
            "perron": [float(x) for x in self.perron],
            "residual": self.residual,
            "iterations": self.iterations,
        }


def strictness_threshold(tol: float = DEFAULT_TOL) -> float:
    """Smallest gap reported as a strict inequality between two radii."""
    return max(1e-8, 10.0 * tol)


def distances_from(G: Hypergraph, u: int) -> np.ndarray:
    if not 0 <= u < G.n:
        raise VertexOutOfRange(f"vertex {u} not in 0..{G.n - 1}")
    dist = np.full(G.n, -1, dtype=np.int64)
    dist[u] = 0
    queue = deque([u])
    while queue:
        v = queue.popleft()
        for i in G.incident(v):
            for w in G.edges[i]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
    if (dist < 0).any():
        missing = int(np.flatnonzero(dist < 0)[0])
        raise Disconnected(f"vertex {missing} is unreachable from {u}")
    return dist


def distance_matrix(G: Hypergraph) -> DistanceMatrix:
    if G.n == 0:
        return DistanceMatrix(np.zeros((0, 0), dtype=np.int64))
    d = np.vstack([distances_from(G, u) for u in range(G.n)])
    d.setflags(write=False)
    return DistanceMatrix(d)


def diameter(G: Hypergraph) -> int:
    return int(distance_matrix(G).d.max())


def _power_iteration(
    d: np.ndarray, tol: float, max_iter: int, x0: np.ndarray | None
) -> SpectralResult:
    n = d.shape[0]
    if n == 1:
        return SpectralResult(0.0, np.ones(1), 0.0, 0)
    if n == 2:
        # [[0, d], [d, 0]] has eigenvalues +-d and is not primitive
        return SpectralResult(float(d[0, 1]), np.full(2, 2 ** -0.5), 0.0, 0)
    a = d.astype(np.float64)
    x = np.ones(n) if x0 is None else np.asarray(x0, dtype=np.float64).copy()
    if x.shape != (n,) or not (x > 0).all():
        raise ValueError("start vector must be positive with one entry per vertex")
    x /= np.linalg.norm(x)

    squared = False
    window_start = np.inf
    residual = np.inf
    for it in range(1, max_iter + 1):
        y = a @ x
        rho = float(x @ y)
        residual = float(np.abs(y - rho * x).max())
        if residual <= tol:
            return SpectralResult(rho, x, residual, it)
        if it % STALL_WINDOW == 0:
            # deterministic fallback: iterate on D^2 once progress stalls
            if not squared and residual > STALL_RATIO * window_start:
                squared = True
            window_start = residual
        if squared:
            y = a @ y
        x = y / np.linalg.norm(y)
    raise NoConvergence(f"residual {residual:.3e} > tol {tol:.1e} after {max_iter} iterations")


def spectral_radius(
    G: Hypergraph,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    x0: np.ndarray | None = None,
) -> SpectralResult:
    """Distance spectral radius and Perron vector by power iteration.

    Starts from the normalized all-ones vector unless ``x0`` is given. The
    distance matrix of a connected hypergraph on at least three vertices is
    nonnegative with a positive off-diagonal, so it is primitive and the
    iteration converges; two vertices are solved in closed form. Success is
    certified by the infinity-norm residual ``|Dx - rho x|`` dropping to ``tol``.

    Raises
    ------
    Disconnected
        If some vertex pair is at infinite distance.
    NoConvergence
        If ``max_iter`` iterations pass without reaching ``tol``.
    """
    if G.n == 0:
        raise Disconnected("empty hypergraph")
    return _power_iteration(distance_matrix(G).d, tol, max_iter, x0)


def rayleigh(D: DistanceMatrix, x: np.ndarray) -> float:
    x = np.asarray(x, dtype=np.float64)
    if abs(np.linalg.norm(x) - 1.0) > 1e-12:
        raise NotUnit(f"vector norm {np.linalg.norm(x):.15g} is not 1")
    if not (x >= 0).any():
        raise NotUnit("vector needs at least one nonnegative entry")
    return float(x @ (D.d @ x))


def sigma(G: Hypergraph, X: Iterable[int], r: SpectralResult) -> float:
    """Sum of Perron entries over the vertex subset ``X``."""
    X = set(X)
    for v in X:
        if not 0 <= v < G.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{G.n - 1}")
    return float(sum(r.perron[v] for v in sorted(X)))


def eigenequation_check(G: Hypergraph, r: SpectralResult, u: int) -> float:
    """``|rho x_u - sum_v d(u,v) x_v|`` at a single vertex."""
    row = distances_from(G, u)
    return abs(r.rho * r.perron[u] - float(row @ r.perron))
