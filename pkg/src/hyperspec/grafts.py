"""Edge moving and the three graft transformations, each checked numerically.

Every graft compares the radius of two constructions and classifies the
signed gap (oriented so that the proved direction is positive):

* ``StrictPass``        gap >  threshold
* ``Indistinguishable`` |gap| <= threshold
* ``Violation``         gap < -threshold

with ``threshold = max(1e-8, 10 * tol)``.
"""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass, field, replace

from .errors import (
    ComponentHypothesisFailed,
    NotUniform,
    PreconditionViolated,
    ResultingDuplicateEdge,
    VertexOutOfRange,
)
from .families import FamilySpec, g_es, hyperstar_parts, split_anchor
from .hypergraph import Hypergraph, components, degree, delete_edge, is_connected
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL, spectral_radius
from .verdict import Verdict, classify
from ._parallel import pmap


@dataclass(frozen=True)
class GraftReport:
    before_rho: float
    after_rho: float
    gap: float
    verdict: Verdict
    construction: tuple[FamilySpec, FamilySpec]
    seed: int | None = None
    hypothesis_met: bool = True

    def to_dict(self) -> dict:
        return {
            "before_rho": self.before_rho,
            "after_rho": self.after_rho,
            "gap": self.gap,
            "verdict": self.verdict.value,
            "hypothesis_met": self.hypothesis_met,
            "seed": self.seed,
            "construction": [spec.to_dict() for spec in self.construction],
        }


def compare(
    before: FamilySpec,
    after: FamilySpec,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: int | None = None,
) -> GraftReport:
    """Report for the claim ``rho(after) > rho(before)``."""
    rb = spectral_radius(before.build(), tol, max_iter).rho
    ra = spectral_radius(after.build(), tol, max_iter).rho
    gap = ra - rb
    return GraftReport(rb, ra, gap, classify(gap, tol), (before, after), seed)


def move_edges(G: Hypergraph, edge_ids: Sequence[int], v: int, u: int) -> Hypergraph:
    """Replace each selected edge ``e`` by ``(e - {v}) | {u}``; vertex set kept."""
    for w in (u, v):
        if not 0 <= w < G.n:
            raise VertexOutOfRange(f"vertex {w} not in 0..{G.n - 1}")
    chosen = set(edge_ids)
    edges = list(G.edges)
    for i in sorted(chosen):
        if not 0 <= i < G.m:
            raise PreconditionViolated(f"edge index {i} not in 0..{G.m - 1}")
        e = edges[i]
        if u in e or v not in e:
            raise PreconditionViolated(
                f"edge {i} = {list(e)} must contain {v} and avoid {u}"
            )
        edges[i] = tuple(sorted((set(e) - {v}) | {u}))
    if len(set(edges)) != len(edges):
        raise ResultingDuplicateEdge("moving the edges creates a repeated edge")
    return Hypergraph(G.n, tuple(edges), G.k)


def _check_base(G: Hypergraph, min_edges: int) -> None:
    if G.k is None:
        raise NotUniform("grafts need a k-uniform hypergraph")
    if G.m < min_edges:
        raise PreconditionViolated(f"need at least {min_edges} edge(s), have {G.m}")
    if not is_connected(G):
        raise PreconditionViolated("base hypergraph must be connected")


def _pendant_spec(G: Hypergraph, u: int, v: int, p: int, q: int) -> FamilySpec:
    return FamilySpec("TwoPendantAttach", {"base": FamilySpec.explicit(G), "u": u, "v": v, "p": p, "q": q})


def graft1(
    G: Hypergraph,
    u: int,
    p: int,
    q: int,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: int | None = None,
) -> GraftReport:
    """Two pendant paths at one vertex: ``G_u(p, q)`` against ``G_u(p+1, q-1)``."""
    _check_base(G, 1)
    if not 0 <= u < G.n:
        raise VertexOutOfRange(f"vertex {u} not in 0..{G.n - 1}")
    if not p >= q >= 1:
        raise PreconditionViolated(f"need p >= q >= 1, got p={p}, q={q}")
    return compare(_pendant_spec(G, u, u, p, q), _pendant_spec(G, u, u, p + 1, q - 1), tol, max_iter, seed)


@dataclass(frozen=True)
class Graft2Report:
    """Both moves away from ``G_{u,v}(p, q)``; at least one must raise rho."""

    forward: GraftReport  # towards (p+1, q-1)
    backward: GraftReport  # towards (p-1, q+1)
    forward_required: bool  # d(u) = d(v) = 1 and p >= q: forward alone must pass
    verdict: Verdict = field(init=False)

    def __post_init__(self):
        if self.forward_required:
            verdict = self.forward.verdict
        else:
            pair = {self.forward.verdict, self.backward.verdict}
            if Verdict.STRICT_PASS in pair:
                verdict = Verdict.STRICT_PASS
            elif pair == {Verdict.VIOLATION}:
                verdict = Verdict.VIOLATION
            else:
                verdict = Verdict.INDISTINGUISHABLE
        object.__setattr__(self, "verdict", verdict)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "forward_required": self.forward_required,
            "forward": self.forward.to_dict(),
            "backward": self.backward.to_dict(),
        }


def graft2(
    G: Hypergraph,
    u: int,
    v: int,
    e: int,
    p: int,
    q: int,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: int | None = None,
) -> Graft2Report:
    """Pendant paths at two vertices of one edge ``e``.

    Requires ``G - e`` to have exactly ``k`` components.
    """
    _check_base(G, 2)
    if not 0 <= e < G.m:
        raise PreconditionViolated(f"edge index {e} not in 0..{G.m - 1}")
    if u == v or u not in G.edges[e] or v not in G.edges[e]:
        raise PreconditionViolated(f"u={u} and v={v} must be distinct vertices of edge {e}")
    if p < 1 or q < 1:
        raise PreconditionViolated(f"need p, q >= 1, got p={p}, q={q}")
    parts = len(components(delete_edge(G, e)))
    if parts != G.k:
        raise ComponentHypothesisFailed(f"G - e has {parts} components, need k={G.k}")
    here = _pendant_spec(G, u, v, p, q)
    forward = compare(here, _pendant_spec(G, u, v, p + 1, q - 1), tol, max_iter, seed)
    backward = compare(here, _pendant_spec(G, u, v, p - 1, q + 1), tol, max_iter, seed)
    forward_required = degree(G, u) == 1 and degree(G, v) == 1 and p >= q
    return Graft2Report(forward, backward, forward_required)


def graft3(
    G: Hypergraph,
    e: int,
    s: int,
    parts: Sequence[tuple[Hypergraph, int]],
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: int | None = None,
) -> GraftReport:
    """Moving the first ``s`` parts from their own anchors onto ``w_k``.

    Claim: ``rho(G_{e,0}) > rho(G_{e,s})`` whenever some part ``j <= s`` has an
    edge. With only trivial parts the two sides coincide; the report is then
    ``Indistinguishable`` with ``hypothesis_met=False``.
    """
    _check_base(G, 2)
    split_anchor(G, e)
    nontrivial = [i for i, (H, _) in enumerate(parts, start=1) if H.m >= 1]
    if nontrivial and not nontrivial[0] <= s <= G.k - 1:
        raise PreconditionViolated(f"need j={nontrivial[0]} <= s={s} <= {G.k - 1}")
    H0 = g_es(G, e, 0, parts)
    Hs = g_es(G, e, s, parts)
    spec0 = FamilySpec.explicit(H0)
    specs = FamilySpec.explicit(Hs)
    r0 = spectral_radius(H0, tol, max_iter).rho
    rs = spectral_radius(Hs, tol, max_iter).rho
    gap = r0 - rs
    verdict = classify(gap, tol)
    return GraftReport(rs, r0, gap, verdict, (specs, spec0), seed, hypothesis_met=bool(nontrivial))


def graft3_stars(G: Hypergraph, e: int, s: int, ts: Sequence[int], **kwargs) -> GraftReport:
    """:func:`graft3` with hyperstar parts of ``t_i`` edges rooted at their centers."""
    if G.k is None:
        raise NotUniform("grafts need a k-uniform hypergraph")
    report = graft3(G, e, s, hyperstar_parts(ts, G.k), **kwargs)
    base = FamilySpec.explicit(G)
    specs = tuple(FamilySpec("EdgeSplit", {"base": base, "e": e, "s": x, "t": list(ts)}) for x in (s, 0))
    return replace(report, construction=specs)


# --- random campaigns -------------------------------------------------------


def random_hypertree(k: int, m: int, rng: random.Random) -> Hypergraph:
    """Each new edge hangs off a uniformly chosen existing vertex."""
    edges: list[tuple[int, ...]] = []
    n = 1
    for _ in range(m):
        u = rng.randrange(n)
        edges.append((u,) + tuple(range(n, n + k - 1)))
        n += k - 1
    return Hypergraph(n, tuple(edges), k)


def _instance_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_graft1(seed: int, tol: float = DEFAULT_TOL) -> GraftReport:
    rng = _instance_rng(seed)
    k = rng.choice((2, 3, 4))
    G = random_hypertree(k, rng.randint(1, 13 // (k - 1)), rng)
    q = rng.randint(1, 3)
    p = rng.randint(q, 4)
    return graft1(G, rng.randrange(G.n), p, q, tol=tol, seed=seed)


def random_graft2(seed: int, tol: float = DEFAULT_TOL) -> Graft2Report:
    rng = _instance_rng(seed)
    k = rng.choice((2, 3, 4))
    G = random_hypertree(k, rng.randint(2, 13 // (k - 1)), rng)
    e = rng.randrange(G.m)
    u, v = rng.sample(G.edges[e], 2)
    return graft2(G, u, v, e, rng.randint(1, 4), rng.randint(1, 4), tol=tol, seed=seed)


def random_graft3(seed: int, tol: float = DEFAULT_TOL) -> GraftReport:
    rng = _instance_rng(seed)
    k = rng.choice((2, 3, 4))
    G = random_hypertree(k, rng.randint(2, 13 // (k - 1)), rng)
    anchors = []
    for i, edge in enumerate(G.edges):
        high = [w for w in edge if degree(G, w) >= 2]
        if len(high) == 1:
            anchors.append(i)
    e = rng.choice(anchors)
    parts = []
    for _ in range(k - 1):
        H = random_hypertree(k, rng.randint(0, 3), rng)
        parts.append((H, rng.randrange(H.n)))
    if all(H.m == 0 for H, _ in parts):
        j = rng.randrange(k - 1)
        H = random_hypertree(k, rng.randint(1, 3), rng)
        parts[j] = (H, rng.randrange(H.n))
    j = next(i for i, (H, _) in enumerate(parts, start=1) if H.m)
    return graft3(G, e, rng.randint(j, k - 1), parts, tol=tol, seed=seed)


CAMPAIGNS = {1: random_graft1, 2: random_graft2, 3: random_graft3}


@dataclass(frozen=True)
class CampaignSummary:
    graft_type: int
    reports: tuple
    counts: dict[str, int]

    @property
    def violations(self) -> int:
        return self.counts.get(Verdict.VIOLATION.value, 0)

    @property
    def indistinguishable(self) -> list:
        return [r for r in self.reports if r.verdict is Verdict.INDISTINGUISHABLE]

    def to_dict(self) -> dict:
        return {
            "graft_type": self.graft_type,
            "instances": len(self.reports),
            "counts": self.counts,
            "indistinguishable": [
                {"seed": r.forward.seed if isinstance(r, Graft2Report) else r.seed,
                 "gap": (r.forward.gap if isinstance(r, Graft2Report) else r.gap)}
                for r in self.indistinguishable
            ],
        }


def run_campaign(graft_type: int, count: int = 100, seed: int = 0, tol: float = DEFAULT_TOL) -> CampaignSummary:
    """Run ``count`` random admissible instances with seeds ``seed..seed+count-1``."""
    make = CAMPAIGNS[graft_type]
    reports = tuple(pmap(lambda s: make(s, tol), range(seed, seed + count)))
    counts = {v.value: 0 for v in (Verdict.STRICT_PASS, Verdict.INDISTINGUISHABLE, Verdict.VIOLATION)}
    for r in reports:
        counts[r.verdict.value] += 1
    return CampaignSummary(graft_type, reports, counts)
