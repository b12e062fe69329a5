"""Numerical reproduction of the extremal results for k-uniform hypertrees.

Covers the full ranking of enumerated hypertrees (maximum, minimum, second
maximum, second minimum), the broom chain, ``B^3`` against ``F``, Perron
symmetry on automorphism orbits and the quintic whose largest root is the
radius of the double broom ``D_{n,a}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field


from ._parallel import pmap
from .enumeration import (
    CanonicalForm,
    automorphism_orbits,
    canonical_form,
    generate_hypertrees,
)
from .errors import BadA, NoRootFound, PreconditionViolated
from .families import (
    FamilySpec,
    broom,
    double_broom,
    double_broom_range,
    edge_count,
    f_graph,
    hyperstar,
    loose_path,
)
from .grafts import GraftReport, compare
from .hypergraph import Hypergraph, degrees
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL, diameter, spectral_radius, strictness_threshold
from .verdict import Verdict, classify

QUINTIC_AGREEMENT = 1e-6
ORBIT_TOLERANCE = 1e-8
BROOM_ENUMERATION_MAX_EDGES = 7


@dataclass(frozen=True)
class RankedClass:
    form: CanonicalForm
    rho: float
    max_degree: int
    tied_with_next: bool = False

    def to_dict(self) -> dict:
        return {
            "code": self.form.to_list(),
            "rho": self.rho,
            "max_degree": self.max_degree,
            "tied_with_next": self.tied_with_next,
        }


@dataclass(frozen=True)
class Claim:
    """One extremal statement checked against the ranking.

    ``gap`` is the smallest margin separating the witness from its neighbours
    in the ranking; ``matches`` says whether the witness is the predicted
    family member.
    """

    name: str
    verdict: Verdict
    expected: CanonicalForm | None = None
    witness: CanonicalForm | None = None
    matches: bool | None = None
    gap: float | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.verdict.value,
            "matches": self.matches,
            "gap": self.gap,
            "expected": self.expected.to_list() if self.expected else None,
            "witness": self.witness.to_list() if self.witness else None,
            "note": self.note,
        }


@dataclass(frozen=True)
class OrderingCertificate:
    k: int
    m: int
    ranked: tuple[RankedClass, ...]
    claims: tuple[Claim, ...]

    @property
    def n(self) -> int:
        return 1 + (self.k - 1) * self.m

    @property
    def passed(self) -> bool:
        return all(c.verdict.ok for c in self.claims)

    def claim(self, name: str) -> Claim:
        return next(c for c in self.claims if c.name == name)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "m": self.m,
            "n": self.n,
            "ranked": [r.to_dict() for r in self.ranked],
            "claims": [c.to_dict() for c in self.claims],
        }


def _rank(trees: list[Hypergraph], tol: float, max_iter: int) -> tuple[RankedClass, ...]:
    rhos = pmap(lambda T: spectral_radius(T, tol, max_iter).rho, trees)
    rows = sorted(
        ((rho, canonical_form(T), max(degrees(T), default=0)) for rho, T in zip(rhos, trees)),
        key=lambda row: (-row[0], row[1]),
    )
    threshold = strictness_threshold(tol)
    out = []
    for i, (rho, form, dmax) in enumerate(rows):
        tied = i + 1 < len(rows) and rho - rows[i + 1][0] <= threshold
        out.append(RankedClass(form, rho, dmax, tied))
    return tuple(out)


def _position_claim(
    name: str,
    ranked: tuple[RankedClass, ...],
    position: int,
    expected: Hypergraph,
    tol: float,
) -> Claim:
    """Check that ``ranked[position]`` is ``expected`` and strictly separated."""
    want = canonical_form(expected)
    if len(ranked) < 2:
        return Claim(name, Verdict.VACUOUS, want, note="fewer than two classes")
    idx = position % len(ranked)
    got = ranked[idx]
    margins = []
    if idx > 0:
        margins.append(ranked[idx - 1].rho - got.rho)
    if idx + 1 < len(ranked):
        margins.append(got.rho - ranked[idx + 1].rho)
    gap = min(margins)
    matches = got.form == want
    verdict = classify(gap, tol) if matches else Verdict.VIOLATION
    return Claim(name, verdict, want, got.form, matches, gap)


def verify_ordering(
    k: int, m: int, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> OrderingCertificate:
    """Rank every k-uniform hypertree with ``m`` edges by distance spectral radius.

    Claims checked: the loose path is the unique maximum and the hyperstar the
    unique minimum; for ``m >= 4`` the second maximum is ``F_{n,k}``; for
    ``m >= 3`` the second minimum is ``D_{n,1}``.
    """
    trees = generate_hypertrees(k, m)
    ranked = _rank(trees, tol, max_iter)
    n = 1 + (k - 1) * m
    claims = [
        _position_claim("max", ranked, 0, loose_path(n, k), tol),
        _position_claim("min", ranked, -1, hyperstar(n, k), tol),
    ]
    if m >= 4:
        claims.append(_position_claim("second-max", ranked, 1, f_graph(n, k), tol))
    else:
        claims.append(Claim("second-max", Verdict.VACUOUS, note="needs (n-1)/(k-1) >= 4"))
    if m >= 3:
        claims.append(_position_claim("second-min", ranked, -2, double_broom(n, k, 1), tol))
    else:
        claims.append(Claim("second-min", Verdict.VACUOUS, note="needs (n-1)/(k-1) >= 3"))
    return OrderingCertificate(k, m, ranked, tuple(claims))


@dataclass(frozen=True)
class BroomChainReport:
    n: int
    k: int
    entries: tuple[tuple[int, float], ...]
    steps: tuple[Claim, ...]
    argmax: tuple[Claim, ...] | None

    @property
    def passed(self) -> bool:
        claims = self.steps + (self.argmax or ())
        return all(c.verdict.ok for c in claims)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "entries": [{"delta": d, "rho": r} for d, r in self.entries],
            "steps": [c.to_dict() for c in self.steps],
            "argmax": None if self.argmax is None else [c.to_dict() for c in self.argmax],
        }


def verify_broom_chain(
    n: int, k: int, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> BroomChainReport:
    """``rho(B^delta)`` must strictly decrease over ``delta = 2..(n-1)/(k-1)``.

    When the hypertrees of this order can be enumerated (at most
    ``BROOM_ENUMERATION_MAX_EDGES`` edges), also checks that ``B^delta`` is the
    unique maximizer among hypertrees of maximum degree ``delta``.
    """
    m = edge_count(n, k)
    deltas = list(range(2, m + 1))
    rhos = pmap(lambda d: spectral_radius(broom(n, k, d), tol, max_iter).rho, deltas)
    entries = tuple(zip(deltas, rhos))
    steps = tuple(
        Claim(f"delta {d - 1}->{d}", classify(prev - cur, tol), gap=prev - cur)
        for (_, prev), (d, cur) in zip(entries, entries[1:])
    )
    argmax = None
    if m <= BROOM_ENUMERATION_MAX_EDGES:
        ranked = _rank(generate_hypertrees(k, m), tol, max_iter)
        argmax = []
        for d in deltas:
            group = tuple(r for r in ranked if r.max_degree == d)
            want = canonical_form(broom(n, k, d))
            if len(group) == 1:
                matches = group[0].form == want
                verdict = Verdict.VACUOUS if matches else Verdict.VIOLATION
                argmax.append(Claim(f"argmax delta={d}", verdict, want, group[0].form, matches,
                                    note="only class with this maximum degree"))
            else:
                argmax.append(_position_claim(f"argmax delta={d}", group, 0, broom(n, k, d), tol))
        argmax = tuple(argmax)
    return BroomChainReport(n, k, entries, steps, argmax)


def verify_f_vs_b3(
    n: int, k: int, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> GraftReport:
    """``rho(B^3_{n,k}) < rho(F_{n,k})`` for ``k >= 3`` and at least 3 edges."""
    m = edge_count(n, k)
    if k < 3 or m < 3:
        raise PreconditionViolated(f"needs k >= 3 and (n-1)/(k-1) >= 3, got k={k}, m={m}")
    return compare(
        FamilySpec("Broom", {"n": n, "k": k, "delta": 3}),
        FamilySpec("FGraph", {"n": n, "k": k}),
        tol,
        max_iter,
    )


def verify_orbit_symmetry(G: Hypergraph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> float:
    """Largest spread of Perron entries inside one automorphism orbit."""
    x = spectral_radius(G, tol, max_iter).perron
    worst = 0.0
    for orbit in automorphism_orbits(G).orbits:
        values = x[sorted(orbit)]
        worst = max(worst, float(values.max() - values.min()))
    return worst


# --- the double-broom quintic ----------------------------------------------


def quintic_coefficients(k: int, a: int, b: int) -> tuple[int, ...]:
    """Integer coefficients of ``g_a(t)``, highest degree first."""
    return (
        -1,
        2 * a * k + 2 * b * k - k - 2 * a - 2 * b - 3,
        k**2 + 4 * a * k**2 + 4 * b * k**2 + 5 * a * b * k**2 - 10 * a * b * k
        - a * k - b * k - 4 * k + 5 * a * b - 3 * a - 3 * b - 3,
        k**3 + 3 * a * b * k**3 + 2 * a * k**3 + 2 * b * k**3 + k**2 - 3 * a * b * k**2
        + 4 * a * k**2 + 4 * b * k**2 - 3 * a * b * k - 5 * a * k - 5 * b * k - 5 * k
        + 3 * a * b - a - b - 1,
        2 * k**3 + 2 * a * b * k**3 + 3 * a * k**3 + 3 * b * k**3 - k**2 - 4 * a * b * k**2
        - a * k**2 - b * k**2 + 2 * a * b * k - 2 * a * k - 2 * b * k - 2 * k,
        k**3 + a * k**3 + b * k**3 - k**2 - a * k**2 - b * k**2,
    )


@dataclass(frozen=True)
class QuinticSpec:
    k: int
    n: int
    a: int
    b: int
    coefficients: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "coefficients", quintic_coefficients(self.k, self.a, self.b))

    @classmethod
    def for_double_broom(cls, n: int, k: int, a: int) -> QuinticSpec:
        if a not in double_broom_range(n, k) or edge_count(n, k) < 3:
            raise BadA(f"a={a} is not admissible for n={n}, k={k}")
        return cls(k, n, a, (n - k) // (k - 1) - a)


def quintic_eval(spec: QuinticSpec, t: float) -> float:
    acc = 0.0
    for c in spec.coefficients:
        acc = acc * t + c
    return acc


def quintic_largest_root(spec: QuinticSpec, grid: int = 4096, xtol: float = 1e-12) -> float:
    """Largest real root of ``g_a``.

    Scans a grid downward from ``(n-1) * diam(D_{n,a})`` (a bound on the radius)
    to 0; the first step where ``g`` turns from negative to nonnegative
    brackets the root, which bisection then narrows to ``xtol``.
    """
    upper = float((spec.n - 1) * diameter(double_broom(spec.n, spec.k, spec.a)))
    hi = upper
    g_hi = quintic_eval(spec, hi)
    if g_hi == 0.0:
        return hi
    if g_hi > 0.0:
        raise NoRootFound(f"g({hi}) > 0: the bound does not exceed the largest root")
    lo = None
    for i in range(1, grid + 1):
        t = upper * (1.0 - i / grid)
        g = quintic_eval(spec, t)
        if g >= 0.0:
            lo = t
            if g == 0.0:
                return t
            break
        hi = t
    if lo is None:
        raise NoRootFound("no sign change between 0 and the upper bound")
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if quintic_eval(spec, mid) >= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def quintic_difference_identity(n: int, k: int, a: int) -> bool:
    """``g_a - g_{a-1} == (b+1-a)(k-1)^2 t (5t^2 + (3k+3)t + 2k)`` coefficientwise,
    where ``g_{a-1}`` is taken with ``b+1`` (the total edge count is fixed)."""
    cur = QuinticSpec.for_double_broom(n, k, a)
    prev = QuinticSpec.for_double_broom(n, k, a - 1)
    diff = tuple(x - y for x, y in zip(cur.coefficients, prev.coefficients))
    scale = (cur.b + 1 - a) * (k - 1) ** 2
    return diff == (0, 0, 5 * scale, (3 * k + 3) * scale, 2 * k * scale, 0)


@dataclass(frozen=True)
class QuinticReport:
    n: int
    k: int
    entries: tuple[tuple[int, float, float], ...]  # (a, power iteration, quintic root)
    steps: tuple[Claim, ...]
    identities: tuple[tuple[int, bool], ...]

    @property
    def max_disagreement(self) -> float:
        return max((abs(p - q) for _, p, q in self.entries), default=0.0)

    @property
    def passed(self) -> bool:
        return (
            all(c.verdict.ok for c in self.steps)
            and all(ok for _, ok in self.identities)
            and self.max_disagreement <= QUINTIC_AGREEMENT
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "entries": [{"a": a, "rho_power": p, "rho_quintic": q} for a, p, q in self.entries],
            "steps": [c.to_dict() for c in self.steps],
            "identities": [{"a": a, "holds": ok} for a, ok in self.identities],
            "max_disagreement": self.max_disagreement,
        }


def _worst(*verdicts: Verdict) -> Verdict:
    order = [Verdict.VACUOUS, Verdict.STRICT_PASS, Verdict.INDISTINGUISHABLE, Verdict.VIOLATION]
    return max(verdicts, key=order.index)


def verify_quintic_monotone(
    n: int, k: int, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> QuinticReport:
    """``rho(D_{n,a})`` strictly increasing in ``a``, by both routes."""
    a_values = list(double_broom_range(n, k)) if edge_count(n, k) >= 3 else []

    def row(a: int) -> tuple[int, float, float]:
        power = spectral_radius(double_broom(n, k, a), tol, max_iter).rho
        return a, power, quintic_largest_root(QuinticSpec.for_double_broom(n, k, a))

    entries = tuple(pmap(row, a_values))
    steps = []
    for (a0, p0, q0), (a1, p1, q1) in zip(entries, entries[1:]):
        verdict = _worst(classify(p1 - p0, tol), classify(q1 - q0, tol))
        steps.append(Claim(f"a {a0}->{a1}", verdict, gap=min(p1 - p0, q1 - q0)))
    identities = tuple((a, quintic_difference_identity(n, k, a)) for a in a_values[1:])
    return QuinticReport(n, k, entries, tuple(steps), identities)


def family_instances(n: int, k: int) -> list[tuple[str, Hypergraph]]:
    """Every named family member of order ``n`` (used for orbit checks)."""
    m = edge_count(n, k)
    out = [("P", loose_path(n, k)), ("S", hyperstar(n, k))]
    out += [(f"B^{d}", broom(n, k, d)) for d in range(2, m + 1)]
    if m >= 3:
        out.append(("F", f_graph(n, k)))
        out += [(f"D_a={a}", double_broom(n, k, a)) for a in double_broom_range(n, k)]
    return out


THEOREMS = ("max", "min", "second-max", "second-min", "broom", "quintic", "orbit")


def run_verification(
    k: int,
    m: int,
    theorems: tuple[str, ...] = THEOREMS,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> dict:
    """Run the selected checks at one size and collect a JSON-ready summary."""
    n = 1 + (k - 1) * m
    out: dict = {"k": k, "m": m, "n": n, "results": {}}
    results = out["results"]
    verdicts: list[bool] = []
    ordering = {"max", "min", "second-max", "second-min"} & set(theorems)
    if ordering:
        cert = verify_ordering(k, m, tol, max_iter)
        out["ranked"] = [r.to_dict() for r in cert.ranked]
        for name in ("max", "min", "second-max", "second-min"):
            if name in theorems:
                claim = cert.claim(name)
                results[name] = claim.to_dict()
                verdicts.append(claim.verdict.ok)
    if "broom" in theorems:
        if m >= 2:
            report = verify_broom_chain(n, k, tol, max_iter)
            results["broom"] = report.to_dict()
            verdicts.append(report.passed)
        else:
            results["broom"] = {"verdict": Verdict.VACUOUS.value}
    if "quintic" in theorems:
        report = verify_quintic_monotone(n, k, tol, max_iter)
        results["quintic"] = report.to_dict()
        verdicts.append(report.passed)
    if "orbit" in theorems:
        rows = []
        graphs = family_instances(n, k) + [
            (f"class {i}", T) for i, T in enumerate(generate_hypertrees(k, m))
        ]
        for name, G in graphs:
            if G.n < 2:
                continue
            dev = verify_orbit_symmetry(G, tol, max_iter)
            rows.append({"instance": name, "deviation": dev, "ok": dev <= ORBIT_TOLERANCE})
            verdicts.append(dev <= ORBIT_TOLERANCE)
        results["orbit"] = rows
    out["passed"] = all(verdicts)
    return out
