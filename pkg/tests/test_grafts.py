import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hyperspec.enumeration import are_isomorphic
from hyperspec.errors import (
    BadAnchorDegrees,
    ComponentHypothesisFailed,
    PreconditionViolated,
    ResultingDuplicateEdge,
)
from hyperspec.families import FamilySpec, hyperstar, hyperstar_parts, loose_path, two_pendant_paths
from hyperspec.grafts import (
    Graft2Report,
    compare,
    graft1,
    graft2,
    graft3,
    graft3_stars,
    move_edges,
    random_graft1,
    random_graft2,
    random_graft3,
    random_hypertree,
    run_campaign,
)
from hyperspec.hypergraph import build, is_hypertree
from hyperspec.spectral import spectral_radius
from hyperspec.verdict import Verdict, classify

from _oracles import dense_rho
from _strategies import hypertrees


def test_classify():
    assert classify(2e-8) is Verdict.STRICT_PASS
    assert classify(1e-8) is Verdict.INDISTINGUISHABLE
    assert classify(-1e-8) is Verdict.INDISTINGUISHABLE
    assert classify(-2e-8) is Verdict.VIOLATION
    assert classify(5e-6, tol=1e-6) is Verdict.INDISTINGUISHABLE
    assert Verdict.VACUOUS.ok and not Verdict.INDISTINGUISHABLE.ok


def test_move_edges_examples():
    S = hyperstar(7, 3)
    P = move_edges(S, [2], 0, 1)
    assert are_isomorphic(P, loose_path(7, 3))
    assert move_edges(S, [], 0, 1) == S
    with pytest.raises(PreconditionViolated):
        move_edges(S, [0], 0, 1)
    with pytest.raises(PreconditionViolated):
        move_edges(S, [0], 3, 5)


def test_move_edges_duplicate():
    G = build(4, [[0, 1], [0, 2], [1, 2], [2, 3]])
    with pytest.raises(ResultingDuplicateEdge):
        move_edges(G, [0], 0, 2)


@settings(max_examples=80, deadline=None)
@given(hypertrees(min_edges=2), st.data())
def test_move_edges_inverse_restores(T, data):
    v = data.draw(st.integers(0, T.n - 1))
    movable = [i for i in T.incident(v)]
    chosen = data.draw(st.lists(st.sampled_from(movable), unique=True, max_size=len(movable)))
    u = data.draw(st.integers(0, T.n - 1))
    assume(u != v and not any(u in T.edges[i] for i in chosen))
    try:
        G = move_edges(T, chosen, v, u)
    except ResultingDuplicateEdge:
        assume(False)
    assert (G.n, G.m, G.k) == (T.n, T.m, T.k)
    assert are_isomorphic(move_edges(G, chosen, u, v), T)


def test_graft1_examples():
    for k in (2, 3, 4):
        r = graft1(hyperstar(k, k), 0, 1, 1)
        assert r.verdict is Verdict.STRICT_PASS
    r = graft1(hyperstar(3, 3), 1, 2, 1)
    assert r.verdict is Verdict.STRICT_PASS and r.gap > 1e-8
    with pytest.raises(PreconditionViolated):
        graft1(hyperstar(3, 3), 1, 2, 0)
    with pytest.raises(PreconditionViolated):
        graft1(hyperstar(3, 3), 1, 1, 2)


def test_graft1_gap_matches_dense_oracle():
    G = loose_path(7, 3)
    r = graft1(G, 3, 2, 1)
    before = two_pendant_paths(G, 3, 3, 2, 1)
    after = two_pendant_paths(G, 3, 3, 3, 0)
    assert r.before_rho == pytest.approx(dense_rho(before.n, before.edges), abs=1e-8)
    assert r.after_rho == pytest.approx(dense_rho(after.n, after.edges), abs=1e-8)
    assert r.construction[0].build() == before


@pytest.mark.parametrize("k", [2, 3])
def test_graft1_telescoping(k):
    G = loose_path(1 + 2 * (k - 1), k)
    total = 6
    rhos = [
        spectral_radius(two_pendant_paths(G, 1, 1, p, total - p)).rho for p in range(total // 2, total + 1)
    ]
    assert all(b - a > 1e-8 for a, b in zip(rhos, rhos[1:]))


def test_graft2_examples():
    P = loose_path(7, 3)
    for u, v in [(3, 2), (3, 4), (2, 4)]:
        rep = graft2(P, u, v, 1, 1, 1)
        assert isinstance(rep, Graft2Report)
        assert Verdict.STRICT_PASS in {rep.forward.verdict, rep.backward.verdict}
        assert rep.verdict is Verdict.STRICT_PASS


def test_graft2_leaf_anchors_force_forward_move():
    P = loose_path(5, 3)
    for p, q in [(1, 1), (2, 1), (3, 2)]:
        rep = graft2(P, 0, 1, 0, p, q)
        assert rep.forward_required
        assert rep.forward.verdict is Verdict.STRICT_PASS


def test_graft2_hypotheses():
    cyclic = build(5, [[0, 1], [1, 2], [2, 3], [3, 0], [3, 4]])
    with pytest.raises(ComponentHypothesisFailed):
        graft2(cyclic, 0, 1, 0, 1, 1)
    with pytest.raises(PreconditionViolated):
        graft2(loose_path(7, 3), 0, 3, 1, 1, 1)
    with pytest.raises(PreconditionViolated):
        graft2(loose_path(7, 3), 3, 4, 1, 0, 1)


def test_graft3_examples():
    P = loose_path(9, 3)
    r = graft3_stars(P, 0, 1, [2, 1])
    assert r.verdict is Verdict.STRICT_PASS and r.hypothesis_met
    assert r.construction[0].kind == "EdgeSplit"
    assert r.construction[1].build() == FamilySpec.from_dict(r.construction[1].to_dict()).build()
    trivial = graft3_stars(P, 0, 2, [0, 0])
    assert trivial.verdict is Verdict.INDISTINGUISHABLE and not trivial.hypothesis_met
    assert trivial.gap == 0
    with pytest.raises(PreconditionViolated):
        graft3_stars(P, 0, 1, [0, 2])
    with pytest.raises(BadAnchorDegrees):
        graft3_stars(P, 1, 1, [1, 1])


def test_graft3_general_parts():
    P = loose_path(7, 3)
    parts = [(loose_path(5, 3), 4), hyperstar_parts([1], 3)[0]]
    r = graft3(P, 2, 2, parts)
    assert r.verdict is Verdict.STRICT_PASS
    assert is_hypertree(r.construction[0].build())


def test_compare_direction():
    r = compare(FamilySpec("HyperStar", {"n": 7, "k": 3}), FamilySpec("LoosePath", {"n": 7, "k": 3}))
    assert r.gap > 0 and r.verdict is Verdict.STRICT_PASS
    flipped = compare(r.construction[1], r.construction[0])
    assert flipped.verdict is Verdict.VIOLATION


def test_random_instances_are_seeded():
    import random

    assert random_hypertree(3, 4, random.Random(5)) == random_hypertree(3, 4, random.Random(5))
    assert random_graft1(7).to_dict() == random_graft1(7).to_dict()
    assert random_graft2(7).forward.seed == 7
    r3 = random_graft3(11)
    assert r3.seed == 11 and r3.hypothesis_met


@pytest.mark.parametrize("graft_type", [1, 2, 3])
def test_small_campaign(graft_type):
    summary = run_campaign(graft_type, count=20, seed=1000)
    assert summary.violations == 0
    assert sum(summary.counts.values()) == 20
    assert summary.to_dict()["instances"] == 20
