import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperspec.enumeration import (
    CanonicalForm,
    are_isomorphic,
    automorphism_orbits,
    canonical_form,
    canonical_labeling,
    canonical_relabel,
    generate_hypertrees,
    permute,
)
from hyperspec.errors import EnumerationTooLarge
from hyperspec.families import broom, double_broom, f_graph, hyperstar, loose_path
from hyperspec.hypergraph import Hypergraph, build, is_hypertree, relabel

from _oracles import (
    brute_classes,
    brute_code,
    brute_orbits,
    labeled_count_by_orbit_stabilizer,
    labeled_hypertrees,
)
from _strategies import hypertrees, small_hypergraphs

# class counts measured by the brute-force oracle, then frozen
BRUTE_COUNTS = {(2, 1): 1, (2, 2): 1, (2, 3): 2, (2, 4): 3, (2, 5): 6, (3, 1): 1, (3, 2): 1, (3, 3): 2}


def test_canonical_examples():
    P = loose_path(7, 3)
    rng = random.Random(1)
    for _ in range(20):
        perm = list(range(7))
        rng.shuffle(perm)
        assert canonical_form(relabel(P, perm)) == canonical_form(P)
    assert canonical_form(P) != canonical_form(hyperstar(7, 3))
    codes = {canonical_form(build(4, [list(p)])) for p in itertools.permutations(range(4))}
    assert len(codes) == 1


def test_canonical_labeling_reproduces_code():
    G = double_broom(13, 3, 2)
    form, perm = canonical_labeling(G)
    assert tuple(sorted(relabel(G, perm).edges)) == form.code[1]
    assert canonical_relabel(G).edge_set == set(form.code[1])
    assert form.to_hypergraph(3) == canonical_relabel(G)
    assert form.to_list()[0] == 13


def test_isomorphism_examples():
    assert are_isomorphic(broom(13, 3, 2), loose_path(13, 3))
    assert are_isomorphic(double_broom(7, 3, 1), loose_path(7, 3))
    assert not are_isomorphic(loose_path(9, 3), f_graph(9, 3))
    assert not are_isomorphic(loose_path(9, 3), loose_path(7, 3))


def test_orbit_examples():
    S = automorphism_orbits(hyperstar(9, 3))
    assert set(S.orbits) == {frozenset({0}), frozenset(range(1, 9))}
    assert len(automorphism_orbits(build(4, [[0, 1, 2, 3]]))) == 1
    D = automorphism_orbits(double_broom(11, 3, 1))
    assert set(D.orbits) == {
        frozenset({0}), frozenset({1}), frozenset({2}), frozenset({3, 4}), frozenset(range(5, 11))
    }
    assert automorphism_orbits(Hypergraph(0)).orbits == ()


def test_asymmetric_tree_has_singleton_orbits():
    # smallest asymmetric tree: spider with legs 1, 2, 3 plus nothing else
    T = build(7, [[0, 1], [0, 2], [2, 3], [0, 4], [4, 5], [5, 6]])
    assert all(len(o) == 1 for o in automorphism_orbits(T).orbits)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(small_hypergraphs(n=n), small_hypergraphs(n=n))))
def test_isomorphism_matches_brute_force(pair):
    G, H = pair
    same = brute_code(G.n, G.edges) == brute_code(H.n, H.edges)
    assert are_isomorphic(G, H) == same


@settings(max_examples=150, deadline=None)
@given(small_hypergraphs(max_n=7))
def test_orbits_match_brute_force(G):
    assert set(automorphism_orbits(G).orbits) == brute_orbits(G.n, G.edges)


@settings(max_examples=60, deadline=None)
@given(hypertrees(max_edges=4).filter(lambda T: T.n <= 7))
def test_tree_orbits_match_brute_force(T):
    assert set(automorphism_orbits(T).orbits) == brute_orbits(T.n, T.edges)


@settings(max_examples=40, deadline=None)
@given(hypertrees(max_edges=6), st.randoms(use_true_random=False))
def test_canonical_form_is_permutation_invariant(T, rnd):
    form = canonical_form(T)
    for _ in range(100):
        perm = list(range(T.n))
        rnd.shuffle(perm)
        assert canonical_form(permute(T, perm)) == form


@pytest.mark.parametrize("km", sorted(BRUTE_COUNTS))
def test_generation_matches_brute_force(km):
    k, m = km
    n = 1 + (k - 1) * m
    trees = generate_hypertrees(k, m)
    oracle = brute_classes(k, m)
    assert len(oracle) == BRUTE_COUNTS[km]
    assert {brute_code(n, T.edges) for T in trees} == oracle


@pytest.mark.parametrize("m", [6, 7])
def test_tree_counts_by_orbit_stabilizer(m):
    # sum of n!/|Aut| over classes must equal Cayley's n^(n-2) labeled trees
    n = m + 1
    trees = generate_hypertrees(2, m)
    assert labeled_count_by_orbit_stabilizer(n, trees) == n ** (n - 2)


def test_labeled_three_uniform_count():
    trees = generate_hypertrees(3, 3)
    assert labeled_count_by_orbit_stabilizer(7, trees) == sum(1 for _ in labeled_hypertrees(3, 3))


@pytest.mark.parametrize("k, m, count", [(2, 6, 11), (2, 7, 23), (2, 8, 47), (3, 4, 4), (3, 5, 8), (4, 4, 4)])
def test_known_counts(k, m, count):
    assert len(generate_hypertrees(k, m)) == count


@pytest.mark.parametrize("k, m", [(2, 5), (3, 4), (4, 4), (3, 6)])
def test_generated_hypertrees_are_valid_and_distinct(k, m):
    trees = generate_hypertrees(k, m)
    forms = [canonical_form(T) for T in trees]
    assert forms == sorted(set(forms))
    for T in trees:
        assert is_hypertree(T) and T.n == 1 + (k - 1) * m
        for e, f in itertools.combinations(T.edges, 2):
            assert len(set(e) & set(f)) <= 1


def test_generation_limits():
    with pytest.raises(EnumerationTooLarge):
        generate_hypertrees(2, 10)
    with pytest.raises(EnumerationTooLarge):
        generate_hypertrees(4, 9)
    assert generate_hypertrees(3, 0) == [Hypergraph(1, (), 3)]
    with pytest.raises(ValueError):
        generate_hypertrees(1, 2)


def test_canonical_form_orders():
    a, b = CanonicalForm((3, ((0, 1), (1, 2)))), CanonicalForm((3, ((0, 1), (0, 2))))
    assert sorted([a, b])[0] == b


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.tuples(small_hypergraphs(n=n), st.permutations(range(n)))))
def test_permuted_copies_are_isomorphic(pair):
    G, perm = pair
    H = relabel(G, perm)
    assert are_isomorphic(G, H)
    assert set(automorphism_orbits(H).orbits) == {
        frozenset(perm[v] for v in o) for o in automorphism_orbits(G).orbits
    }
