import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import prufer_trees, random_graph, to_nx
from wsat.canon import CapExceeded, canonical_form, canonical_graph, enumerate_cores, enumerate_trees
from wsat.graph import Graph

# OEIS A000055
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106, 11: 235, 12: 551}


@pytest.mark.parametrize("n", range(2, 8))
def test_tree_classes_match_prufer(n):
    # brute force: canonical forms of all n^(n-2) labelled trees
    keys = {canonical_form(t) for t in prufer_trees(n)}
    ours = enumerate_trees(n)
    assert len(ours) == len(keys) == TREE_COUNTS[n]
    assert {canonical_form(t) for t in ours} == keys


@pytest.mark.parametrize("n", range(1, 13))
def test_tree_counts(n):
    trees = enumerate_trees(n)
    assert len(trees) == TREE_COUNTS[n]
    assert all(t.is_tree() and t.n == n for t in trees)


def _brute_cores(m):
    """All m-edge graphs without isolated vertices, up to isomorphism, by
    labelled enumeration on 2m vertices."""
    reps = []
    for v in range(2, 2 * m + 1):
        pairs = list(itertools.combinations(range(v), 2))
        for es in itertools.combinations(pairs, m):
            covered = {x for e in es for x in e}
            if len(covered) != v:
                continue
            h = nx.Graph(es)
            if not any(nx.is_isomorphic(h, r) for r in reps):
                reps.append(h)
        if v >= 8:  # labelled enumeration gets expensive; use the counts below
            break
    return reps


# graphs with m edges and no isolated vertices (OEIS A000664)
CORE_COUNTS = {1: 1, 2: 2, 3: 5, 4: 11, 5: 26, 6: 68, 7: 177, 8: 497}


@pytest.mark.parametrize("m", range(1, 4))
def test_cores_match_brute_force(m):
    brute = _brute_cores(m)
    ours = enumerate_cores(m)
    assert len(ours) == len(brute)
    for c in ours:
        assert c.m == m and not c.isolated_vertices()
        assert sum(nx.is_isomorphic(to_nx(c), b) for b in brute) == 1


@pytest.mark.parametrize("m", [4, 5])
def test_cores_pairwise_non_isomorphic(m):
    ours = enumerate_cores(m)
    assert len(ours) == CORE_COUNTS[m]
    hs = [to_nx(c) for c in ours]
    for a, b in itertools.combinations(hs, 2):
        assert not nx.is_isomorphic(a, b)


@pytest.mark.parametrize("m", range(1, 9))
def test_core_counts(m):
    assert len(enumerate_cores(m)) == CORE_COUNTS[m]


def test_core_vertex_restriction():
    cores = enumerate_cores(4, max_vertices=5)
    assert all(c.n <= 5 for c in cores)
    assert len(cores) == sum(1 for c in enumerate_cores(4) if c.n <= 5)


def test_core_edge_cap():
    with pytest.raises(ValueError):
        enumerate_cores(11)


def test_enumeration_order_is_canonical_and_stable():
    a = [canonical_form(c) for c in enumerate_cores(5)]
    assert a == sorted(a)
    assert [c.to_graph6() for c in enumerate_cores(5)] == [c.to_graph6() for c in enumerate_cores(5)]


def test_canonical_form_invariance_random(rng):
    for _ in range(200):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.random())
        perm = list(range(n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert canonical_form(g) == canonical_form(h)
        assert canonical_graph(g) == canonical_graph(h)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 10), st.integers(0, 2**32 - 1), st.integers(0, 2**32 - 1))
def test_canonical_form_distinguishes(n, s1, s2):
    g = random_graph(random.Random(s1), n, 0.4)
    h = random_graph(random.Random(s2), n, 0.4)
    same = canonical_form(g) == canonical_form(h)
    assert same == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_regular_graphs_hard_case():
    # Petersen versus a different cubic graph on ten vertices
    pet = Graph(10, nx.petersen_graph().edges())
    prism = Graph(10, nx.circular_ladder_graph(5).edges())
    assert canonical_form(pet) != canonical_form(prism)
    perm = [3, 7, 1, 0, 9, 2, 5, 8, 4, 6]
    assert canonical_form(pet) == canonical_form(pet.relabel(perm))


def test_cap():
    with pytest.raises(CapExceeded):
        canonical_form(Graph(17), cap=16)


@pytest.mark.parametrize("m", [4, 5, 6])
def test_cores_match_graph_atlas(m):
    # the atlas lists every graph on at most seven vertices
    atlas = [h for h in nx.graph_atlas_g()
             if h.number_of_edges() == m and h.number_of_nodes() > 0 and min(dict(h.degree()).values()) > 0]
    ours = enumerate_cores(m, max_vertices=7)
    assert len(ours) == len(atlas)
    for c in ours:
        assert sum(nx.is_isomorphic(to_nx(c), h) for h in atlas) == 1
