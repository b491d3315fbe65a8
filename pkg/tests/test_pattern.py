import pytest

from wsat.canon import enumerate_trees
from wsat.graph import Graph, caterpillar, parse_graph_spec, path_graph, star_graph
from wsat.pattern import NotATree, Pattern, caterpillar_of, end_stars, tree_features
from wsat.structures import find_even_path, find_p2_leaf, find_six_vertex


def feats(spec):
    return tree_features(parse_graph_spec(spec))


def test_features_cat22():
    f = feats("cat:2,2")
    assert len(f.leaves) == 4
    assert f.diameter == 3
    assert f.parity_ok is False
    # delta_e counts the pendant leaves of the end-star centre
    assert f.min_end_degree == 2
    assert f.d == 2


def test_features_path5():
    f = feats("path:5")
    assert f.diameter == 4
    assert f.has_p2_leaf
    assert f.min_end_degree == 1
    assert f.parity_ok


def test_features_counterexample():
    f = feats("edges:7;0-1,0-2,1-3,1-4,2-5,2-6")
    assert f.parity_ok and not f.has_p2_leaf
    assert (f.red_count, f.blue_count) == (5, 2)
    assert f.leaves <= f.red


def test_not_a_tree():
    with pytest.raises(NotATree):
        tree_features(Graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)]))
    with pytest.raises(NotATree):
        tree_features(Graph(4, [(0, 1), (2, 3)]))


@pytest.mark.parametrize("n", range(3, 10))
def test_parity_colouring_is_proper(n):
    for t in enumerate_trees(n):
        f = tree_features(t)
        if not f.parity_ok:
            continue
        for u, v in t.edges:
            assert (u in f.red) != (v in f.red)
        assert f.leaves <= f.red


@pytest.mark.parametrize("n", range(3, 10))
def test_end_star_leaves_pendant(n):
    for t in enumerate_trees(n):
        if t.diameter() <= 2:
            continue
        deg = t.degrees()
        stars = end_stars(t)
        assert stars
        for c, s in stars:
            nbrs = t.neighbors(c)
            assert sum(deg[w] > 1 for w in nbrs) == 1
            assert s == sum(deg[w] == 1 for w in nbrs) >= 1


def test_caterpillar_detection():
    assert caterpillar_of(caterpillar([3, 1, 2])).a == (2, 1, 3)
    assert caterpillar_of(star_graph(5)).a == (4,)
    assert caterpillar_of(path_graph(5)).a == (1, 0, 1)
    spider = parse_graph_spec("edges:7;0-1,1-2,0-3,3-4,0-5,5-6")
    assert caterpillar_of(spider) is None


def test_pattern_properties():
    p = Pattern(parse_graph_spec("cat:2,2"))
    assert p.n == 6 and p.m == 5 and p.max_degree == 3 and p.min_degree == 1
    assert p.is_tree and not p.is_clique
    assert p.diameter == 3
    assert Pattern(parse_graph_spec("clique:4")).is_clique
    # edge orbits of a path on four vertices: the middle edge and the end edges
    assert len({frozenset(e) for e in Pattern(path_graph(4)).edge_orbits}) >= 2


def test_local_structure_finders():
    assert find_p2_leaf(path_graph(5)) is not None
    assert find_p2_leaf(caterpillar([2, 2])) is None
    spider = parse_graph_spec("edges:7;0-1,1-2,0-3,3-4,0-5,5-6")
    assert find_p2_leaf(spider) is not None
    assert find_even_path(caterpillar([2, 0, 2])) is None
    assert find_six_vertex(star_graph(6)) is None
