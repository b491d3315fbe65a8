from math import comb

import pytest

from wsat.canon import enumerate_trees
from wsat.constructions import counterexample_tree
from wsat import formulas as R
from wsat.formulas import clique_wsat, endd_mind_sets, wsat_formulas
from wsat.graph import complete_graph, parse_graph_spec


def rec(spec, n=None):
    return wsat_formulas(parse_graph_spec(spec), n)


@pytest.mark.parametrize("n", range(4, 12))
def test_k4_is_2n_minus_3(n):
    r = wsat_formulas(complete_graph(4), n)
    assert r.exact.value == 2 * n - 3 == clique_wsat(n, 4)
    assert r.exact.rule == R.CLIQUE


def test_good_caterpillar_cat22():
    # 6 vertices, 5 edges, so k - 1 = 4
    r = rec("cat:2,2")
    assert r.exact.value == 4
    assert r.get(R.GOOD_CATERPILLAR).value == 4


def test_bad_caterpillar_cat33():
    r = rec("cat:3,3")
    assert r.exact.value == 7 and r.get(R.BAD_CATERPILLAR) is not None


def test_three_spine_caterpillar():
    assert rec("cat:2,0,2").get(R.THREE_SPINE).value == 6
    assert rec("cat:1,0,1").exact.value == 3
    assert rec("cat:1,0,2").exact.value == 4


def test_star():
    r = rec("star:5")
    assert r.exact.value == comb(4, 2) == 6 and r.exact.rule == R.STAR


def test_counterexample_bounds():
    r = wsat_formulas(counterexample_tree())
    assert r.get(R.ENDSTAR).value == 5 + comb(2, 2)
    assert r.get(R.TRIVIAL).value == 5
    assert r.get(R.PARITY).value == 6
    assert r.exact.value == 6


def test_path_values():
    for ell in range(3, 9):
        assert rec(f"path:{ell}").exact.value == ell - 2


def test_nontree_records():
    r = rec("edges:4;0-1,1-2,2-3,3-0")
    assert r.lower.value == 3 and r.upper is None
    r5 = rec("edges:4;0-1,1-2,2-3,3-0", 6)
    assert r5.upper.rule == R.CLIQUE_MINUS_EDGE
    assert r5.upper.value == comb(4, 2) - 1 + (2 - 1) * 2
    with pytest.raises(ValueError):
        wsat_formulas(complete_graph(5), 4)


def test_endd_mind_sets_literal():
    # every neighbour of the spine is a leaf, and leaves see no leaf
    (u, w, s), = endd_mind_sets(parse_graph_spec("cat:2,2"))
    assert {u, w} == {0, 1} and len(s) == 4


@pytest.mark.parametrize("n", range(3, 11))
def test_all_tree_records_consistent(n):
    # lower never exceeds upper and exact rules agree
    for t in enumerate_trees(n):
        r = wsat_formulas(t)
        r.check()
        assert r.lower.value >= t.m - 1
        if r.upper is not None:
            assert r.upper.value >= r.lower.value


def test_domination_alone_does_not_give_lower_bound():
    # C_{3,0,0,3}: leaf-bearing ends dominate the internal path but miss its middle edge
    r = rec("cat:3,0,0,3")
    assert r.get(R.COVER_LOWER) is None
    assert r.exact.value == 8 and r.exact.rule == R.EVEN_PATH
