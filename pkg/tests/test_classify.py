import json

import pytest

from wsat.canon import enumerate_trees
from wsat.classify import GOOD, NOT_GOOD, UNKNOWN, classify_good, exponent_family, reproduce
from wsat.constructions import counterexample_tree
from wsat.formulas import wsat_formulas
from wsat.graph import Graph, parse_graph_spec


def test_counterexample_not_good():
    v = classify_good(counterexample_tree())
    assert v.status == NOT_GOOD and v.rule == "parity-tree"


def test_bad_caterpillar():
    v = classify_good(parse_graph_spec("cat:3,3"))
    assert v.status == NOT_GOOD and v.rule == "bad-caterpillar"


def test_spider_good():
    v = classify_good(parse_graph_spec("edges:7;0-1,1-2,0-3,3-4,0-5,5-6"))
    assert v.status == GOOD and v.rule == "p2-leaf"


def test_unknown():
    t = Graph(10, [(0, 9), (1, 9), (2, 9), (3, 8), (4, 8), (5, 7), (6, 7), (6, 8), (7, 9)])
    assert classify_good(t).status == UNKNOWN


@pytest.mark.parametrize("n", range(4, 10))
def test_verdicts_consistent_with_formulas(n):
    # a good verdict never contradicts a lower bound; not-good always has one
    for t in enumerate_trees(n):
        v = classify_good(t)
        rec = wsat_formulas(t)
        if v.status == GOOD:
            assert rec.lower.value == t.m - 1
        elif v.status == NOT_GOOD:
            assert rec.lower.value >= t.m


def test_rejects_non_trees():
    with pytest.raises(ValueError):
        classify_good(Graph(3, [(0, 1), (1, 2), (0, 2)]))


def test_exponent_family_capped():
    a, legs = exponent_family(2.0, 10)
    assert a == 4 and legs == (4, 4)
    a, legs = exponent_family(1.0, 9)
    assert a == 3 and sum(legs) + 2 == 9


def test_reproduce_reports():
    rep = reproduce("counterexample")
    assert rep.ok and len(rep.rows) == 2
    d = json.loads(rep.to_json())
    assert d["claim"] == "counterexample"
    assert rep.to_csv().startswith("instance,predicted,computed,agree,artifact\n")
    with pytest.raises(KeyError):
        reproduce("nope")


def test_reproduce_threecat_and_clique():
    assert reproduce("threecat", {"max_order": 7}).ok
    assert reproduce("clique-formula", {"cases": [[3, 5], [4, 5]]}).ok
