from toughfactor.graph import complete_graph, cycle_graph, empty_graph, petersen_graph, star_graph
from toughfactor.harness import random_graph
from toughfactor.matching import max_matching, perfect_matching

from .oracles import naive_max_matching_size


def _is_matching(g, edges):
    used = [v for e in edges for v in e]
    return len(used) == len(set(used)) and all(g.has_edge(u, v) for u, v in edges)


def test_small_examples():
    assert len(max_matching(cycle_graph(4))) == 2
    assert len(max_matching(cycle_graph(5))) == 2
    assert max_matching(empty_graph(4)) == []


def test_petersen_has_perfect_matching():
    g = petersen_graph()
    assert naive_max_matching_size(g) == 5
    m = max_matching(g)
    assert len(m) == 5 and _is_matching(g, m)
    assert perfect_matching(g) is not None


def test_perfect_matching_none_for_odd_or_deficient():
    assert perfect_matching(complete_graph(5)) is None
    star = star_graph(5)
    assert perfect_matching(star) is None
    assert len(max_matching(star)) == 1


def test_against_brute_force(rng):
    for _ in range(1000):
        g = random_graph(rng.randint(1, 10), rng.uniform(0.05, 0.7), rng)
        m = max_matching(g)
        assert _is_matching(g, m)
        assert len(m) == naive_max_matching_size(g)
        pm = perfect_matching(g)
        assert (pm is not None) == (2 * len(m) == g.n)
