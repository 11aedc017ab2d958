from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toughfactor.errors import BudgetExceeded, InputError
from toughfactor.families import build_family
from toughfactor.graph import complete_graph, cycle_graph, empty_graph, from_edge_list, path_graph, star_graph
from toughfactor.harness import enumerate_labeled_graphs, random_graph
from toughfactor.toughness import (
    INFINITE,
    cut_ratio,
    is_t_tough,
    parse_rational,
    toughness_exact,
)

from .conftest import graphs
from .oracles import naive_toughness

EPS = Fraction(1, 10**6)


def test_infinite_ordering():
    assert INFINITE > Fraction(10**9)
    assert Fraction(3, 2) < INFINITE
    assert not INFINITE < Fraction(2)
    assert INFINITE == INFINITE and INFINITE != Fraction(1)
    assert max(Fraction(3), INFINITE) is INFINITE


def test_parse_rational():
    assert parse_rational("3/2") == Fraction(3, 2)
    assert parse_rational("6/4") == Fraction(3, 2)
    assert parse_rational("2") == 2
    assert parse_rational("inf") is INFINITE
    for bad in ("1.5", "x", "1/0"):
        with pytest.raises(InputError):
            parse_rational(bad)


def test_cut_ratio_examples():
    assert cut_ratio(path_graph(3), {1}) == Fraction(1, 2)
    assert cut_ratio(complete_graph(4), {0}) is None
    fw = build_family(1, 2)
    assert cut_ratio(fw.graph, fw.W) == Fraction(27, 16)


@pytest.mark.parametrize(
    "g, expected",
    [
        (complete_graph(5), INFINITE),
        (cycle_graph(6), Fraction(1)),
        (star_graph(3), Fraction(1, 3)),
        (path_graph(4), Fraction(1, 2)),
    ],
)
def test_toughness_unit_values(g, expected):
    res = toughness_exact(g)
    assert res.value == expected
    if expected is INFINITE:
        assert res.witness is None
        assert naive_toughness(g) is None
    else:
        assert naive_toughness(g) == expected
        assert cut_ratio(g, res.witness) == expected


def test_disconnected_is_zero_with_empty_witness():
    res = toughness_exact(empty_graph(3))
    assert res.value == 0 and res.witness == frozenset()
    assert is_t_tough(empty_graph(3), Fraction(1, 100)) == (False, frozenset())
    assert is_t_tough(empty_graph(3), Fraction(0)) == (True, None)


def test_witness_tie_break_is_size_then_lex():
    # C6: every antipodal pair gives ratio 1; {0, 3} and {0, 2, 4} also give ratio 1.
    # The smallest size is 2 and lexicographically first is {0, 2} (ratio 2/2).
    assert toughness_exact(cycle_graph(6)).witness == frozenset({0, 2})


def test_is_t_tough_examples():
    assert is_t_tough(cycle_graph(6), Fraction(1)) == (True, None)
    ok, bad = is_t_tough(cycle_graph(6), Fraction(3, 2))
    assert not ok
    assert Fraction(3, 2) * (len(bad) / cut_ratio(cycle_graph(6), bad)) > len(bad)
    assert is_t_tough(complete_graph(4), Fraction(10)) == (True, None)
    assert is_t_tough(complete_graph(4), INFINITE) == (True, None)
    assert is_t_tough(path_graph(3), INFINITE)[0] is False


def test_budget():
    with pytest.raises(BudgetExceeded, match="n <= 20"):
        toughness_exact(cycle_graph(21))
    with pytest.raises(BudgetExceeded):
        is_t_tough(cycle_graph(21), Fraction(1))
    assert toughness_exact(cycle_graph(21), max_n=21).value == 1


def test_null_graph_rejected():
    with pytest.raises(InputError):
        toughness_exact(from_edge_list(0, []))


def _agreement(g):
    res = toughness_exact(g)
    if res.value is INFINITE:
        assert g.is_complete()
        assert is_t_tough(g, Fraction(10**6))[0]
        return
    assert is_t_tough(g, res.value)[0]
    ok, bad = is_t_tough(g, res.value + EPS)
    assert not ok
    assert cut_ratio(g, bad) < res.value + EPS
    assert cut_ratio(g, res.witness) == res.value


@pytest.mark.parametrize("n", range(1, 6))
def test_agreement_exhaustive(n):
    for g in enumerate_labeled_graphs(n):
        _agreement(g)


def test_agreement_and_brute_force_random(rng):
    for _ in range(150):
        g = random_graph(rng.randint(6, 12), rng.uniform(0.3, 0.9), rng)
        _agreement(g)
        if g.n <= 10:
            expected = naive_toughness(g)
            assert toughness_exact(g).value == (INFINITE if expected is None else expected)


@given(graphs(min_n=1, max_n=8), st.fractions(min_value=0, max_value=3), st.fractions(min_value=0, max_value=3))
def test_monotone_in_t(g, t1, t2):
    lo, hi = sorted((t1, t2))
    if is_t_tough(g, hi)[0]:
        assert is_t_tough(g, lo)[0]


@settings(max_examples=300)
@given(graphs(min_n=1, max_n=8))
def test_three_halves_tough_noncomplete_has_min_degree_three(g):
    if not g.is_complete() and is_t_tough(g, Fraction(3, 2))[0]:
        assert g.min_degree() >= 3
