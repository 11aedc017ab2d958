from fractions import Fraction

import pytest

from toughfactor.errors import InputError
from toughfactor.families import build_family, family_formula, family_limit_check, family_witness_ratio
from toughfactor.graph import components, omega, to_mask


def test_g12_shape():
    fw = build_family(1, 2)
    assert fw.graph.n == 47
    assert (len(fw.S), len(fw.A), len(fw.T), len(fw.B)) == (2, 15, 15, 15)
    assert len(fw.A_blocks) == 5 and all(len(b) == 3 for b in fw.A_blocks)


def test_g23_size_and_formula():
    fw = build_family(2, 3)
    assert fw.graph.n == 3 + 3 * 35 == 108
    assert family_formula(2, 3) == Fraction(11, 6)


@pytest.mark.parametrize("l,m,ratio", [(1, 2, Fraction(27, 16)), (1, 3, Fraction(19, 11)), (2, 2, Fraction(47, 26))])
def test_witness_ratios(l, m, ratio):
    fw = build_family(l, m)
    assert family_witness_ratio(fw) == ratio == fw.formula_toughness
    assert omega(fw.graph, fw.W) == (2 * l + 1) * (2 * m + 1) + 1


def test_classes_partition_vertices():
    fw = build_family(1, 2)
    cls = fw.classes()
    flat = cls["S"] + [v for b in cls["A"] for v in b] + cls["T"] + cls["B"]
    assert sorted(flat) == list(range(fw.graph.n))


@pytest.mark.parametrize("l,m", [(1, 2), (1, 3), (2, 2)])
def test_structure(l, m):
    fw = build_family(l, m)
    g = fw.graph
    for s in fw.S:
        assert g.degree(s) == g.n - 1
    for t in fw.T:
        assert g.degree(t) == m + 2
    A, B = set(fw.A), set(fw.B)
    for a in A:
        assert not (g.neighbors(a) & B)
    # removing S and T leaves exactly the A blocks and B
    comps = components(g, set(fw.S) | set(fw.T))
    assert sorted(map(len, comps)) == sorted([2 * l + 1] * (2 * m + 1) + [len(fw.B)])
    # each t_k subdivides a_k b_k
    for a, t, b in zip(fw.A, fw.T, fw.B):
        assert g.has_edge(a, t) and g.has_edge(t, b) and not g.has_edge(a, b)
    assert g.rows[fw.B[0]] & to_mask(fw.B[1:]) == to_mask(fw.B[1:])


@pytest.mark.parametrize("m,ls", [(2, range(1, 6)), (3, range(1, 4)), (2, range(1, 2))])
def test_limit_check(m, ls):
    rep = family_limit_check(m, ls)
    assert rep.increasing and rep.below_two
    assert len(rep.ratios) == len(rep.ls)


@pytest.mark.parametrize("l,m", [(0, 2), (1, 1), (-1, 3)])
def test_rejects_small_parameters(l, m):
    with pytest.raises(InputError):
        build_family(l, m)
