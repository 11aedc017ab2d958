"""The extremal family G(l, m): 2P5-free graphs with no 2-factor and toughness below 2.

Vertex layout (deterministic):

    S             0 .. m-1                       clique K_m, joined to everything
    A_1..A_{2m+1} next (2m+1) blocks of 2l+1      each block a clique
    T             next N = (2l+1)(2m+1)           t_k subdivides the edge a_k b_k
    B             last N                          clique K_N

with A flattened so that ``a_k`` is the k-th A vertex and ``b_k`` the k-th B vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .graph import Graph, from_edge_list
from .toughness import cut_ratio


@dataclass(frozen=True)
class FamilyWitness:
    graph: Graph
    l: int
    m: int
    S: tuple[int, ...]
    A_blocks: tuple[tuple[int, ...], ...]
    T: tuple[int, ...]
    B: tuple[int, ...]
    tutte_S: frozenset[int]
    tutte_T: frozenset[int]
    W: frozenset[int]
    formula_toughness: Fraction

    @property
    def A(self) -> tuple[int, ...]:
        return tuple(v for block in self.A_blocks for v in block)

    def classes(self) -> dict[str, list]:
        return {
            "S": list(self.S),
            "A": [list(b) for b in self.A_blocks],
            "T": list(self.T),
            "B": list(self.B),
        }


def family_formula(l: int, m: int) -> Fraction:
    """2 - (m+3) / ((2l+1)(2m+1) + 1)."""
    return 2 - Fraction(m + 3, (2 * l + 1) * (2 * m + 1) + 1)


def build_family(l: int, m: int) -> FamilyWitness:
    if l < 1 or m < 2:
        raise InputError(f"G(l, m) needs l >= 1 and m >= 2, got l={l}, m={m}")
    size = 2 * l + 1
    blocks = 2 * m + 1
    N = size * blocks
    S = tuple(range(m))
    A_blocks = tuple(tuple(range(m + i * size, m + (i + 1) * size)) for i in range(blocks))
    A = [v for b in A_blocks for v in b]
    T = tuple(range(m + N, m + 2 * N))
    B = tuple(range(m + 2 * N, m + 3 * N))
    n = m + 3 * N

    edges = []
    for i, s in enumerate(S):
        edges.extend((s, v) for v in range(i + 1, n))
    for block in A_blocks:
        edges.extend((u, v) for i, u in enumerate(block) for v in block[i + 1:])
    edges.extend((u, v) for i, u in enumerate(B) for v in B[i + 1:])
    for a, t, b in zip(A, T, B):
        edges.append((a, t))
        edges.append((t, b))
    graph = from_edge_list(n, edges)

    reps = [block[0] for block in A_blocks]
    x, b = T[0], B[0]  # a = a_1 = A[0]; x subdivides a_1 b_1
    W = frozenset(S) | (frozenset(A) - set(reps)) | (frozenset(B) - {b}) | {x}
    return FamilyWitness(
        graph=graph, l=l, m=m, S=S, A_blocks=A_blocks, T=T, B=B,
        tutte_S=frozenset(S), tutte_T=frozenset(T), W=W,
        formula_toughness=family_formula(l, m),
    )


def family_witness_ratio(fw: FamilyWitness) -> Fraction:
    """``|W| / omega(G - W)``; checked against the closed form and the expected component count."""
    ratio = cut_ratio(fw.graph, fw.W)
    expected_omega = (2 * fw.l + 1) * (2 * fw.m + 1) + 1
    if ratio is None or Fraction(len(fw.W), expected_omega) != ratio:
        raise AssertionError(f"G({fw.l},{fw.m}) - W does not have {expected_omega} components")
    if ratio != fw.formula_toughness:
        raise AssertionError(f"witness ratio {ratio} differs from closed form {fw.formula_toughness}")
    return ratio


@dataclass(frozen=True)
class LimitReport:
    m: int
    ls: tuple[int, ...]
    ratios: tuple[Fraction, ...]
    increasing: bool
    below_two: bool


def family_limit_check(m: int, ls: range | list[int]) -> LimitReport:
    """Witness ratios of G(l, m) for each l; they must increase strictly and stay below 2."""
    ls = tuple(ls)
    ratios = tuple(family_witness_ratio(build_family(l, m)) for l in ls)
    increasing = all(a < b for a, b in zip(ratios, ratios[1:]))
    below = all(r < 2 for r in ratios)
    return LimitReport(m, ls, ratios, increasing, below)
