"""Induced paths, induced unions of two paths, and split-graph recognition."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .errors import InputError
from .graph import Graph, from_mask, is_clique_mask, is_independent_mask, is_induced_path, iter_bits, to_mask


@dataclass(frozen=True)
class PathUnionWitness:
    path_a: tuple[int, ...]
    path_b: tuple[int, ...]

    def validate(self, g: Graph) -> bool:
        """Both paths induced, vertex-disjoint, and no edge between them."""
        if not (is_induced_path(g, list(self.path_a)) and is_induced_path(g, list(self.path_b))):
            return False
        a, b = to_mask(self.path_a), to_mask(self.path_b)
        if a & b:
            return False
        return all(not g.rows[v] & b for v in self.path_a)


def iter_induced_paths(g: Graph, k: int, allowed: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Every induced path on ``k`` vertices inside ``allowed``, once each (first end < last end)."""
    if k < 1:
        raise InputError("path length must be at least 1 vertex")
    rows = g.rows
    allowed = g.full_mask if allowed is None else allowed
    if allowed.bit_count() < k:
        return
    if k == 1:
        for v in iter_bits(allowed):
            yield (v,)
        return

    path: list[int] = []

    # ``blocked`` holds every path vertex except the tip together with their neighbours.
    def extend(tip: int, blocked: int) -> Iterator[tuple[int, ...]]:
        cand = rows[tip] & allowed & ~blocked
        if len(path) == k - 1:
            # Last vertex: canonical orientation needs it above the start.
            cand &= ~((1 << (path[0] + 1)) - 1)
            for v in iter_bits(cand):
                yield (*path, v)
            return
        nblocked = blocked | rows[tip] | (1 << tip)
        for v in iter_bits(cand):
            path.append(v)
            yield from extend(v, nblocked)
            path.pop()

    for s in iter_bits(allowed):
        path.append(s)
        yield from extend(s, 0)
        path.pop()


def find_induced_path(g: Graph, k: int, allowed: Optional[int] = None) -> Optional[tuple[int, ...]]:
    return next(iter_induced_paths(g, k, allowed), None)


def find_induced_path_union(g: Graph, a: int, b: int) -> Optional[PathUnionWitness]:
    """An induced copy of ``P_a ∪ P_b`` in G, or ``None`` if G is (P_a ∪ P_b)-free."""
    if a < 1 or b < 1:
        raise InputError("path lengths must be at least 1 vertex")
    swapped = a > b
    if swapped:
        a, b = b, a
    if g.n < a + b:
        return None
    rows, full = g.rows, g.full_mask
    dead: set[int] = set()
    for pa in iter_induced_paths(g, a):
        closed = 0
        for v in pa:
            closed |= rows[v] | (1 << v)
        residual = full & ~closed
        if residual.bit_count() < b or residual in dead:
            continue
        pb = find_induced_path(g, b, residual)
        if pb is None:
            dead.add(residual)
            continue
        return PathUnionWitness(pb, pa) if swapped else PathUnionWitness(pa, pb)
    return None


def is_pa_pb_free(g: Graph, a: int, b: int) -> bool:
    return find_induced_path_union(g, a, b) is None


def is_split(g: Graph) -> tuple[bool, Optional[tuple[frozenset[int], frozenset[int]]]]:
    """Split test by the degree-sequence criterion; returns a (clique, independent set) witness."""
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    deg = [g.degree(v) for v in order]
    m = 0
    for i, d in enumerate(deg, start=1):
        if d >= i - 1:
            m = i
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return False, None
    clique = to_mask(order[:m])
    indep = g.full_mask & ~clique
    if is_clique_mask(g.rows, clique) and is_independent_mask(g.rows, indep):
        return True, (from_mask(clique), from_mask(indep))
    witness = _split_partition_search(g)
    if witness is None:
        raise AssertionError("degree sequence says split but no partition was found")
    return True, witness


def _split_partition_search(g: Graph, max_n: int = 20) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    if g.n > max_n:
        return None
    for size in range(g.n, -1, -1):
        for combo in combinations(range(g.n), size):
            clique = to_mask(combo)
            if is_clique_mask(g.rows, clique) and is_independent_mask(g.rows, g.full_mask & ~clique):
                return frozenset(combo), from_mask(g.full_mask & ~clique)
    return None
