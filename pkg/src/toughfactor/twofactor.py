"""Tutte's 2-factor criterion, special Tutte pairs, and 2-factor construction.

Two independent routes decide whether a graph has a 2-factor:

* ``find_two_factor`` builds the vertex-gadget graph and looks for a perfect
  matching with the blossom algorithm; the matched gadget edges are the cycles.
* ``find_tutte_pair_exhaustive`` evaluates ``eta(S, T)`` over every disjoint
  pair and reports a pair with ``eta <= -2`` if one exists.

The exhaustive route fixes ``R = S ∪ T`` first, computes the components of
``G - R`` once, and then sweeps all splits ``T ⊆ R`` with a subset recurrence:

    eta = 2|R| + sum_{x in T} (out(x) - 4) + 2 e(T) - h(T)

where ``out(x)`` counts edges from ``x`` to ``G - R`` and ``h(T)`` is the popcount
of the XOR of per-vertex component-parity masks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .errors import BudgetExceeded, InputError, PreconditionError
from .graph import Graph, components_mask, from_mask, is_independent_mask, is_induced_path, iter_bits, to_mask
from .matching import perfect_matching
from .toughness import is_t_tough

ORACLE_MAX_N = 12


class InternalError(RuntimeError):
    """A result failed its own re-validation."""


@dataclass(frozen=True)
class OddComponent:
    vertices: frozenset[int]
    edges_to_t: int
    odd: bool
    strength: Optional[str]  # "strong" / "weak" for odd components, None otherwise


@dataclass(frozen=True)
class OddComponentReport:
    components: tuple[OddComponent, ...]

    @property
    def odd(self) -> list[OddComponent]:
        return [c for c in self.components if c.odd]

    @property
    def h(self) -> int:
        return len(self.odd)


@dataclass(frozen=True)
class TuttePair:
    S: frozenset[int]
    T: frozenset[int]
    eta: int
    h: int
    degrees: dict[int, int] = field(compare=False)

    @property
    def is_tutte_pair(self) -> bool:
        return self.eta <= -2


def _disjoint_masks(g: Graph, S: Iterable[int], T: Iterable[int]) -> tuple[int, int]:
    s, t = to_mask(S), to_mask(T)
    if (s | t) >> g.n:
        raise InputError("S or T contains vertices outside the graph")
    if s & t:
        raise InputError(f"S and T overlap in {sorted(from_mask(s & t))}")
    return s, t


def odd_components(g: Graph, S: Iterable[int], T: Iterable[int]) -> OddComponentReport:
    """Components of ``G - (S ∪ T)`` with their edge counts to T and strong/weak class."""
    s, t = _disjoint_masks(g, S, T)
    rows = g.rows
    out = []
    for comp in components_mask(rows, g.full_mask & ~(s | t)):
        e = sum((rows[y] & t).bit_count() for y in iter_bits(comp))
        odd = e % 2 == 1
        strength = ("strong" if e >= 3 else "weak") if odd else None
        out.append(OddComponent(from_mask(comp), e, odd, strength))
    return OddComponentReport(tuple(out))


def eta_of(g: Graph, S: Iterable[int], T: Iterable[int]) -> TuttePair:
    """Evaluate ``eta(S, T) = 2|S| - 2|T| + sum_{x in T} d_{G-S}(x) - h(S, T)`` directly."""
    s, t = _disjoint_masks(g, S, T)
    degrees = {x: (g.rows[x] & ~s).bit_count() for x in iter_bits(t)}
    h = odd_components(g, from_mask(s), from_mask(t)).h
    eta = 2 * s.bit_count() - 2 * t.bit_count() + sum(degrees.values()) - h
    return TuttePair(from_mask(s), from_mask(t), eta, h, degrees)


# --- exhaustive oracle ------------------------------------------------------

def _split_table(g: Graph, r_mask: int) -> tuple[list[int], list[int], list[int]]:
    """For ``R = r_mask``: the vertices of R, and ``eta``/``h`` indexed by local subset T ⊆ R."""
    rows = g.rows
    rest = g.full_mask & ~r_mask
    comps = components_mask(rows, rest)
    verts = list(iter_bits(r_mask))
    r = len(verts)
    base = [2 * r]
    par = [0]
    for j, x in enumerate(verts):
        row = rows[x]
        parity = 0
        for ci, comp in enumerate(comps):
            if (row & comp).bit_count() & 1:
                parity |= 1 << ci
        shift = (row & rest).bit_count() - 4
        local = 0
        for i, y in enumerate(verts[:j]):
            if row >> y & 1:
                local |= 1 << i
        base += [b + shift + 2 * (local & i).bit_count() for i, b in enumerate(base)]
        par += [p ^ parity for p in par]
    h = [p.bit_count() for p in par]
    eta = [b - hh for b, hh in zip(base, h)]
    return verts, eta, h


def _local_to_sets(verts: list[int], local: int) -> tuple[frozenset[int], frozenset[int]]:
    T = frozenset(v for i, v in enumerate(verts) if local >> i & 1)
    S = frozenset(verts) - T
    return S, T


def _check_oracle_budget(g: Graph, max_n: int) -> None:
    if g.n > max_n:
        raise BudgetExceeded(f"exhaustive Tutte-pair search limited to n <= {max_n}, graph has n = {g.n}")


def find_tutte_pair_exhaustive(g: Graph, max_n: int = ORACLE_MAX_N) -> Optional[TuttePair]:
    """Some pair with ``eta <= -2`` (so G has no 2-factor), or ``None`` if G has one."""
    _check_oracle_budget(g, max_n)
    for r_mask in range(1 << g.n):
        verts, eta, _h = _split_table(g, r_mask)
        if min(eta) <= -2:
            local = next(i for i, e in enumerate(eta) if e <= -2)
            S, T = _local_to_sets(verts, local)
            return eta_of(g, S, T)
    return None


def iter_tutte_pairs(g: Graph, max_n: int = ORACLE_MAX_N) -> Iterator[tuple[frozenset[int], frozenset[int], int, int]]:
    """Every ``(S, T, eta, h)`` with ``eta <= -2``."""
    _check_oracle_budget(g, max_n)
    for r_mask in range(1 << g.n):
        verts, eta, h = _split_table(g, r_mask)
        if min(eta) > -2:
            continue
        for local, e in enumerate(eta):
            if e <= -2:
                S, T = _local_to_sets(verts, local)
                yield S, T, e, h[local]


def special_tutte_pair(g: Graph, max_n: int = ORACLE_MAX_N) -> Optional[TuttePair]:
    """The Tutte pair with largest |S|, then smallest |T|, then smallest h.

    Remaining ties go to the lexicographically smallest sorted S, then T.
    """
    _check_oracle_budget(g, max_n)
    best_key = None
    for r_mask in range(1 << g.n):
        verts, eta, h = _split_table(g, r_mask)
        if min(eta) > -2:
            continue
        r = len(verts)
        for local, e in enumerate(eta):
            if e > -2:
                continue
            t = local.bit_count()
            head = (t - r, t, h[local])
            if best_key is not None and head > best_key[:3]:
                continue
            S, T = _local_to_sets(verts, local)
            key = head + (tuple(sorted(S)), tuple(sorted(T)))
            if best_key is None or key < best_key:
                best_key = key
    if best_key is None:
        return None
    return eta_of(g, best_key[3], best_key[4])


@dataclass(frozen=True)
class Lemma5Report:
    t_independent: bool
    odd_neighbours_match_degree: bool
    single_t_attachment: bool
    large_components: bool
    three_halves_tough: Optional[bool] = None
    claim1: Optional[bool] = None

    @property
    def all_hold(self) -> bool:
        lemma = (self.t_independent and self.odd_neighbours_match_degree
                 and self.single_t_attachment and self.large_components)
        return lemma and self.claim1 is not False


def check_lemma5(g: Graph, pair: TuttePair, check_claim1: bool = True, max_n: int = ORACLE_MAX_N) -> Lemma5Report:
    """Check the four structural properties of a special Tutte pair.

    The tough-case claim (``S`` non-empty, ``|T| >= 2``) is checked too when G has at least
    three vertices and is 3/2-tough.

    The pair is re-derived with ``special_tutte_pair`` first; anything else is a
    precondition error.
    """
    expected = special_tutte_pair(g, max_n)
    if expected is None:
        raise PreconditionError("graph has a 2-factor, so it has no special Tutte pair")
    if (expected.S, expected.T) != (pair.S, pair.T):
        ok_key = (len(pair.S), len(pair.T))
        fresh = eta_of(g, pair.S, pair.T)
        if not (fresh.eta <= -2 and ok_key == (len(expected.S), len(expected.T)) and fresh.h == expected.h):
            raise PreconditionError("pair is not a special Tutte pair of this graph")

    s, t = to_mask(pair.S), to_mask(pair.T)
    rows = g.rows
    odd = odd_components(g, pair.S, pair.T).odd
    odd_masks = [to_mask(c.vertices) for c in odd]

    t_independent = is_independent_mask(rows, t)
    degree_match = all(
        sum(1 for cm in odd_masks if rows[x] & cm) == (rows[x] & ~s).bit_count() for x in iter_bits(t)
    )
    single = all((rows[y] & t).bit_count() <= 1 for cm in odd_masks for y in iter_bits(cm))
    large = all(
        cm.bit_count() >= 3
        for x in iter_bits(t) if (rows[x] & ~s).bit_count() >= 2
        for cm in odd_masks if rows[x] & cm
    )
    tough = claim = None
    if check_claim1 and g.n >= 3:
        tough = is_t_tough(g, Fraction(3, 2))[0]
        if tough:
            claim = bool(pair.S) and len(pair.T) >= 2
    return Lemma5Report(t_independent, degree_match, single, large, tough, claim)


# --- gadget reduction -------------------------------------------------------

@dataclass(frozen=True)
class GadgetGraph:
    graph: Graph
    externals: dict[int, tuple[int, tuple[int, int]]]  # gadget id -> (owner, original edge)
    internals: dict[int, int]  # gadget id -> owner
    edge_map: dict[tuple[int, int], tuple[int, int]]  # external-external gadget edge -> original edge


def build_gadget(g: Graph) -> GadgetGraph:
    """Replace each vertex ``v`` by ``d(v)`` externals fully joined to ``d(v) - 2`` internals.

    Each original edge ``uv`` becomes one edge between the external of ``u``
    reserved for ``v`` and the external of ``v`` reserved for ``u``.
    """
    low = [v for v in range(g.n) if g.degree(v) < 2]
    if low:
        raise PreconditionError(f"vertex {low[0]} has degree < 2; the graph has no 2-factor")
    externals: dict[int, tuple[int, tuple[int, int]]] = {}
    internals: dict[int, int] = {}
    port: dict[tuple[int, int], int] = {}
    pairs: list[tuple[int, int]] = []
    nid = 0
    for v in range(g.n):
        ext = []
        for u in iter_bits(g.rows[v]):
            port[(v, u)] = nid
            externals[nid] = (v, (min(u, v), max(u, v)))
            ext.append(nid)
            nid += 1
        for _ in range(len(ext) - 2):
            internals[nid] = v
            pairs.extend((e, nid) for e in ext)
            nid += 1
    edge_map = {}
    for u, v in g.edges():
        a, b = port[(u, v)], port[(v, u)]
        pairs.append((a, b))
        edge_map[(min(a, b), max(a, b))] = (u, v)
    rows = [0] * nid
    for a, b in pairs:
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return GadgetGraph(Graph(nid, tuple(rows)), externals, internals, edge_map)


@dataclass(frozen=True)
class TwoFactor:
    cycles: tuple[tuple[int, ...], ...]

    def edges(self) -> set[tuple[int, int]]:
        out = set()
        for cyc in self.cycles:
            for i, u in enumerate(cyc):
                v = cyc[(i + 1) % len(cyc)]
                out.add((min(u, v), max(u, v)))
        return out

    def validate(self, g: Graph) -> bool:
        seen = [v for cyc in self.cycles for v in cyc]
        if sorted(seen) != list(range(g.n)) or any(len(c) < 3 for c in self.cycles):
            return False
        edges = self.edges()
        if not all(g.has_edge(u, v) for u, v in edges):
            return False
        deg = [0] * g.n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        return all(d == 2 for d in deg)


def _cycles_from_edges(n: int, edges: list[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        prev, cur = start, min(nbrs[start])
        while cur != start:
            cyc.append(cur)
            seen[cur] = True
            a, b = nbrs[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(tuple(cyc))
    return tuple(cycles)


def find_two_factor(g: Graph) -> Optional[TwoFactor]:
    """A 2-factor of G built from a perfect matching of the gadget graph, or ``None``.

    The null graph has the empty 2-factor; graphs on one or two vertices have none.
    """
    if g.n == 0:
        return TwoFactor(())
    if g.n < 3 or g.min_degree() < 2:
        return None
    gadget = build_gadget(g)
    matching = perfect_matching(gadget.graph)
    if matching is None:
        return None
    chosen = [gadget.edge_map[e] for e in matching if e in gadget.edge_map]
    factor = TwoFactor(_cycles_from_edges(g.n, chosen))
    if not factor.validate(g):
        raise InternalError("gadget matching did not yield a valid 2-factor")
    return factor


def has_two_factor(g: Graph) -> bool:
    return find_two_factor(g) is not None


# --- basic U-paths ----------------------------------------------------------

def basic_u_path(
    g: Graph, S: Iterable[int], T: Iterable[int], C: Iterable[int], U: Iterable[int], start: int
) -> tuple[int, ...]:
    """Shortest path from ``start`` through ``C`` to another vertex of ``U``.

    ``C`` must be an odd component of ``G - (S ∪ T)`` and ``U`` a subset of
    ``N_T(C)`` with at least two vertices. The result is re-validated as an
    induced path whose interior lies in ``C`` and meets ``N_C(U)`` at most twice.
    """
    s, t = _disjoint_masks(g, S, T)
    c, u = to_mask(C), to_mask(U)
    rows = g.rows
    comps = components_mask(rows, g.full_mask & ~(s | t))
    if c not in comps:
        raise PreconditionError("C is not a component of G - (S ∪ T)")
    if sum((rows[y] & t).bit_count() for y in iter_bits(c)) % 2 == 0:
        raise PreconditionError("C is not an odd component")
    n_t_c = 0
    for y in iter_bits(c):
        n_t_c |= rows[y] & t
    if u & ~n_t_c or u.bit_count() < 2:
        raise PreconditionError("U must be a subset of N_T(C) with at least two vertices")
    if not u >> start & 1:
        raise PreconditionError(f"start vertex {start} is not in U")

    targets = u & ~(1 << start)
    parent = {}
    layer = list(iter_bits(rows[start] & c))
    for y in layer:
        parent[y] = start
    visited = to_mask(layer)
    end = hit = None
    while layer and end is None:
        nxt = []
        for y in layer:
            if rows[y] & targets:
                hit = y
                end = next(iter_bits(rows[y] & targets))
                break
            for z in iter_bits(rows[y] & c & ~visited):
                visited |= 1 << z
                parent[z] = y
                nxt.append(z)
        layer = nxt
    if end is None:
        raise PreconditionError("no second vertex of U is reachable through C")
    path = [end]
    y = hit
    while y != start:
        path.append(y)
        y = parent[y]
    path.append(start)
    path.reverse()

    n_c_u = c & _nbr_union(rows, u)
    interior = to_mask(path[1:-1])
    if not (is_induced_path(g, path) and interior & ~c == 0 and (interior & n_c_u).bit_count() <= 2):
        raise InternalError(f"shortest U-path {path} is not a basic U-path")
    return tuple(path)


def _nbr_union(rows: tuple[int, ...], mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= rows[v]
    return out
