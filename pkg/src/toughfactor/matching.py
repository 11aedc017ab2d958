"""Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm).

The search grows an alternating tree from each exposed vertex in turn and
contracts odd cycles by relabelling their vertices with a common base. A vertex
that admits no augmenting path never gains one later, so one pass over the
roots suffices. Runs in O(n^3).
"""

from __future__ import annotations

from collections import deque
from typing import Optional, Sequence

from .graph import Graph, iter_bits


def _adjacency_lists(g: Graph) -> list[list[int]]:
    return [list(iter_bits(r)) for r in g.rows]


def matching_mates(adj: Sequence[Sequence[int]], stop_on_failure: bool = False) -> Optional[list[int]]:
    """Mate array (``-1`` for exposed vertices) of a maximum matching.

    With ``stop_on_failure`` the search gives up as soon as some vertex is
    certainly exposed in every maximum matching and returns ``None``; used when
    only perfect matchings are of interest.
    """
    n = len(adj)
    mate = [-1] * n
    for v in range(n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1:
                    mate[u], mate[v] = v, u
                    break

    parent = [-1] * n
    base = list(range(n))
    used = [False] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def find_path(root: int) -> int:
        for i in range(n):
            parent[i] = -1
            base[i] = i
            used[i] = False
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom)
                    mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1

    for root in range(n):
        if mate[root] != -1:
            continue
        end = find_path(root)
        if end == -1:
            if stop_on_failure:
                return None
            continue
        v = end
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v], mate[pv] = pv, v
            v = nxt
    return mate


def max_matching(g: Graph) -> list[tuple[int, int]]:
    """Edges ``(u, v)``, ``u < v``, of a maximum-cardinality matching of G."""
    mate = matching_mates(_adjacency_lists(g))
    assert mate is not None
    return [(v, u) for v, u in enumerate(mate) if v < u]


def perfect_matching(g: Graph) -> Optional[list[tuple[int, int]]]:
    """A perfect matching of G, or ``None`` if there is none."""
    if g.n % 2:
        return None
    mate = matching_mates(_adjacency_lists(g), stop_on_failure=True)
    if mate is None or -1 in mate:
        return None
    return [(v, u) for v, u in enumerate(mate) if v < u]
