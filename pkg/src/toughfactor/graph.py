"""Simple undirected graphs on dense integer vertex ids.

Adjacency is stored as one Python ``int`` bitmask per vertex, so neighbourhood
unions, component sweeps and "is this set independent" checks are word-parallel.
Public functions take and return vertex sets as ``frozenset[int]``; the
``*_mask`` helpers work on raw bitmasks and are what the exponential solvers use.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import TextIO

from .errors import Graph6ParseError, InputError

VertexSet = frozenset


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``rows[v]`` is the neighbour bitmask of ``v``."""

    n: int
    rows: tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return from_mask(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    @property
    def m(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(r | (1 << v) == full for v, r in enumerate(self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; loops, repeated pairs and out-of-range ids raise ``InputError``."""
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        if rows[u] >> v & 1:
            raise InputError(f"duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_rows(rows: Iterable[int]) -> Graph:
    """Wrap adjacency bitmasks, checking symmetry and irreflexivity."""
    rows = tuple(rows)
    n = len(rows)
    for v, r in enumerate(rows):
        if r >> v & 1:
            raise InputError(f"self-loop at vertex {v}")
        if r >> n:
            raise InputError(f"row {v} references a vertex >= {n}")
        for u in iter_bits(r):
            if not rows[u] >> v & 1:
                raise InputError(f"adjacency not symmetric at ({v}, {u})")
    return Graph(n, rows)


# --- named graphs -----------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


# --- structural queries -----------------------------------------------------

def components_mask(rows: tuple[int, ...], alive: int) -> list[int]:
    """Connected components of the subgraph induced by ``alive``, as bitmasks."""
    comps = []
    while alive:
        comp = frontier = alive & -alive
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= rows[low.bit_length() - 1]
                f ^= low
            frontier = reach & alive & ~comp
            comp |= frontier
        comps.append(comp)
        alive &= ~comp
    return comps


def count_components_mask(rows: tuple[int, ...], alive: int, stop_at: int = -1) -> int:
    """Number of components of G[alive]; returns early once ``stop_at`` is reached."""
    count = 0
    while alive:
        comp = frontier = alive & -alive
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= rows[low.bit_length() - 1]
                f ^= low
            frontier = reach & alive & ~comp
            comp |= frontier
        count += 1
        if count == stop_at:
            return count
        alive &= ~comp
    return count


def neighborhood_mask(rows: tuple[int, ...], mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= rows[v]
    return out & ~mask


def _check_subset(g: Graph, vertices: Iterable[int]) -> int:
    mask = to_mask(vertices)
    if mask >> g.n:
        raise InputError(f"vertex set contains ids outside 0..{g.n - 1}")
    return mask


def components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Vertex sets of the components of ``G - removed``, ordered by smallest member."""
    alive = g.full_mask & ~_check_subset(g, removed)
    return [from_mask(c) for c in components_mask(g.rows, alive)]


def omega(g: Graph, removed: Iterable[int] = ()) -> int:
    return count_components_mask(g.rows, g.full_mask & ~_check_subset(g, removed))


def neighborhood(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """Union of the neighbourhoods of ``vertices``, minus the vertices themselves."""
    return from_mask(neighborhood_mask(g.rows, _check_subset(g, vertices)))


def induced(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices``; the list maps new ids to original ids."""
    keep = sorted(from_mask(_check_subset(g, vertices)))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        for u in iter_bits(g.rows[v]):
            if u in index:
                r |= 1 << index[u]
        rows.append(r)
    return Graph(len(keep), tuple(rows)), keep


def is_independent_mask(rows: tuple[int, ...], mask: int) -> bool:
    return all(not rows[v] & mask for v in iter_bits(mask))


def is_clique_mask(rows: tuple[int, ...], mask: int) -> bool:
    return all((rows[v] | (1 << v)) & mask == mask for v in iter_bits(mask))


def is_induced_path(g: Graph, path: list[int]) -> bool:
    """True iff ``path`` has no repeats, consecutive vertices are adjacent and no chords."""
    if len(set(path)) != len(path) or any(not 0 <= v < g.n for v in path):
        return False
    for i, u in enumerate(path):
        for j in range(i + 1, len(path)):
            if g.has_edge(u, path[j]) != (j == i + 1):
                return False
    return True


# --- graph6 -----------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.rows[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return _encode_n(g.n) + "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is accepted)."""
    line = text.strip("\r\n")
    base = 0
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not line:
        raise Graph6ParseError("empty graph6 string", base)
    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"invalid graph6 character {ch!r}", base + i)

    def six(i: int) -> int:
        if i >= len(line):
            raise Graph6ParseError("truncated vertex count", base + i)
        return ord(line[i]) - 63

    if line[0] != "~":
        n, pos = six(0), 1
    elif len(line) > 1 and line[1] == "~":
        n, pos = 0, 2
        for i in range(2, 8):
            n = n << 6 | six(i)
        pos = 8
    else:
        n = 0
        for i in range(1, 4):
            n = n << 6 | six(i)
        pos = 4

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = line[pos:]
    if len(body) < nchars:
        raise Graph6ParseError(f"truncated bit vector: need {nchars} bytes, got {len(body)}", base + len(line))
    if len(body) > nchars:
        raise Graph6ParseError("trailing bytes after bit vector", base + pos + nchars)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (ord(body[k // 6]) - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nchars and (ord(body[-1]) - 63) & ((1 << (nchars * 6 - nbits)) - 1):
        raise Graph6ParseError("non-zero padding bits", base + pos + nchars - 1)
    return Graph(n, tuple(rows))


# --- edge-list text ---------------------------------------------------------

def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based)."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise InputError("edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:] if len(r) == 2]
    except ValueError as exc:
        raise InputError(f"non-integer token in edge list: {exc}") from None
    if any(len(r) != 2 for r in rows[1:]):
        raise InputError("every edge line must hold exactly two vertex ids")
    if len(edges) != m:
        raise InputError(f"header announces {m} edges but {len(edges)} were given")
    return from_edge_list(n, edges)


def read_graphs(stream: TextIO) -> Iterator[Graph]:
    """Yield graphs from a stream holding either one edge list or graph6 lines."""
    text = stream.read()
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    parts = first.split()
    if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
        yield parse_edge_list(text)
        return
    for line in text.splitlines():
        if line.strip():
            yield parse_graph6(line.strip())
