"""Simple undirected graphs as adjacency bit-rows, plus the union/join algebra
and a few named fixtures."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


class GraphParseError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """``adj[v]`` has bit ``u`` set iff {u, v} is an edge."""

    n: int
    adj: tuple

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("need one adjacency row per vertex")
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if row >> self.n:
                raise ValueError(f"row {v} references a vertex >= n")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
                r ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if self.adj[u] >> v & 1]

    @property
    def num_edges(self) -> int:
        return sum(bin(r).count("1") for r in self.adj) // 2

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def neighbors(self, v: int) -> list:
        return [u for u in range(self.n) if self.adj[v] >> u & 1]

    def is_connected(self) -> bool:
        return self.n <= 1 or len(components(self)) == 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.adj + tuple(row << shift for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    shift = g.n
    h_block = ((1 << h.n) - 1) << shift
    rows = tuple(row | h_block for row in g.adj)
    rows += tuple((row << shift) | g.full_mask for row in h.adj)
    return Graph(g.n + h.n, rows)


def union_all(gs: Sequence[Graph]) -> Graph:
    out = Graph(0, ())
    for g in gs:
        out = union(out, g)
    return out


def join_all(gs: Sequence[Graph]) -> Graph:
    out = Graph(0, ())
    for g in gs:
        out = join(out, g)
    return out


def induced(g: Graph, mask: int) -> Graph:
    verts = [v for v in range(g.n) if mask >> v & 1]
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        r = 0
        for u in verts:
            if g.adj[v] >> u & 1:
                r |= 1 << index[u]
        rows.append(r)
    return Graph(len(verts), tuple(rows))


def components(g: Graph) -> list:
    """Connected components as vertex bitmasks, ordered by lowest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            v = low.bit_length() - 1
            new = g.adj[v] & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        out.append(comp)
    return out


# ---------------------------------------------------------------------------
# named graphs
# ---------------------------------------------------------------------------

def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    return join_all([empty(a) for a in parts])


def petersen() -> Graph:
    """Kneser graph K(5, 2): 2-subsets of {0..4}, adjacent when disjoint."""
    pairs = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2)
             if not set(pairs[i]) & set(pairs[j])]
    return Graph.from_edges(10, edges)


def line_graph_k5() -> Graph:
    """L(K5): 2-subsets of {0..4}, adjacent when they share an element."""
    pairs = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2)
             if set(pairs[i]) & set(pairs[j])]
    return Graph.from_edges(10, edges)


_PALEY9_EDGES = [
    (1, 2), (1, 3), (1, 4), (1, 7), (2, 5), (2, 7), (2, 8), (3, 4), (3, 8),
    (3, 9), (4, 5), (4, 6), (5, 6), (5, 8), (6, 7), (6, 9), (7, 9), (8, 9),
]


def paley9() -> Graph:
    """Paley graph of order 9, vertex labels shifted down to 0..8."""
    return Graph.from_edges(9, [(u - 1, v - 1) for u, v in _PALEY9_EDGES])


FIXTURES = {
    "petersen": petersen,
    "petersen_complement": line_graph_k5,
    "paley9": paley9,
}


# ---------------------------------------------------------------------------
# edge-list files
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Read ``n m`` followed by ``m`` lines ``u v`` (0-based)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphParseError("empty graph file")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphParseError("line 1: expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphParseError("line 1: 'n m' must be integers") from None
    if n < 0 or m < 0:
        raise GraphParseError("line 1: n and m must be nonnegative")
    if len(lines) - 1 != m:
        raise GraphParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    rows = [0] * n
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: vertices must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop at {u}")
        if rows[u] >> v & 1:
            raise GraphParseError(f"line {lineno}: duplicate edge {u} {v}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def format_graph(g: Graph) -> str:
    es = g.edges()
    return f"{g.n} {len(es)}\n" + "".join(f"{u} {v}\n" for u, v in es)
