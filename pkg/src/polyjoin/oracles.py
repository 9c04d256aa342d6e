"""Brute-force graph polynomials and Hamiltonian counts.

These are the ground truth everything else is checked against, so they work
straight from the definitions: subset dynamic programming over vertex
bitmasks, and deletion-contraction for the chromatic polynomial.  None of
them touch the duality operators.

Subset DPs carry a whole polynomial per subset packed into a single Python
int, ``_SLOT`` bits per coefficient.  All coefficients there are
nonnegative and far below 2**_SLOT, so slots never interfere.
"""

from __future__ import annotations

import numpy as np

from .exactpoly import ONE, Poly, mul, mul_many
from .graphs import Graph

PATH_COVER_LIMIT = 16
CLIQUE_COVER_LIMIT = 16
CHROMATIC_LIMIT = 16
MATCHING_LIMIT = 24
HAMILTONIAN_LIMIT = 20

_SLOT = 96
_SLOT_MASK = (1 << _SLOT) - 1


class OracleLimitExceeded(ValueError):
    def __init__(self, what: str, n: int, limit: int):
        super().__init__(f"oracle limit exceeded: {what} needs n <= {limit}, got n = {n}")
        self.what = what
        self.n = n
        self.limit = limit


def _guard(what: str, g: Graph, limit: int) -> None:
    if g.n > limit:
        raise OracleLimitExceeded(what, g.n, limit)


def _unpack_slots(x: int) -> list:
    out = []
    while x:
        out.append(x & _SLOT_MASK)
        x >>= _SLOT
    return out


# ---------------------------------------------------------------------------
# Hamiltonian paths and cycles
# ---------------------------------------------------------------------------

def _walk_table(g: Graph, start: int | None) -> np.ndarray:
    """dp[mask, v] = number of directed paths visiting exactly ``mask`` and
    ending at ``v``; paths start at ``start``, or anywhere if it is None."""
    n = g.n
    size = 1 << n
    dp = np.zeros((size, n), dtype=np.int64)
    if start is None:
        for v in range(n):
            dp[1 << v, v] = 1
    else:
        dp[1 << start, start] = 1
    masks = np.arange(size, dtype=np.int64)
    popcount = np.zeros(size, dtype=np.int64)
    for v in range(n):
        popcount += (masks >> v) & 1
    nbrs = [g.neighbors(v) for v in range(n)]
    for layer in range(1, n):
        layer_masks = masks[popcount == layer]
        for v in range(n):
            sel = layer_masks[(layer_masks >> v) & 1 == 1]
            if sel.size == 0:
                continue
            vals = dp[sel, v]
            live = vals != 0
            sel, vals = sel[live], vals[live]
            if sel.size == 0:
                continue
            for u in nbrs[v]:
                free = (sel >> u) & 1 == 0
                dp[sel[free] | (1 << u), u] += vals[free]
    return dp


def count_directed_ham_paths(g: Graph) -> int:
    _guard("Hamiltonian paths", g, HAMILTONIAN_LIMIT)
    if g.n == 0:
        return 0
    dp = _walk_table(g, None)
    return int(sum(int(x) for x in dp[g.full_mask]))


def count_directed_ham_cycles(g: Graph) -> int:
    """Directed Hamiltonian cycles; each undirected cycle counts twice.

    For n <= 2 this follows the cyclic-ordering convention c(K_m) = (m-1)!:
    a single vertex has one cycle, and two vertices have one cycle exactly
    when they are adjacent.
    """
    _guard("Hamiltonian cycles", g, HAMILTONIAN_LIMIT)
    n = g.n
    if n == 0:
        return 0
    if n == 1:
        return 1
    if n == 2:
        return 1 if g.has_edge(0, 1) else 0
    dp = _walk_table(g, 0)
    row = dp[g.full_mask]
    return int(sum(int(row[v]) for v in g.neighbors(0)))


def ham_path_counts_by_subset(g: Graph) -> list:
    """Directed Hamiltonian path counts of every induced subgraph, by mask."""
    dp = _walk_table(g, None)
    return [int(x) for x in dp.sum(axis=1)]


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def path_cover_poly_oracle(g: Graph) -> Poly:
    _guard("path-cover polynomial", g, PATH_COVER_LIMIT)
    n = g.n
    if n == 0:
        return ONE
    dhp = ham_path_counts_by_subset(g)
    # only sets obtained by peeling blocks off V are needed; those are V
    # itself and every set avoiding vertex 0
    memo = {0: 1}

    def cover(s: int) -> int:
        got = memo.get(s)
        if got is not None:
            return got
        low = s & -s
        rest = s ^ low
        total = 0
        sub = rest
        while True:
            t = sub | low
            w = dhp[t]
            if w:
                total += w * cover(s ^ t)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        total <<= _SLOT
        memo[s] = total
        return total

    return Poly(_unpack_slots(cover(g.full_mask)))


def signed_path_cover_poly(p: Poly, n: int) -> Poly:
    """sum_k (-1)**(n-k) p_k t**k from the unsigned polynomial."""
    return Poly(c if (n - k) % 2 == 0 else -c for k, c in enumerate(p.coeffs))


def matching_numbers(g: Graph) -> list:
    """m_k for k = 0, 1, ...: number of k-edge matchings."""
    _guard("matching polynomial", g, MATCHING_LIMIT)
    adj = g.adj
    memo = {0: 1}

    def count(s: int) -> int:
        got = memo.get(s)
        if got is not None:
            return got
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        total = count(rest)
        cand = adj[v] & rest
        paired = 0
        while cand:
            bit = cand & -cand
            cand ^= bit
            paired += count(rest ^ bit)
        total += paired << _SLOT
        memo[s] = total
        return total

    return _unpack_slots(count(g.full_mask)) or [0]


def matching_poly_oracle(g: Graph) -> Poly:
    """sum_k m_k t**(n-2k), all coefficients nonnegative."""
    ms = matching_numbers(g)
    cs = [0] * (g.n + 1)
    for k, m in enumerate(ms):
        cs[g.n - 2 * k] = m
    return Poly(cs)


def signed_matching_poly(p: Poly, n: int) -> Poly:
    """Multiply the t**(n-2k) coefficient, the k-matching count, by (-1)**k.

    This is the sign under which mu_G = phi_mu[mu+ of the complement] holds
    for every n.  Weighting by (-1)**(n-k) instead agrees for even n and is
    off by an overall -1 for odd n.
    """
    cs = list(p.coeffs)
    for d, c in enumerate(cs):
        if c and ((n - d) // 2) & 1:
            cs[d] = -c
    return Poly(cs)


def _cliques_through(adj: tuple, v: int, within: int) -> list:
    """Every clique (as a mask) that contains v and lies inside ``within``."""
    out = []

    def grow(clique: int, cand: int) -> None:
        out.append(clique)
        while cand:
            bit = cand & -cand
            cand ^= bit
            u = bit.bit_length() - 1
            grow(clique | bit, cand & adj[u])

    grow(1 << v, adj[v] & within)
    return out


def clique_cover_poly_oracle(g: Graph) -> Poly:
    _guard("clique-cover polynomial", g, CLIQUE_COVER_LIMIT)
    if g.n == 0:
        return ONE
    adj = g.adj
    memo = {0: 1}

    def cover(s: int) -> int:
        got = memo.get(s)
        if got is not None:
            return got
        low = s & -s
        v = low.bit_length() - 1
        total = 0
        for c in _cliques_through(adj, v, s ^ low):
            total += cover(s ^ c)
        total <<= _SLOT
        memo[s] = total
        return total

    return Poly(_unpack_slots(cover(g.full_mask)))


# ---------------------------------------------------------------------------
# chromatic polynomial by deletion-contraction
# ---------------------------------------------------------------------------

def chromatic_poly_oracle(g: Graph) -> Poly:
    _guard("chromatic polynomial", g, CHROMATIC_LIMIT)
    memo: dict = {}
    return _chromatic(g.adj, memo)


def _falling(n: int, offset: int = 0) -> Poly:
    # (t - offset)(t - offset - 1)...(t - offset - n + 1)
    return mul_many([Poly((-(offset + i), 1)) for i in range(n)])


def _relabel(adj: tuple, keep: list) -> tuple:
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        x = adj[v]
        while x:
            bit = x & -x
            x ^= bit
            u = bit.bit_length() - 1
            if u in index:
                r |= 1 << index[u]
        rows.append(r)
    return tuple(rows)


def _chromatic(adj: tuple, memo: dict) -> Poly:
    n = len(adj)
    if n == 0:
        return ONE
    got = memo.get(adj)
    if got is not None:
        return got
    degs = [bin(r).count("1") for r in adj]
    m = sum(degs) // 2
    if m == 0:
        result = Poly.monomial(n)
    elif m == n * (n - 1) // 2:
        result = _falling(n)
    else:
        result = _chromatic_reduce(adj, degs, m, memo)
    memo[adj] = result
    return result


def _chromatic_reduce(adj: tuple, degs: list, m: int, memo: dict) -> Poly:
    n = len(adj)
    comps = _components(adj)
    if len(comps) > 1:
        parts = [_chromatic(_relabel(adj, _bits(c)), memo) for c in comps]
        return mul_many(parts)
    # a simplicial vertex v (its neighbours form a clique) peels off as (t - deg v)
    for v in range(n):
        nb = adj[v]
        if all((adj[u] | (1 << u)) & nb == nb for u in _bits(nb)):
            rest = _chromatic(_relabel(adj, [u for u in range(n) if u != v]), memo)
            return mul(rest, Poly((-degs[v], 1)))
    if 2 * m > n * (n - 1) // 2:
        # dense: P(G) = P(G + uv) + P(G / uv) for a non-edge uv
        u = max(range(n), key=lambda x: degs[x] if degs[x] < n - 1 else -1)
        missing = ((1 << n) - 1) & ~adj[u] & ~(1 << u)
        v = (missing & -missing).bit_length() - 1
        added = list(adj)
        added[u] |= 1 << v
        added[v] |= 1 << u
        return _chromatic(tuple(added), memo) + _chromatic(_contract(adj, u, v), memo)
    # sparse: P(G) = P(G - uv) - P(G / uv)
    u = max(range(n), key=lambda x: degs[x])
    v = max(_bits(adj[u]), key=lambda x: degs[x])
    removed = list(adj)
    removed[u] &= ~(1 << v)
    removed[v] &= ~(1 << u)
    return _chromatic(tuple(removed), memo) - _chromatic(_contract(adj, u, v), memo)


def _contract(adj: tuple, u: int, v: int) -> tuple:
    merged = list(adj)
    merged[u] = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
    for w in _bits(adj[v]):
        if w != u:
            merged[w] |= 1 << u
    keep = [w for w in range(len(adj)) if w != v]
    return _relabel(tuple(merged), keep)


def _bits(x: int) -> list:
    out = []
    while x:
        bit = x & -x
        x ^= bit
        out.append(bit.bit_length() - 1)
    return out


def _components(adj: tuple) -> list:
    n = len(adj)
    seen = 0
    out = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            new = adj[bit.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        out.append(comp)
    return out


def count_proper_colorings(g: Graph, k: int) -> int:
    """Proper k-colourings by backtracking; used to spot-check chi."""
    colors = [-1] * g.n
    nbrs = [g.neighbors(v) for v in range(g.n)]

    def place(v: int) -> int:
        if v == g.n:
            return 1
        total = 0
        for c in range(k):
            if all(colors[u] != c for u in nbrs[v] if u < v):
                colors[v] = c
                total += place(v + 1)
        colors[v] = -1
        return total

    return place(0)


def count_perfect_matchings(g: Graph) -> int:
    if g.n % 2:
        return 0
    ms = matching_numbers(g)
    k = g.n // 2
    return ms[k] if k < len(ms) else 0
