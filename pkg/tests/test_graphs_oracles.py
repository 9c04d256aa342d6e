import random
from itertools import combinations, permutations, product

import pytest
from hypothesis import given, strategies as st

from polyjoin.exactpoly import Poly, eval_int, mul
from polyjoin.graphs import (
    FIXTURES, Graph, GraphParseError, complement, complete, complete_multipartite,
    cycle, empty, format_graph, induced, join, line_graph_k5, paley9, parse_graph,
    path, petersen, union,
)
from polyjoin.oracles import (
    OracleLimitExceeded, chromatic_poly_oracle, clique_cover_poly_oracle,
    count_directed_ham_cycles, count_directed_ham_paths, count_perfect_matchings,
    count_proper_colorings, matching_poly_oracle, path_cover_poly_oracle,
    signed_matching_poly, signed_path_cover_poly,
)


def P(*cs):
    return Poly(cs)


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


# -- brute-force references, deliberately naive ------------------------------

def brute_path_cover(g):
    # successor maps: injective, acyclic; k paths = n - arcs
    n = g.n
    cs = [0] * (n + 1)
    for succ in product(range(-1, n), repeat=n):
        used = [s for s in succ if s >= 0]
        if len(used) != len(set(used)):
            continue
        if any(s >= 0 and (s == v or not g.has_edge(v, s)) for v, s in enumerate(succ)):
            continue
        cyclic = False
        for v in range(n):
            seen, x = set(), v
            while x >= 0 and x not in seen:
                seen.add(x)
                x = succ[x]
            if x >= 0:
                cyclic = True
                break
        if not cyclic:
            cs[n - len(used)] += 1
    return Poly(cs)


def brute_matching_numbers(g):
    es = g.edges()
    out = [0] * (g.n // 2 + 1)
    for k in range(len(out)):
        for sub in combinations(es, k):
            vs = [v for e in sub for v in e]
            if len(vs) == len(set(vs)):
                out[k] += 1
    return out


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def brute_clique_cover(g):
    cs = [0] * (g.n + 1)
    for part in set_partitions(list(range(g.n))):
        if all(g.has_edge(u, v) for block in part for u, v in combinations(block, 2)):
            cs[len(part)] += 1
    return Poly(cs)


def brute_ham_cycles(g):
    if g.n < 3:
        return None
    count = 0
    for rest in permutations(range(1, g.n)):
        seq = (0,) + rest
        if all(g.has_edge(seq[i], seq[(i + 1) % g.n]) for i in range(g.n)):
            count += 1
    return count


# -- graph algebra -----------------------------------------------------------

def test_complement_examples():
    assert complement(complete(3)) == empty(3)
    lk5 = complement(petersen())
    assert lk5 == line_graph_k5()
    assert lk5.num_edges == 30


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.num_edges + complement(g).num_edges == g.n * (g.n - 1) // 2


def test_union_join_examples():
    k1 = complete(1)
    assert union(k1, k1) == empty(2)
    assert join(k1, k1) == complete(2)
    k23 = join(empty(2), empty(3))
    assert k23 == complete_multipartite([2, 3])
    assert k23.num_edges == 6


@given(graphs(max_n=5), graphs(max_n=5))
def test_complement_of_join_is_union_of_complements(g, h):
    assert complement(join(g, h)) == union(complement(g), complement(h))


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])


def test_named_graphs():
    p = petersen()
    assert p.n == 10 and p.num_edges == 15
    assert all(p.degree(v) == 3 for v in range(10))
    q = paley9()
    assert q.n == 9 and q.num_edges == 18
    assert all(q.degree(v) == 4 for v in range(9))
    assert cycle(4).num_edges == 4
    assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]


def test_paley9_is_self_complementary():
    # same degree sequence and same polynomials are necessary; the
    # path-cover polynomial is a strong invariant
    q = paley9()
    assert path_cover_poly_oracle(q) == path_cover_poly_oracle(complement(q))


# -- parsing -----------------------------------------------------------------

def test_parse_and_format_round_trip():
    for make in FIXTURES.values():
        g = make()
        assert parse_graph(format_graph(g)) == g


@pytest.mark.parametrize("text", [
    "",
    "3\n",
    "3 1\n0 0\n",
    "3 1\n0 3\n",
    "3 2\n0 1\n1 0\n",
    "3 2\n0 1\n",
    "3 1\n0 x\n",
    "a b\n",
    "3 1\n0 1 2\n",
])
def test_parse_errors(text):
    with pytest.raises(GraphParseError):
        parse_graph(text)


def test_parse_ignores_blank_lines():
    assert parse_graph("3 2\n\n0 1\n 1 2 \n") == path(3)


# -- oracle examples ---------------------------------------------------------

def test_path_cover_examples():
    assert path_cover_poly_oracle(complete(2)) == P(0, 2, 1)
    assert path_cover_poly_oracle(empty(3)) == P(0, 0, 0, 1)
    assert path_cover_poly_oracle(petersen()) == P(0, 240, 3120, 11160, 18280, 15912,
                                                    7860, 2240, 360, 30, 1)


def test_signed_examples():
    assert signed_path_cover_poly(P(0, 0, 1), 2) == P(0, 0, 1)
    assert signed_path_cover_poly(P(0, 2, 1), 2) == P(0, -2, 1)
    assert signed_path_cover_poly(path_cover_poly_oracle(paley9()), 9) == P(
        0, 1512, -11736, 26952, -26640, 13248, -3528, 504, -36, 1)


def test_signed_matching_sign_rule():
    # k-matching count on t^(n-2k) carries (-1)^k
    assert signed_matching_poly(P(1, 0, 1), 2) == P(-1, 0, 1)
    assert signed_matching_poly(P(0, 3, 0, 1), 3) == P(0, -3, 0, 1)
    assert signed_matching_poly(P(2, 0, 4, 0, 1), 4) == P(2, 0, -4, 0, 1)


def test_matching_examples():
    assert matching_poly_oracle(complete(2)) == P(1, 0, 1)
    assert matching_poly_oracle(empty(4)) == P(0, 0, 0, 0, 1)
    assert matching_poly_oracle(cycle(4)) == P(2, 0, 4, 0, 1)


def test_clique_cover_examples():
    assert clique_cover_poly_oracle(complete(3)) == P(0, 1, 3, 1)
    assert clique_cover_poly_oracle(empty(2)) == P(0, 0, 1)
    assert clique_cover_poly_oracle(complete(2)) == P(0, 1, 1)


def test_chromatic_examples():
    assert chromatic_poly_oracle(complete(3)) == P(0, 2, -3, 1)
    for n in range(1, 7):
        assert chromatic_poly_oracle(empty(n)) == Poly.monomial(n)
    assert chromatic_poly_oracle(cycle(4)) == P(0, -3, 6, -4, 1)


def test_hamiltonian_examples():
    assert count_directed_ham_cycles(complete(3)) == 2
    assert count_directed_ham_cycles(petersen()) == 0
    assert count_directed_ham_paths(complete_multipartite([2, 2])) == 8
    assert count_directed_ham_cycles(line_graph_k5()) == 6432
    assert count_directed_ham_cycles(paley9()) == 96


def test_small_cycle_convention():
    assert count_directed_ham_cycles(complete(1)) == 1
    assert count_directed_ham_cycles(complete(2)) == 1
    assert count_directed_ham_cycles(empty(2)) == 0
    for m in range(1, 8):
        assert count_directed_ham_cycles(complete(m)) == [1, 1, 1, 2, 6, 24, 120, 720][m]


def test_size_guards():
    big = empty(17)
    for fn in (path_cover_poly_oracle, clique_cover_poly_oracle, chromatic_poly_oracle):
        with pytest.raises(OracleLimitExceeded, match="oracle limit exceeded"):
            fn(big)
    with pytest.raises(OracleLimitExceeded):
        matching_poly_oracle(empty(25))
    with pytest.raises(OracleLimitExceeded):
        count_directed_ham_cycles(empty(21))


# -- oracles against brute force --------------------------------------------

@given(graphs(max_n=5))
def test_path_cover_vs_brute_force(g):
    assert path_cover_poly_oracle(g) == brute_path_cover(g)


@given(graphs(max_n=7))
def test_matching_vs_brute_force(g):
    ms = brute_matching_numbers(g)
    cs = [0] * (g.n + 1)
    for k, m in enumerate(ms):
        cs[g.n - 2 * k] = m
    assert matching_poly_oracle(g) == Poly(cs)
    assert count_perfect_matchings(g) == (ms[g.n // 2] if g.n % 2 == 0 else 0)


@given(graphs(max_n=7))
def test_clique_cover_vs_brute_force(g):
    assert clique_cover_poly_oracle(g) == brute_clique_cover(g)


@given(graphs(max_n=7))
def test_chromatic_vs_colorings(g):
    chi = chromatic_poly_oracle(g)
    assert chi.degree == g.n
    assert chi.coeff(g.n) == 1
    assert chi.coeff(g.n - 1) == -g.num_edges
    for k in range(0, g.n + 1):
        assert eval_int(chi, k) == count_proper_colorings(g, k)


@given(graphs(max_n=7))
def test_ham_cycles_vs_brute_force(g):
    expect = brute_ham_cycles(g)
    if expect is not None:
        assert count_directed_ham_cycles(g) == expect


@given(graphs(max_n=7))
def test_ham_paths_are_the_linear_coefficient(g):
    assert count_directed_ham_paths(g) == path_cover_poly_oracle(g).coeff(1)


@given(graphs(max_n=5), graphs(max_n=5))
def test_multiplicative_over_union(g, h):
    gh = union(g, h)
    for fn in (path_cover_poly_oracle, matching_poly_oracle,
               clique_cover_poly_oracle, chromatic_poly_oracle):
        assert fn(gh) == mul(fn(g), fn(h))


def test_chromatic_dense_and_sparse_graphs_up_to_14():
    rng = random.Random(11)
    for n in (12, 14):
        for p in (0.2, 0.8):
            g = Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])
            chi = chromatic_poly_oracle(g)
            for k in (2, 3):
                assert eval_int(chi, k) == count_proper_colorings(g, k)


@given(graphs(max_n=6))
def test_leading_coefficients(g):
    assert path_cover_poly_oracle(g).coeff(g.n) == 1
    assert clique_cover_poly_oracle(g).coeff(g.n) == 1
    assert clique_cover_poly_oracle(g).coeff(g.n - 1) == g.num_edges
    assert matching_poly_oracle(g).coeff(g.n) == 1
    if g.n >= 2:
        assert matching_poly_oracle(g).coeff(g.n - 2) == g.num_edges
        assert path_cover_poly_oracle(g).coeff(g.n - 1) == 2 * g.num_edges


def test_induced_subgraph():
    g = petersen()
    h = induced(g, 0b11111)
    assert h.n == 5
    assert h.edges() == [(u, v) for u, v in g.edges() if u < 5 and v < 5]
