import random

import pytest
from hypothesis import given, strategies as st

from polyjoin import counts
from polyjoin.cograph import cotree_to_graph, parse_cograph_expr, random_cotree
from polyjoin.exactpoly import T, Poly
from polyjoin.graphs import (
    complement, complete, complete_multipartite, cycle, empty, join, line_graph_k5,
    paley9, petersen,
)
from polyjoin.oracles import (
    chromatic_poly_oracle, clique_cover_poly_oracle, count_directed_ham_cycles,
    count_directed_ham_paths, count_perfect_matchings, matching_poly_oracle,
    path_cover_poly_oracle, signed_matching_poly, signed_path_cover_poly,
)
from polyjoin.verify import random_graph


def P(*cs):
    return Poly(cs)


def pi_plus_of_complement(g):
    return signed_path_cover_poly(path_cover_poly_oracle(complement(g)), g.n)


def test_perfect_matchings_examples():
    assert counts.perfect_matchings(P(1, 0, 1)) == 1
    assert counts.perfect_matchings(P(0, 0, 0, 0, 1)) == 0
    assert counts.perfect_matchings(P(2, 0, 4, 0, 1)) == 2


def test_ham_paths_examples():
    assert counts.ham_paths(P(0, 2, 1)) == 2
    assert counts.ham_paths(P(0, 0, 0, 1)) == 0
    assert counts.ham_paths(path_cover_poly_oracle(petersen())) == 240


def test_ham_cycles_cograph_examples():
    assert counts.ham_cycles_cograph(parse_cograph_expr("K(1,1,1)")) == 2
    assert counts.ham_cycles_cograph(parse_cograph_expr("E(2)*E(2)")) == 2
    octa = parse_cograph_expr("K(2,2,2)")
    assert counts.ham_cycles_cograph(octa) == count_directed_ham_cycles(complete_multipartite([2, 2, 2]))
    assert counts.ham_cycles_cograph(parse_cograph_expr("K(3)+K(3)")) == 0


def test_ham_cycles_cograph_convention_error():
    for text in ("K1", "K(2)", "E(2)"):
        with pytest.raises(counts.ConventionError, match="convention"):
            counts.ham_cycles_cograph(parse_cograph_expr(text))


@given(st.integers(3, 12), st.integers(0, 2**32))
def test_ham_cycles_cograph_matches_oracle(n, seed):
    ct = random_cotree(n, random.Random(seed))
    assert counts.ham_cycles_cograph(ct) == count_directed_ham_cycles(cotree_to_graph(ct))


def test_cycle_characteristic_examples():
    # L[pi+ of the complement] = c(G) + (-1)^(n-1) c(complement)
    assert counts.cycle_characteristic(line_graph_k5()) == 6432
    assert counts.cycle_characteristic(petersen()) == -6432
    assert counts.cycle_characteristic(paley9()) == 192
    assert counts.cycle_characteristic(empty(3)) == 2


def test_cycle_characteristic_from_cotree():
    for text in ("K(2,2,2)", "E(3)", "K(2)+K1*E(2)", "(K1+K1)*(K1+K(2))"):
        ct = parse_cograph_expr(text)
        assert counts.cycle_characteristic(ct) == counts.cycle_characteristic(cotree_to_graph(ct))


@given(st.integers(2, 7), st.integers(0, 2**32))
def test_cycle_characteristic_theorem(n, seed):
    g = random_graph(n, random.Random(seed))
    gb = complement(g)
    expect = count_directed_ham_cycles(g) + (-1) ** (n - 1) * count_directed_ham_cycles(gb)
    assert counts.cycle_characteristic(g) == expect


def test_cycle_characteristic_single_vertex_convention_gap():
    # at n = 1 the identity would need c(K1) + c(K1) = 2 but L[t] = 1
    assert counts.cycle_characteristic(complete(1)) == 1
    assert count_directed_ham_cycles(complete(1)) == 1


def test_ham_cycles_join_examples():
    assert counts.ham_cycles_join(P(0, 0, 1), P(0, 0, 1)) == 2
    assert counts.ham_cycles_join(T, T) == 1
    k4_minus_e = join(complete(2), empty(2))
    value = counts.ham_cycles_join(P(0, 2, 1), P(0, 0, 1))
    assert value == count_directed_ham_cycles(k4_minus_e) == 2


def test_ham_paths_via_inner_examples():
    assert counts.ham_paths_via_inner(P(0, 0, 1)) == 2
    assert counts.ham_paths_via_inner(P(0, 6, -6, 1)) == 0
    lk5 = line_graph_k5()
    assert counts.ham_paths_via_inner(pi_plus_of_complement(lk5)) == count_directed_ham_paths(lk5)


@given(st.integers(1, 7), st.integers(0, 2**32))
def test_both_readings_of_the_ham_path_integral(n, seed):
    g = random_graph(n, random.Random(seed))
    pp = pi_plus_of_complement(g)
    hp = count_directed_ham_paths(g)
    assert counts.ham_paths_via_inner(pp) == hp
    assert counts.ham_paths_via_laguerre(pp) == hp


def test_perfect_matchings_join_examples():
    assert counts.perfect_matchings_join(T, T) == 1
    k2_signed = P(-1, 0, 1)
    assert counts.perfect_matchings_join(k2_signed, k2_signed) == 2
    e2_bar = signed_matching_poly(matching_poly_oracle(complete(2)), 2)
    e3_bar = signed_matching_poly(matching_poly_oracle(complete(3)), 3)
    assert counts.perfect_matchings_join(e2_bar, e3_bar) == 0


@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2**32))
def test_join_identities_against_oracles(a, b, seed):
    rng = random.Random(seed)
    g, h = random_graph(a, rng), random_graph(b, rng)
    gh = join(g, h)
    pg, ph = pi_plus_of_complement(g), pi_plus_of_complement(h)
    assert counts.ham_cycles_via_inner(pg, ph) == count_directed_ham_cycles(gh)
    mg = signed_matching_poly(matching_poly_oracle(complement(g)), a)
    mh = signed_matching_poly(matching_poly_oracle(complement(h)), b)
    assert counts.perfect_matchings_join(mg, mh) == count_perfect_matchings(gh)
    if a >= 2:
        hc = counts.ham_cycles_join(path_cover_poly_oracle(g), path_cover_poly_oracle(h))
        assert hc == count_directed_ham_cycles(gh)


def test_colorings_examples():
    chi = P(0, 2, -3, 1)
    assert counts.colorings(chi, 3) == 6
    assert counts.colorings(chi, 2) == 0
    assert counts.acyclic_orientations(chi) == 6


def test_acyclic_orientations_of_a_square():
    # 16 orientations, 2 of them cyclic
    assert counts.acyclic_orientations(chromatic_poly_oracle(cycle(4))) == 14


def test_poisson_examples():
    xi_k2 = P(0, 1, 1)
    assert counts.poisson_check(xi_k2, P(0, 0, 1), 1.0) < 1e-9
    assert counts.poisson_check(P(0, 0, 1), P(0, -1, 1), 2.0) < 1e-9
    # the truncation point follows eps
    assert counts.poisson_check(xi_k2, P(0, 0, 1), 1.0, eps=1e-14) < 1e-13


def test_poisson_domain():
    with pytest.raises(ValueError):
        counts.poisson_check(T, T, 0.0)
    with pytest.raises(ValueError):
        counts.poisson_check(T, T, 11.0)


def test_poisson_nonconvergence_is_reported():
    with pytest.raises(counts.PoissonConvergenceError):
        counts.poisson_check(T, Poly.monomial(60), 10.0, max_terms=20)


@given(st.integers(1, 7), st.integers(0, 2**32), st.sampled_from([0.5, 1.0, 2.0, 7.5]))
def test_poisson_property(n, seed, lam):
    g = random_graph(n, random.Random(seed))
    xi = clique_cover_poly_oracle(g)
    chi_bar = chromatic_poly_oracle(complement(g))
    assert counts.poisson_check(xi, chi_bar, lam) < 1e-9
