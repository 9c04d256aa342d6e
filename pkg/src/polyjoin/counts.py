"""Integer counts read off graph polynomials, and the inner-product and
Poisson identities that connect them."""

from __future__ import annotations

import math
from math import factorial

from .cograph import Cotree, Op, PolyKind, compute_graph_polynomial
from .exactpoly import T, Poly, eval_int
from .graphs import Graph, complement
from .oracles import path_cover_poly_oracle, signed_path_cover_poly
from .transforms import MomentFunctional, apply_functional, inner_product


class ConventionError(ValueError):
    """Hamiltonian cycles on fewer than three vertices.

    Those counts only make sense under the cyclic-ordering convention
    c(K_m) = (m-1)!; ``oracles.count_directed_ham_cycles`` implements it.
    """


class PoissonConvergenceError(RuntimeError):
    pass


def perfect_matchings(mu: Poly) -> int:
    return mu.coeff(0)


def ham_paths(pi: Poly) -> int:
    return pi.coeff(1)


def _cycle_substitution(pi: Poly) -> int:
    # t^k -> (-1)^(k-1) (k-1)!
    total = 0
    for k, c in enumerate(pi.coeffs):
        if k and c:
            term = c * factorial(k - 1)
            total += -term if k % 2 == 0 else term
    return total


def ham_cycles_cograph(ct: Cotree) -> int:
    """Directed Hamiltonian cycles of a cograph from its cotree.

    A join root has a disconnected complement, which therefore has no
    Hamiltonian cycle, so the count is the cycle substitution applied to the
    path-cover polynomial.  A union root is disconnected: zero.
    """
    if ct.leaves < 3:
        raise ConventionError(
            "Hamiltonian cycles need at least 3 vertices; for n <= 2 use the "
            "cyclic-ordering convention c(K_m) = (m-1)!")
    if ct.op is Op.UNION:
        return 0
    return _cycle_substitution(compute_graph_polynomial(ct, PolyKind.PATH_COVER))


def complement_cotree(ct: Cotree) -> Cotree:
    if ct.op is Op.LEAF:
        return ct
    flipped = Op.JOIN if ct.op is Op.UNION else Op.UNION
    return Cotree(flipped, tuple(complement_cotree(c) for c in ct.children))


def cycle_characteristic(g: Graph | Cotree) -> int:
    """L[pi+ of the complement], which equals c(G) + (-1)^(n-1) c(complement)."""
    if isinstance(g, Cotree):
        n = g.leaves
        pi_bar = compute_graph_polynomial(complement_cotree(g), PolyKind.PATH_COVER)
    else:
        n = g.n
        pi_bar = path_cover_poly_oracle(complement(g))
    return apply_functional(MomentFunctional.LAGUERRE, signed_path_cover_poly(pi_bar, n))


def ham_cycles_join(pi_g: Poly, pi_h: Poly) -> int:
    """c(G join H) = sum_k k! (k-1)! [t^k]pi_G [t^k]pi_H."""
    total = 0
    for k in range(1, min(len(pi_g), len(pi_h))):
        a, b = pi_g.coeffs[k], pi_h.coeffs[k]
        if a and b:
            total += factorial(k) * factorial(k - 1) * a * b
    return total


def ham_cycles_via_inner(pi_plus_g_bar: Poly, pi_plus_h_bar: Poly) -> int:
    """c(G join H) as the Laguerre inner product of the complements' pi+."""
    return inner_product(MomentFunctional.LAGUERRE, pi_plus_g_bar, pi_plus_h_bar)


def ham_paths_via_inner(pi_plus_complement: Poly) -> int:
    """Directed Hamiltonian paths of G from pi+ of its complement, using the
    exponential-weight moments t^k -> k!."""
    return apply_functional(MomentFunctional.EXP, pi_plus_complement)


def ham_paths_via_laguerre(pi_plus_complement: Poly) -> int:
    # the other reading: <pi+, t> under the t^-1 e^-t weight
    return inner_product(MomentFunctional.LAGUERRE, pi_plus_complement, T)


def perfect_matchings_join(mu_plus_g_bar: Poly, mu_plus_h_bar: Poly) -> int:
    return inner_product(MomentFunctional.HERMITE, mu_plus_g_bar, mu_plus_h_bar)


def colorings(chi: Poly, colors: int) -> int:
    return eval_int(chi, colors)


def acyclic_orientations(chi: Poly) -> int:
    return abs(eval_int(chi, -1))


def poisson_check(xi_g: Poly, chi_g_bar: Poly, lam: float, eps: float = 1e-9,
                  max_terms: int = 10_000) -> float:
    """Relative gap between xi_G(lam) and E[chi_{complement}(X)], X ~ Pois(lam).

    The expectation is summed term by term in floating point until a bound on
    the remaining tail drops below ``eps / 10`` of the target's scale.  For
    j >= 1, |chi(j)| <= sum|c_i| j^deg, and the ratio of consecutive bounds is
    at most lam/(j+1) * ((j+1)/j)^deg, which makes the tail geometric once
    that ratio is under one.
    """
    lam = float(lam)
    if not (0 < lam <= 10):
        raise ValueError("lam must lie in (0, 10]")
    target = eval_int_float(xi_g, lam)
    scale = max(1.0, abs(target))
    deg = max(len(chi_g_bar) - 1, 0)
    abs_sum = float(sum(abs(c) for c in chi_g_bar.coeffs))
    pmf = math.exp(-lam)
    terms = []
    for j in range(max_terms + 1):
        if j:
            pmf *= lam / j
        terms.append(pmf * float(eval_int(chi_g_bar, j)))
        if j >= 1:
            ratio = lam / (j + 1) * ((j + 1) / j) ** deg
            if ratio < 1:
                bound = pmf * abs_sum * float(j) ** deg
                tail = bound * ratio / (1 - ratio)
                if tail < eps * scale / 10:
                    series = math.fsum(terms)
                    return abs(series - target) / scale
    raise PoissonConvergenceError(
        f"Poisson series did not converge within {max_terms} terms (lam={lam})")


def eval_int_float(p: Poly, x: float) -> float:
    # exact integer coefficients, float point; fsum keeps cancellation honest
    return math.fsum(float(c) * x ** k for k, c in enumerate(p.coeffs))
