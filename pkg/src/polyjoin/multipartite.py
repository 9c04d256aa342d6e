"""Hamiltonian path and cycle counts for complete multipartite graphs.

Three independent routes are provided and cross-checked in the tests:

* the operator pipeline on per-part monomials,
* closed forms for K_{n,...,n} in terms of partial Bell polynomials,
* expectation forms, realized as exact moment functionals applied to
  products of scaled associated Laguerre polynomials.

The cycle formulas single out the last part.  Its weight is
a!(a-1)! for a last part of size a, which is what the sum over k!(k-1)!
gives; the counts are invariant under permuting the parts.
"""

from __future__ import annotations

from math import comb, factorial
from typing import Sequence

from .exactpoly import Poly, mul, mul_many, power
from .transforms import (
    MomentFunctional,
    TransformKind,
    apply_functional,
    apply_transform,
    monomial_image,
)


class MethodMismatch(ValueError):
    """A closed form was asked for on unbalanced parts."""


def _check_parts(parts: Sequence[int]) -> list:
    parts = [int(a) for a in parts]
    if not parts:
        raise ValueError("need at least one part")
    if any(a < 1 for a in parts):
        raise ValueError("part sizes must be positive")
    return parts


def bell_row(m: int, xs: Sequence[int], kmax: int) -> list:
    """[B_{k,m}(xs) for k in 0..kmax] (exponential partial Bell polynomials).

    B_{k,m} is read off (1/m!) (sum_j x_j t^j / j!)^m = sum_k B_{k,m} t^k / k!.
    The inner series is scaled by J! (J = len(xs)) to stay in integers.
    """
    if m < 1:
        raise ValueError("m must be positive")
    xs = list(xs)
    while xs and xs[-1] == 0:
        xs.pop()  # trailing zeros would only inflate the scale factor
    J = len(xs)
    if J == 0:
        return [0] * (kmax + 1)
    scale = factorial(J)
    inner = Poly([0] + [x * (scale // factorial(j)) for j, x in enumerate(xs, start=1)])
    powered = _power_truncated(inner, m, kmax)
    denom = scale ** m * factorial(m)
    out = []
    for k in range(kmax + 1):
        q, r = divmod(powered.coeff(k) * factorial(k), denom)
        if r:
            raise ArithmeticError(f"non-integral Bell coefficient at k={k}")
        out.append(q)
    return out


def _power_truncated(p: Poly, m: int, deg: int) -> Poly:
    """p**m with every term above t**deg dropped along the way."""
    def cut(q: Poly) -> Poly:
        return Poly(q.coeffs[:deg + 1])

    result, base = Poly((1,)), cut(p)
    while m:
        if m & 1:
            result = cut(mul(result, base))
        m >>= 1
        if m:
            base = cut(mul(base, base))
    return result


def bell_partial(k: int, m: int, xs: Sequence[int]) -> int:
    if k < 1 or m < 1:
        raise ValueError("k and m must be positive")
    if m > k:
        return 0
    need = k - m + 1
    if len(xs) < need:
        raise ValueError(f"B_{{{k},{m}}} needs {need} arguments, got {len(xs)}")
    return bell_row(m, list(xs[:need]), k)[k]


def _joined_parts(parts: Sequence[int]) -> Poly:
    """pi_pi^{-1} images of the parts, multiplied, then mapped forward: the
    path-cover polynomial of K_{parts}."""
    inv = [monomial_image(TransformKind.PI_INV, a) for a in parts]
    return apply_transform(TransformKind.PI_FWD, mul_many(inv))


def hp_multipartite(parts: Sequence[int]) -> int:
    parts = _check_parts(parts)
    return _joined_parts(parts).coeff(1)


def hc_multipartite(parts: Sequence[int]) -> int:
    parts = _check_parts(parts)
    if len(parts) < 2:
        raise ValueError("need at least two parts")
    *rest, last = parts
    weight = factorial(last) * factorial(last - 1)
    return weight * _joined_parts(rest).coeff(last)


def hp_balanced(n: int, m: int) -> int:
    """Directed Hamiltonian paths of the complete m-partite K_{n,...,n}."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    xs = [comb(n - 1, i - 1) for i in range(1, n * m - m + 2)]
    bells = bell_row(m, xs, n * m)
    total = sum((-1) ** k * bells[k] for k in range(m, n * m + 1))
    return factorial(n) ** m * factorial(m) * (-1) ** (n * m) * total


def hc_balanced(n: int, m: int) -> int:
    """Directed Hamiltonian cycles of the complete (m+1)-partite K_{n,...,n}."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    xs = [comb(n - 1, i - 1) for i in range(1, n * m - m + 2)]
    bells = bell_row(m, xs, n * m)
    total = sum((-1) ** k * comb(k - 1, n - 1) * bells[k]
                for k in range(max(n, m), n * m + 1))
    return (-1) ** (n * m) * factorial(n) ** m * factorial(n - 1) * factorial(m) * total


def hc_balanced_fast(n: int, m: int) -> int:
    """Same count as ``hc_balanced`` via one m-th power and one transform.

    The inner polynomial sum_k (-1)^(n+k) n! C(n-1,k-1) t^k / k! has integer
    coefficients (they are signed Lah numbers), so no scale factor survives.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    inner = Poly([0] + [(-1) ** (n + k) * (factorial(n) // factorial(k)) * comb(n - 1, k - 1)
                        for k in range(1, n + 1)])
    lifted = apply_transform(TransformKind.PI_FWD, power(inner, m))
    return factorial(n) * factorial(n - 1) * lifted.coeff(n)


def hp_balanced_fast(n: int, m: int) -> int:
    """``hp_balanced`` by the same power-then-transform route as
    ``hc_balanced_fast``: [t^1] of phi_pi applied to the m-th power of the
    signed Lah row of t^n."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    inner = monomial_image(TransformKind.PI_INV, n)
    return apply_transform(TransformKind.PI_FWD, power(inner, m)).coeff(1)


def scaled_laguerre(n: int) -> Poly:
    """(-1)^n n! L_n^(-1)(t) from the associated Laguerre closed form
    L_n^(a)(t) = sum_i (-1)^i C(n+a, n-i) t^i / i!."""
    if n < 1:
        raise ValueError("n must be positive")
    cs = [0] * (n + 1)
    for i in range(n + 1):
        c = comb(n - 1, n - i) * (factorial(n) // factorial(i))
        cs[i] = c if (n + i) % 2 == 0 else -c
    return Poly(cs)


def laguerre_expectation_forms(parts: Sequence[int], which: str) -> int:
    """E[prod_i (-1)^a_i a_i! L_{a_i}^(-1)(X)] for X ~ Exp(1) ("HP"), or the
    same with an extra 1/X ("HC"), computed through exact moments."""
    parts = _check_parts(parts)
    prod = mul_many(scaled_laguerre(a) for a in parts)
    which = which.upper()
    if which == "HP":
        return apply_functional(MomentFunctional.EXP, prod)
    if which == "HC":
        if len(parts) < 2:
            raise ValueError("cycle form needs at least two parts")
        return apply_functional(MomentFunctional.LAGUERRE, prod)
    raise ValueError("which must be 'HP' or 'HC'")


def is_balanced(parts: Sequence[int]) -> bool:
    return len(set(parts)) == 1
