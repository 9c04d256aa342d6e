"""Basis-change operators between graph polynomials and their duals.

Every operator here is linear and is pinned down by where it sends each
monomial t**n:

========  ===============================================  ==============
kind      image of t**n                                    inverse
========  ===============================================  ==============
PI_FWD    sum_k L(n, k) t**k            (Lah numbers)      PI_INV
PI_INV    sum_k (-1)**(n-k) L(n, k) t**k                   PI_FWD
MU_FWD    sum_j C(n, 2j) (2j-1)!! t**(n-2j)                MU_INV
MU_INV    sum_j (-1)**j C(n, 2j) (2j-1)!! t**(n-2j)        MU_FWD
XI_FWD    sum_k S(n, k) t**k            (Stirling 2nd)     CHI_FWD
CHI_FWD   t (t-1) ... (t-n+1)           (falling fact.)    XI_FWD
========  ===============================================  ==============

``monomial_image`` builds those images from cached tables.
``apply_transform`` does not sweep the tables.  It uses one exact
convolution for the Lah and matching operators, and Horner-style kernels
for the Stirling and falling-factorial pair.  On a degree-1000 input that
is the difference between seconds and minutes.  ``apply_transform_naive``
is the table sweep, kept as the cross-check.

The moment functionals replace integrals of polynomials against a weight by
the weight's integer moments.
"""

from __future__ import annotations

import enum
import threading
from functools import lru_cache
from math import comb, factorial

from .exactpoly import ONE, ZERO, Poly, add, mul, scale


class TransformKind(enum.Enum):
    PI_FWD = "pi"
    PI_INV = "pi_inv"
    MU_FWD = "mu"
    MU_INV = "mu_inv"
    XI_FWD = "xi"
    CHI_FWD = "chi"

    @property
    def inverse(self) -> "TransformKind":
        return _INVERSES[self]


_INVERSES = {
    TransformKind.PI_FWD: TransformKind.PI_INV,
    TransformKind.PI_INV: TransformKind.PI_FWD,
    TransformKind.MU_FWD: TransformKind.MU_INV,
    TransformKind.MU_INV: TransformKind.MU_FWD,
    TransformKind.XI_FWD: TransformKind.CHI_FWD,
    TransformKind.CHI_FWD: TransformKind.XI_FWD,
}


class FunctionalDomainError(ValueError):
    pass


class MomentFunctional(enum.Enum):
    """Integer moments of t^-1 e^-t on (0, inf), e^-t on (0, inf), and the
    standard Gaussian."""

    LAGUERRE = "laguerre"
    EXP = "exp"
    HERMITE = "hermite"

    def moment(self, k: int) -> int:
        if self is MomentFunctional.LAGUERRE:
            if k < 1:
                raise FunctionalDomainError("functional undefined at t^0")
            return factorial(k - 1)
        if self is MomentFunctional.EXP:
            return factorial(k)
        if k & 1:
            return 0
        return double_factorial(k - 1)


# ---------------------------------------------------------------------------
# combinatorial numbers
# ---------------------------------------------------------------------------

def _check_range(n: int, k: int) -> None:
    if not (1 <= k <= n):
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")


def lah(n: int, k: int) -> int:
    """Unsigned Lah number: ordered-list partitions of n items into k lists."""
    _check_range(n, k)
    return factorial(n) // factorial(k) * comb(n - 1, k - 1)


class _StirlingTable:
    # rows of S(n, k), grown on demand; appends are serialized
    def __init__(self):
        self._rows = [[1]]
        self._lock = threading.Lock()

    def row(self, n: int) -> list:
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(rows) <= n:
                prev = rows[-1]
                m = len(rows)
                new = [0] * (m + 1)
                for k in range(1, m + 1):
                    left = prev[k] if k < m else 0
                    new[k] = k * left + prev[k - 1]
                rows.append(new)
        return rows[n]


_STIRLING = _StirlingTable()


def stirling2(n: int, k: int) -> int:
    _check_range(n, k)
    return _STIRLING.row(n)[k]


def double_factorial(n: int) -> int:
    """n!! with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError("double factorial defined for n >= -1")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def falling_factorial(n: int) -> Poly:
    p = ONE
    for i in range(n):
        p = mul(p, Poly((-i, 1)))
    return p


# ---------------------------------------------------------------------------
# monomial images
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def monomial_image(kind: TransformKind, n: int) -> Poly:
    if n < 0:
        raise ValueError("monomial degree must be nonnegative")
    if n == 0:
        return ONE
    K = TransformKind
    if kind in (K.PI_FWD, K.PI_INV):
        cs = [0] * (n + 1)
        for k in range(1, n + 1):
            v = lah(n, k)
            cs[k] = -v if kind is K.PI_INV and (n - k) & 1 else v
        return Poly(cs)
    if kind in (K.MU_FWD, K.MU_INV):
        cs = [0] * (n + 1)
        for j in range(n // 2 + 1):
            v = comb(n, 2 * j) * double_factorial(2 * j - 1)
            cs[n - 2 * j] = -v if kind is K.MU_INV and j & 1 else v
        return Poly(cs)
    if kind is K.XI_FWD:
        return Poly(_STIRLING.row(n))
    if kind is K.CHI_FWD:
        return mul(monomial_image(kind, n - 1), Poly((-(n - 1), 1)))
    raise ValueError(kind)


def apply_transform_naive(kind: TransformKind, p: Poly) -> Poly:
    out = ZERO
    for n, c in enumerate(p.coeffs):
        if c:
            out = add(out, scale(monomial_image(kind, n), c))
    return out


# ---------------------------------------------------------------------------
# fast kernels
# ---------------------------------------------------------------------------

def _correlate(u: list, w: list) -> list:
    """d[k] = sum_j u[k + j] * w[j] for k in range(len(u))."""
    conv = mul(Poly(reversed(u)), Poly(w)).coeffs
    top = len(u) - 1
    return [conv[top - k] if 0 <= top - k < len(conv) else 0 for k in range(len(u))]


def _lah_kernel(cs: tuple, sign: int) -> Poly:
    # b_k = sum_n a_n s^(n-k) n!(n-1)! / (k!(k-1)!(n-k)!)
    N = len(cs) - 1
    fact = _factorials(N)
    u = [0] + [cs[n] * fact[n] * fact[n - 1] for n in range(1, N + 1)]
    fN = fact[N]
    w = [(fN // fact[j]) * (sign ** j) for j in range(N + 1)]
    d = _correlate(u, w)
    out = [cs[0]]
    for k in range(1, N + 1):
        q, r = divmod(d[k], fN * fact[k] * fact[k - 1])
        assert r == 0
        out.append(q)
    return Poly(out)


def _matching_kernel(cs: tuple, sign: int) -> Poly:
    # b_k = sum_j a_{k+2j} (k+2j)! s^j / (k! 2^j j!)
    N = len(cs) - 1
    fact = _factorials(N)
    J = N // 2
    D = (1 << J) * fact[J]
    u = [cs[n] * fact[n] for n in range(N + 1)]
    w = [0] * (N + 1)
    for j in range(J + 1):
        w[2 * j] = (D // ((1 << j) * fact[j])) * (sign ** j)
    d = _correlate(u, w)
    out = []
    for k in range(N + 1):
        q, r = divmod(d[k], D * fact[k])
        assert r == 0
        out.append(q)
    return Poly(out)


def _stirling_kernel(cs: tuple) -> Poly:
    # coefficients of p in the falling-factorial basis are its scaled forward
    # differences at 0: b_k = sum_i p(i)/i! * (-1)^(k-i)/(k-i)!
    N = len(cs) - 1
    fact = _factorials(N)
    fN = fact[N]
    rev = cs[::-1]
    v = []
    for i in range(N + 1):
        acc = 0
        for c in rev:
            acc = acc * i + c
        v.append(acc * (fN // fact[i]))
    w = [(fN // fact[j]) * (-1) ** j for j in range(N + 1)]
    conv = mul(Poly(v), Poly(w)).coeffs
    denom = fN * fN
    out = []
    for k in range(N + 1):
        c = conv[k] if k < len(conv) else 0
        q, r = divmod(c, denom)
        assert r == 0
        out.append(q)
    return Poly(out)


def _falling_kernel(cs: tuple) -> Poly:
    # a_0 + t(a_1 + (t-1)(a_2 + (t-2)(...)))
    N = len(cs) - 1
    acc = [cs[N]]
    for n in range(N - 1, -1, -1):
        # acc * (t - n) + a_n
        nxt = [0] * (len(acc) + 1)
        for i, c in enumerate(acc):
            nxt[i + 1] += c
            nxt[i] -= n * c
        nxt[0] += cs[n]
        acc = nxt
    return Poly(acc)


@lru_cache(maxsize=8)
def _factorials(n: int) -> tuple:
    out = [1] * (n + 1)
    for i in range(1, n + 1):
        out[i] = out[i - 1] * i
    return tuple(out)


def apply_transform(kind: TransformKind, p: Poly) -> Poly:
    cs = p.coeffs
    if len(cs) <= 1:
        return p
    K = TransformKind
    if kind is K.PI_FWD:
        return _lah_kernel(cs, 1)
    if kind is K.PI_INV:
        return _lah_kernel(cs, -1)
    if kind is K.MU_FWD:
        return _matching_kernel(cs, 1)
    if kind is K.MU_INV:
        return _matching_kernel(cs, -1)
    if kind is K.XI_FWD:
        return _stirling_kernel(cs)
    if kind is K.CHI_FWD:
        return _falling_kernel(cs)
    raise ValueError(kind)


# ---------------------------------------------------------------------------
# functionals
# ---------------------------------------------------------------------------

def apply_functional(kind: MomentFunctional, p: Poly) -> int:
    cs = p.coeffs
    if kind is MomentFunctional.LAGUERRE and cs and cs[0] != 0:
        raise FunctionalDomainError(
            "functional undefined at t^0: polynomial has a nonzero constant term")
    total = 0
    for k, c in enumerate(cs):
        if c and not (kind is MomentFunctional.LAGUERRE and k == 0):
            total += c * kind.moment(k)
    return total


def inner_product(kind: MomentFunctional, f: Poly, g: Poly) -> int:
    return apply_functional(kind, mul(f, g))
