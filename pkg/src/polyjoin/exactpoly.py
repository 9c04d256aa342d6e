"""Dense univariate polynomials with exact integer coefficients.

Coefficients are plain Python ints, stored lowest degree first.  The zero
polynomial has no coefficients at all, so ``degree`` refuses to answer for it.

Multiplication uses schoolbook products for short operands and Kronecker
substitution above ``KARATSUBA_THRESHOLD``: both operands are packed into one
big integer, GMP multiplies them once, and the product is unpacked.  A pure
coefficient-level Karatsuba is kept as ``mul_karatsuba``; the fast path is
tested against it.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

import gmpy2

KARATSUBA_THRESHOLD = 32


class Poly:
    """Immutable dense polynomial; ``coeffs[i]`` is the coefficient of t**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Poly":
        # caller guarantees a normalized tuple of ints
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> "Poly":
        if c == 0:
            return ZERO
        return cls._raw((0,) * n + (c,))

    @classmethod
    def constant(cls, c: int) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __str__(self) -> str:
        return render_pretty(self)

    def __add__(self, other):
        return add(self, _as_poly(other))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return add(self, -_as_poly(other))

    def __rsub__(self, other):
        return add(_as_poly(other), -self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, m: int):
        return power(self, m)

    def __call__(self, x: int) -> int:
        return eval_int(self, x)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, int):
        return Poly((x,))
    raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")


ZERO = Poly()
ONE = Poly((1,))
T = Poly((0, 1))


def add(a: Poly, b: Poly) -> Poly:
    x, y = a.coeffs, b.coeffs
    if len(x) < len(y):
        x, y = y, x
    out = list(x)
    for i, c in enumerate(y):
        out[i] += c
    return Poly(out)


def scale(p: Poly, c: int) -> Poly:
    if c == 0:
        return ZERO
    return Poly._raw(tuple(c * a for a in p.coeffs))


def shift(p: Poly, k: int) -> Poly:
    """Multiply by t**k."""
    if not p.coeffs:
        return p
    return Poly._raw((0,) * k + p.coeffs)


def _schoolbook(x: Sequence[int], y: Sequence[int]) -> list:
    if len(x) < len(y):
        x, y = y, x
    out = [0] * (len(x) + len(y) - 1)
    for j, b in enumerate(y):
        if b:
            for i, a in enumerate(x):
                out[i + j] += a * b
    return out


def _karatsuba(x: Sequence[int], y: Sequence[int]) -> list:
    n, m = len(x), len(y)
    if min(n, m) < KARATSUBA_THRESHOLD:
        return _schoolbook(x, y)
    half = max(n, m) // 2
    x0, x1 = x[:half], x[half:]
    y0, y1 = y[:half], y[half:]
    if not x1 or not y1:
        # unbalanced: split the long operand only
        if not x1:
            x, y, n, m = y, x, m, n
        out = [0] * (n + m - 1)
        for start in range(0, n, m):
            part = _karatsuba(x[start:start + m], y)
            for i, c in enumerate(part):
                out[start + i] += c
        return out
    z0 = _karatsuba(x0, y0)
    z2 = _karatsuba(x1, y1)
    sx = _add_lists(x0, x1)
    sy = _add_lists(y0, y1)
    z1 = _karatsuba(sx, sy)
    for i, c in enumerate(z0):
        z1[i] -= c
    for i, c in enumerate(z2):
        z1[i] -= c
    out = [0] * (n + m - 1)
    for i, c in enumerate(z0):
        out[i] += c
    for i, c in enumerate(z1):
        if i + half < len(out):
            out[i + half] += c
    for i, c in enumerate(z2):
        out[i + 2 * half] += c
    return out


def _add_lists(a, b) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _slot_bits(x: Sequence[int], y: Sequence[int]) -> int:
    # |product coefficient| <= min(len) * max|x| * max|y|; one extra bit for sign
    bx = max(abs(c) for c in x).bit_length()
    by = max(abs(c) for c in y).bit_length()
    bits = bx + by + min(len(x), len(y)).bit_length() + 1
    return (bits + 7) // 8 * 8


def _pack(cs: Sequence[int], bits: int) -> int:
    # balanced Horner: halves of the list are packed recursively
    n = len(cs)
    if n <= 16:
        acc = 0
        for c in reversed(cs):
            acc = (acc << bits) + c
        return acc
    mid = n // 2
    return _pack(cs[:mid], bits) + (_pack(cs[mid:], bits) << (bits * mid))


def _unpack(z: int, count: int, bits: int) -> list:
    width = bits // 8
    total = width * count
    raw = (z % (1 << (8 * total))).to_bytes(total, "little")
    half = 1 << (bits - 1)
    full = 1 << bits
    out = []
    carry = 0
    from_bytes = int.from_bytes
    for i in range(count):
        d = from_bytes(raw[i * width:(i + 1) * width], "little") + carry
        if d >= half:
            d -= full
            carry = 1
        else:
            carry = 0
        out.append(d)
    return out


def _kronecker(x: Sequence[int], y: Sequence[int]) -> list:
    bits = _slot_bits(x, y)
    # GMP switches to FFT multiplication at these sizes; CPython stays Karatsuba
    z = int(gmpy2.mpz(_pack(x, bits)) * gmpy2.mpz(_pack(y, bits)))
    return _unpack(z, len(x) + len(y) - 1, bits)


def mul(a: Poly, b: Poly) -> Poly:
    x, y = a.coeffs, b.coeffs
    if not x or not y:
        return ZERO
    if min(len(x), len(y)) < KARATSUBA_THRESHOLD:
        return Poly(_schoolbook(x, y))
    return Poly(_kronecker(x, y))


def mul_schoolbook(a: Poly, b: Poly) -> Poly:
    if not a.coeffs or not b.coeffs:
        return ZERO
    return Poly(_schoolbook(a.coeffs, b.coeffs))


def mul_karatsuba(a: Poly, b: Poly) -> Poly:
    if not a.coeffs or not b.coeffs:
        return ZERO
    return Poly(_karatsuba(a.coeffs, b.coeffs))


def mul_many(ps: Iterable[Poly]) -> Poly:
    """Product of all inputs, pairing operands of similar degree."""
    items = list(ps)
    if not items:
        return ONE
    while len(items) > 1:
        items.sort(key=len)
        nxt = [mul(items[i], items[i + 1]) for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


def power(p: Poly, m: int) -> Poly:
    if m < 0:
        raise ValueError("negative exponent")
    result = ONE
    base = p
    while m:
        if m & 1:
            result = mul(result, base)
        m >>= 1
        if m:
            base = mul(base, base)
    return result


def eval_int(p: Poly, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def negate_variable(p: Poly) -> Poly:
    """Return p(-t)."""
    return Poly._raw(tuple(-c if k & 1 else c for k, c in enumerate(p.coeffs)))


def render_text(p: Poly) -> str:
    """One ``degree<TAB>coefficient`` line per nonzero term, ascending."""
    return "".join(f"{k}\t{c}\n" for k, c in enumerate(p.coeffs) if c)


def render_json(p: Poly) -> str:
    return json.dumps([str(c) for c in p.coeffs])


def parse_json(text: str) -> Poly:
    return Poly(int(s) for s in json.loads(text))


def render_pretty(p: Poly, var: str = "t") -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
