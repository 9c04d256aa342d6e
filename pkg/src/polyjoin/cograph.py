"""Cotrees, the cograph expression language, recognition, and the cotree
polynomial fold.

Expression grammar (whitespace is ignored)::

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := 'K1' | 'K(' int ')' | 'E(' int ')' | 'K(' int (',' int)+ ')'
            | '(' expr ')'

``+`` is disjoint union and ``*`` is join; ``*`` binds tighter.  ``K(n)`` is
the complete graph, ``E(n)`` the edgeless graph, and ``K(a1,...,am)`` the
complete multipartite graph.
"""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass

from .exactpoly import T, Poly, mul_many
from .graphs import Graph, complement, components, induced, join_all, union_all
from .transforms import TransformKind, apply_transform


class Op(enum.Enum):
    LEAF = "leaf"
    UNION = "union"
    JOIN = "join"


@dataclass(frozen=True)
class Cotree:
    op: Op
    children: tuple = ()

    @property
    def is_leaf(self) -> bool:
        return self.op is Op.LEAF

    @property
    def leaves(self) -> int:
        if self.op is Op.LEAF:
            return 1
        return sum(c.leaves for c in self.children)

    def canonical(self) -> "Cotree":
        """Same tree with children sorted, for order-insensitive comparison."""
        if self.op is Op.LEAF:
            return self
        kids = sorted((c.canonical() for c in self.children), key=render)
        return Cotree(self.op, tuple(kids))

    def __str__(self) -> str:
        return render(self)


LEAF = Cotree(Op.LEAF)


def _combine(op: Op, parts) -> Cotree:
    kids = []
    for p in parts:
        if p.op is op:
            kids.extend(p.children)
        else:
            kids.append(p)
    if len(kids) == 1:
        return kids[0]
    if not kids:
        raise ValueError("a union or join needs at least one operand")
    return Cotree(op, tuple(kids))


def union(*parts: Cotree) -> Cotree:
    return _combine(Op.UNION, parts)


def join(*parts: Cotree) -> Cotree:
    return _combine(Op.JOIN, parts)


def complete(n: int) -> Cotree:
    return join(*[LEAF] * n)


def edgeless(n: int) -> Cotree:
    return union(*[LEAF] * n)


def multipartite(parts) -> Cotree:
    return join(*[edgeless(a) for a in parts])


def render(ct: Cotree) -> str:
    """Expression text that parses back to the same cotree."""
    if ct.op is Op.LEAF:
        return "K1"
    kids = [render(c) for c in ct.children]
    if ct.op is Op.UNION:
        return "(" + " + ".join(kids) + ")"
    return " * ".join(kids)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

class CographSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(K1(?![0-9]))|(K\()|(E\()|(\d+)|([+*(),]))")


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise CographSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("K1", None, start))
        elif m.group(2):
            toks.append(("K(", None, start))
        elif m.group(3):
            toks.append(("E(", None, start))
        elif m.group(4):
            toks.append(("INT", int(m.group(4)), start))
        else:
            toks.append((m.group(5), None, start))
        pos = m.end()
    toks.append(("END", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str):
        tok = self.toks[self.i]
        if tok[0] != kind:
            want = "integer" if kind == "INT" else repr(kind)
            got = "end of input" if tok[0] == "END" else repr(tok[0] if tok[1] is None else tok[1])
            raise CographSyntaxError(f"expected {want}, found {got}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> Cotree:
        parts = [self.term()]
        while self.peek()[0] == "+":
            self.take("+")
            parts.append(self.term())
        return union(*parts)

    def term(self) -> Cotree:
        parts = [self.factor()]
        while self.peek()[0] == "*":
            self.take("*")
            parts.append(self.factor())
        return join(*parts)

    def size(self) -> int:
        tok = self.take("INT")
        if tok[1] < 1:
            raise CographSyntaxError("part sizes must be positive", tok[2])
        return tok[1]

    def factor(self) -> Cotree:
        kind, _, pos = self.peek()
        if kind == "K1":
            self.take("K1")
            return LEAF
        if kind == "E(":
            self.take("E(")
            n = self.size()
            self.take(")")
            return edgeless(n)
        if kind == "K(":
            self.take("K(")
            sizes = [self.size()]
            while self.peek()[0] == ",":
                self.take(",")
                sizes.append(self.size())
            self.take(")")
            if len(sizes) == 1:
                return complete(sizes[0])
            return multipartite(sizes)
        if kind == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        shown = "end of input" if kind == "END" else repr(kind)
        raise CographSyntaxError(f"expected a graph term, found {shown}", pos)


def parse_cograph_expr(text: str) -> Cotree:
    p = _Parser(text)
    tree = p.expr()
    p.take("END")
    return tree


# ---------------------------------------------------------------------------
# recognition and realization
# ---------------------------------------------------------------------------

class NotCograph(Exception):
    """Raised when a graph contains an induced P4."""


def recognize_cograph(g: Graph) -> Cotree | None:
    """Cotree of ``g``, or None if ``g`` is not a cograph."""
    if g.n < 1:
        raise ValueError("need at least one vertex")
    try:
        return _recognize(g)
    except NotCograph:
        return None


def _recognize(g: Graph) -> Cotree:
    if g.n == 1:
        return LEAF
    comps = components(g)
    if len(comps) > 1:
        return Cotree(Op.UNION, tuple(_recognize(induced(g, c)) for c in comps))
    gc = complement(g)
    co = components(gc)
    if len(co) > 1:
        return Cotree(Op.JOIN, tuple(_recognize(induced(g, c)) for c in co))
    raise NotCograph()


def cotree_to_graph(ct: Cotree) -> Graph:
    if ct.op is Op.LEAF:
        return Graph(1, (0,))
    parts = [cotree_to_graph(c) for c in ct.children]
    if ct.op is Op.UNION:
        return union_all(parts)
    return join_all(parts)


def random_cotree(leaves: int, rng: random.Random, max_arity: int = 4) -> Cotree:
    """Random normalized cotree: split the leaves into 2..max_arity groups
    recursively, colouring each internal node at random."""
    def build(n: int, parent: Op | None) -> Cotree:
        if n == 1:
            return LEAF
        k = rng.randint(2, min(max_arity, n))
        cuts = sorted(rng.sample(range(1, n), k - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
        if parent is None:
            op = rng.choice([Op.UNION, Op.JOIN])
        else:
            op = Op.JOIN if parent is Op.UNION else Op.UNION
        return Cotree(op, tuple(build(s, op) for s in sizes))

    return build(leaves, None)


# ---------------------------------------------------------------------------
# polynomial fold
# ---------------------------------------------------------------------------

class PolyKind(enum.Enum):
    PATH_COVER = "path-cover"
    MATCHING = "matching"
    CLIQUE_COVER = "clique-cover"
    CHROMATIC = "chromatic"

    @property
    def operator(self) -> TransformKind:
        """Operator applied after multiplying the children at a join node."""
        return _JOIN_OPERATOR[self]


_JOIN_OPERATOR = {
    PolyKind.PATH_COVER: TransformKind.PI_FWD,
    PolyKind.MATCHING: TransformKind.MU_FWD,
    PolyKind.CLIQUE_COVER: TransformKind.XI_FWD,
    PolyKind.CHROMATIC: TransformKind.CHI_FWD,
}


def compute_graph_polynomial(ct: Cotree, kind: PolyKind) -> Poly:
    """Graph polynomial of the cograph described by ``ct``.

    A leaf is t; a union multiplies its children; a join maps each child
    through the inverse operator, multiplies, and maps the product back.
    """
    fwd = kind.operator
    inv = fwd.inverse

    def fold(node: Cotree) -> Poly:
        if node.op is Op.LEAF:
            return T
        results = [fold(c) for c in node.children]
        if node.op is Op.UNION:
            return mul_many(results)
        return apply_transform(fwd, mul_many(apply_transform(inv, r) for r in results))

    return fold(ct)
