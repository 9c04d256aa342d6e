"""Seeded verification suites: every identity checked against the oracles.

Each suite returns a ``SuiteResult``; ``run_all`` drives the ``verify``
subcommand and the acceptance tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .exactpoly import Poly
from .graphs import Graph, complement, join
from .oracles import (
    chromatic_poly_oracle,
    clique_cover_poly_oracle,
    count_directed_ham_cycles,
    count_directed_ham_paths,
    count_perfect_matchings,
    matching_poly_oracle,
    path_cover_poly_oracle,
    signed_matching_poly,
    signed_path_cover_poly,
)
from .transforms import MomentFunctional, TransformKind, apply_functional, apply_transform
from . import counts

POISSON_RATES = (0.5, 1.0, 2.0)
POISSON_TOLERANCE = 1e-9


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    worst: float = 0.0

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def check(self, ok: bool, what: str) -> None:
        self.checked += 1
        if not ok and len(self.failures) < 20:
            self.failures.append(what)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        detail = f"checked={self.checked}"
        if self.worst:
            detail += f" worst={self.worst:.2e}"
        if self.failures:
            detail += f" failures={len(self.failures)} first={self.failures[0]}"
        return f"SUITE {self.name} {status} {detail}"


# ---------------------------------------------------------------------------
# graph sources
# ---------------------------------------------------------------------------

def all_labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if bits >> i & 1])


def random_graph(n: int, rng: random.Random) -> Graph:
    p = rng.random()
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def sample_graphs(max_n: int, samples: int, seed: int, exhaustive_upto: int = 5):
    """Every labeled graph on 1..exhaustive_upto vertices, then ``samples``
    random graphs for each larger n up to max_n."""
    for n in range(1, min(exhaustive_upto, max_n) + 1):
        yield from all_labeled_graphs(n)
    rng = random.Random(seed)
    for n in range(exhaustive_upto + 1, max_n + 1):
        for _ in range(samples):
            yield random_graph(n, rng)


def random_pairs(count: int, max_total: int, seed: int):
    rng = random.Random(seed)
    for _ in range(count):
        total = rng.randint(2, max_total)
        a = rng.randint(1, total - 1)
        yield random_graph(a, rng), random_graph(total - a, rng)


@lru_cache(maxsize=4096)
def polys(g: Graph) -> dict:
    """All four oracle polynomials of a graph."""
    return {
        "path": path_cover_poly_oracle(g),
        "matching": matching_poly_oracle(g),
        "clique": clique_cover_poly_oracle(g),
        "chromatic": chromatic_poly_oracle(g),
    }


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def duality_suite(max_n: int = 7, samples: int = 200, seed: int = 0) -> SuiteResult:
    K = TransformKind
    res = SuiteResult("duality")
    for g in sample_graphs(max_n, samples, seed):
        gb = complement(g)
        pg, pb = polys(g), polys(gb)
        n = g.n
        res.check(pg["path"] == apply_transform(K.PI_FWD, signed_path_cover_poly(pb["path"], n)),
                  f"path-cover {g}")
        res.check(pg["matching"] == apply_transform(K.MU_FWD, signed_matching_poly(pb["matching"], n)),
                  f"matching {g}")
        res.check(pg["chromatic"] == apply_transform(K.CHI_FWD, pb["clique"]), f"chromatic {g}")
        res.check(pg["clique"] == apply_transform(K.XI_FWD, pb["chromatic"]), f"clique-cover {g}")
    return res


def join_formula(p: Poly, q: Poly, forward: TransformKind) -> Poly:
    inv = forward.inverse
    return apply_transform(forward, apply_transform(inv, p) * apply_transform(inv, q))


def join_suite(pairs: int = 100, max_total: int = 12, seed: int = 1) -> SuiteResult:
    K = TransformKind
    ops = {"path": K.PI_FWD, "matching": K.MU_FWD, "clique": K.XI_FWD, "chromatic": K.CHI_FWD}
    res = SuiteResult("join")
    for g, h in random_pairs(pairs, max_total, seed):
        pg, ph, pj = polys(g), polys(h), polys(join(g, h))
        for name, op in ops.items():
            res.check(join_formula(pg[name], ph[name], op) == pj[name], f"{name} {g} | {h}")
    return res


def _inner_values(g: Graph, h: Graph) -> dict:
    gb, hb = complement(g), complement(h)
    pi_plus_gb = signed_path_cover_poly(polys(gb)["path"], g.n)
    pi_plus_hb = signed_path_cover_poly(polys(hb)["path"], h.n)
    mu_plus_gb = signed_matching_poly(polys(gb)["matching"], g.n)
    mu_plus_hb = signed_matching_poly(polys(hb)["matching"], h.n)
    return {
        "pi_plus_gb": pi_plus_gb,
        "pi_plus_hb": pi_plus_hb,
        "cycles_inner": counts.ham_cycles_via_inner(pi_plus_gb, pi_plus_hb),
        "matchings_inner": counts.perfect_matchings_join(mu_plus_gb, mu_plus_hb),
    }


def inner_product_suite(pairs: int = 100, max_total: int = 12, seed: int = 2) -> SuiteResult:
    res = SuiteResult("inner-product")
    for g, h in random_pairs(pairs, max_total, seed):
        gh = join(g, h)
        v = _inner_values(g, h)
        c_oracle = count_directed_ham_cycles(gh)
        res.check(v["cycles_inner"] == c_oracle, f"laguerre inner {g} | {h}")
        big, small = (g, h) if g.n >= 2 else (h, g)
        hc = counts.ham_cycles_join(polys(big)["path"], polys(small)["path"])
        res.check(hc == c_oracle, f"HC sum {g} | {h}")
        for x, pi_plus in ((g, v["pi_plus_gb"]), (h, v["pi_plus_hb"])):
            hp = count_directed_ham_paths(x)
            res.check(counts.ham_paths_via_inner(pi_plus) == hp, f"ham integral {x}")
            res.check(counts.ham_paths_via_laguerre(pi_plus) == hp, f"ham integral (L) {x}")
        res.check(v["matchings_inner"] == count_perfect_matchings(gh), f"hermite inner {g} | {h}")
    return res


def cauchy_schwarz_suite(pairs: int = 100, max_total: int = 12, seed: int = 2) -> SuiteResult:
    """c(G+H)^2 <= c(G+G) c(H+H) and the perfect-matching analogue, with the
    self-joins taken from the inner products (checked against the oracle
    whenever the self-join is small enough)."""
    res = SuiteResult("cauchy-schwarz")
    for g, h in random_pairs(pairs, max_total, seed):
        gh = _inner_values(g, h)
        gg = _inner_values(g, g)
        hh = _inner_values(h, h)
        res.check(gh["cycles_inner"] ** 2 <= gg["cycles_inner"] * hh["cycles_inner"],
                  f"cycles {g} | {h}")
        res.check(gh["matchings_inner"] ** 2 <= gg["matchings_inner"] * hh["matchings_inner"],
                  f"matchings {g} | {h}")
        for x, vals in ((g, gg), (h, hh)):
            if 2 * x.n <= 12:
                xx = join(x, x)
                res.check(vals["cycles_inner"] == count_directed_ham_cycles(xx), f"c self-join {x}")
                res.check(vals["matchings_inner"] == count_perfect_matchings(xx), f"m self-join {x}")
    return res


def poisson_suite(graphs: int = 50, max_n: int = 7, seed: int = 3,
                  rates=POISSON_RATES, tol: float = POISSON_TOLERANCE) -> SuiteResult:
    res = SuiteResult("poisson")
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(graphs):
        g = random_graph(rng.randint(1, max_n), rng)
        xi = polys(g)["clique"]
        chi_bar = polys(complement(g))["chromatic"]
        for lam in rates:
            r = counts.poisson_check(xi, chi_bar, lam)
            worst = max(worst, r)
            res.check(r < tol, f"lam={lam} residual={r:.3e} {g}")
    res.worst = worst
    return res


def cycle_characteristic_suite(max_n: int = 7, samples: int = 200, seed: int = 4) -> SuiteResult:
    """L[pi+ of complement] = c(G) + (-1)^(n-1) c(complement), for n >= 2."""
    res = SuiteResult("cycle-characteristic")
    for g in sample_graphs(max_n, samples, seed):
        if g.n < 2:
            continue
        gb = complement(g)
        lhs = apply_functional(MomentFunctional.LAGUERRE,
                               signed_path_cover_poly(polys(gb)["path"], g.n))
        rhs = count_directed_ham_cycles(g) + (-1) ** (g.n - 1) * count_directed_ham_cycles(gb)
        res.check(lhs == rhs, f"{g}")
    return res


def run_all(max_n: int = 7, samples: int = 200, seed: int = 0) -> list:
    pairs = max(100, samples // 2)
    return [
        duality_suite(max_n, samples, seed),
        join_suite(pairs, 12, seed + 1),
        inner_product_suite(pairs, 12, seed + 2),
        cauchy_schwarz_suite(pairs, 12, seed + 2),
        poisson_suite(max(50, samples // 4), max_n, seed + 3),
    ]
