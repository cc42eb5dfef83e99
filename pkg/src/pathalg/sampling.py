"""Seeded random instances: connected graphs, property-F families,
path-algebra and free-product elements."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Poly
from .freeprod import FREE, LAURENT, POLY, X, XBAR, Factor, FreeProduct, FreeProductElement, Letter
from .graph import Graph, build_graph
from .paths import PathAlgebraElement, PolyFamily, random_walk


def random_rational(rng: random.Random, lo: int = -3, hi: int = 3, nonzero: bool = False) -> Fraction:
    while True:
        c = Fraction(rng.randint(lo, hi), rng.choice((1, 1, 2, 3)))
        if c or not nonzero:
            return c


def random_property_f_poly(rng: random.Random, max_degree: int = 3) -> Poly:
    d = rng.randint(1, max_degree)
    cs = [random_rational(rng, nonzero=True)]
    cs += [random_rational(rng) for _ in range(d - 1)]
    cs.append(random_rational(rng, nonzero=True))
    return Poly(cs)


def random_connected_graph(
    rng: random.Random,
    max_vertices: int = 6,
    max_edges: int = 9,
    loops: bool = True,
) -> tuple[Graph, list[str]]:
    """Connected graph plus the names of a random spanning tree's edges."""
    n = rng.randint(1, max_vertices)
    edges = []
    tree = []
    order = list(range(1, n + 1))
    rng.shuffle(order)
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        if rng.random() < 0.5:
            a, b = b, a
        tree.append(len(edges))
        edges.append((a, b))
    extra = rng.randint(0, max_edges - len(edges))
    for _ in range(extra):
        a = rng.randint(1, n)
        b = a if loops and rng.random() < 0.15 else rng.randint(1, n)
        edges.append((a, b))
    perm = list(range(len(edges)))
    rng.shuffle(perm)
    named = [(f"e{k + 1}", *edges[p]) for k, p in enumerate(perm)]
    tree_names = [named[k][0] for k, p in enumerate(perm) if p in tree]
    return build_graph(n, named), tree_names


def random_instance(rng: random.Random, max_vertices: int = 6, max_edges: int = 9, max_degree: int = 3,
                    y1_prob: float = 0.5) -> tuple[Graph, PolyFamily]:
    """Random connected graph with a family whose Y_1 contains a spanning tree."""
    g, tree = random_connected_graph(rng, max_vertices, max_edges)
    polys = {}
    for name in g.edge_names:
        if name in tree or rng.random() < y1_prob:
            polys[name] = random_property_f_poly(rng, max_degree)
    return g, PolyFamily(polys)


def random_path_element(g: Graph, rng: random.Random, terms: int = 3, max_length: int = 4) -> PathAlgebraElement:
    out = PathAlgebraElement.zero(g)
    for _ in range(terms):
        p = random_walk(g, rng, rng.randint(1, g.vertex_count), rng.randint(0, max_length))
        if p is not None:
            out = out + PathAlgebraElement.path(g, p, random_rational(rng, nonzero=True))
    return out


def mixed_free_product(poly: Poly | None = None) -> FreeProduct:
    """One factor of each kind: a quotient ring, a Laurent ring and a free ring."""
    poly = poly if poly is not None else Poly((1, -3, 1))
    return FreeProduct([Factor("t[a]", POLY, poly), Factor("z[b]", LAURENT), Factor("w[c]", FREE)])


def random_letter(ring: FreeProduct, rng: random.Random, factor: str, max_exp: int = 3) -> Letter:
    f = ring.factors[factor]
    if f.kind == POLY:
        return Letter(factor, rng.randint(1, f.degree - 1))
    if f.kind == LAURENT:
        return Letter(factor, rng.choice([k for k in range(-max_exp, max_exp + 1) if k]))
    return Letter(factor, tuple(rng.choice((X, XBAR)) for _ in range(rng.randint(1, 2))))


def random_word(ring: FreeProduct, rng: random.Random, max_letters: int = 4) -> tuple:
    ids = list(ring.factors)
    w = []
    for _ in range(rng.randint(0, max_letters)):
        options = [f for f in ids if not w or w[-1].factor != f]
        w.append(random_letter(ring, rng, rng.choice(options)))
    return tuple(w)


def random_fp_element(ring: FreeProduct, rng: random.Random, terms: int = 3, max_letters: int = 4) -> FreeProductElement:
    return ring.element({random_word(ring, rng, max_letters): random_rational(rng, nonzero=True)
                         for _ in range(rng.randint(1, terms))})
