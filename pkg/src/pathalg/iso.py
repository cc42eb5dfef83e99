"""The isomorphism R_F ~ M_N(Q): context construction, phi into matrices
over the free product Q, psi/Psi back to path-algebra representatives,
the equality decision in R_F and a self-verification report."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .algebra import Poly
from .errors import AmbientMismatch, NotConnected
from .freeprod import (
    FREE,
    LAURENT,
    POLY,
    X,
    XBAR,
    Factor,
    FreeProduct,
    FreeProductElement,
    Letter,
    format_letter,
)
from .graph import (
    DirectedEdge,
    Graph,
    Path,
    fundamental_cycle_count,
    is_connected,
    orient,
    spanning_tree,
)
from .matrix import MatrixElement, unit_matrix
from .paths import (
    PathAlgebraElement,
    PolyFamily,
    TreeData,
    eval_at_loop,
    geodesic_element,
    random_walk,
    vee,
)

TREE_T = "tree-t"
CYCLE_Z = "cycle-z"
CYCLE_U = "cycle-u"
CYCLE_FREE = "cycle-free"

_SYMBOL = {TREE_T: "t", CYCLE_Z: "z", CYCLE_U: "u", CYCLE_FREE: "w"}


@dataclass(frozen=True)
class FactorRecord:
    edge: str
    role: str
    factor: Factor


@dataclass(frozen=True)
class TrivialFactor:
    edge: str
    poly: Poly
    root: Fraction
    role: str  # "tree" or "cycle"


@dataclass(frozen=True)
class IsoContext(TreeData):
    ring: FreeProduct
    factors: tuple[FactorRecord, ...]
    trivial_factors: tuple[TrivialFactor, ...]
    # phi(d) = edge_images[d] * e_{o(d), t(d)}
    edge_images: dict[DirectedEdge, FreeProductElement]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.graph.vertex_count

    def record(self, factor_id: str) -> FactorRecord:
        for r in self.factors:
            if r.factor.id == factor_id:
                return r
        raise AmbientMismatch(f"unknown factor {factor_id!r}")

    def with_edge_images(self, images: dict[DirectedEdge, FreeProductElement]) -> IsoContext:
        """Copy with replaced generator images (used to build negative controls)."""
        merged = dict(self.edge_images)
        merged.update(images)
        return replace(self, edge_images=merged, _cache={})

    def P(self, i: int, j: int) -> PathAlgebraElement:
        key = ("P", i, j)
        if key not in self._cache:
            self._cache[key] = geodesic_element(self, i, j)
        return self._cache[key]


def build_context(g: Graph, fam: PolyFamily, root: int = 1) -> IsoContext:
    fam.check_graph(g)
    if not is_connected(g):
        raise NotConnected("the graph is not connected")
    tree = spanning_tree(g, fam.y1, root)
    ori = orient(g, tree)

    records: list[FactorRecord] = []
    trivial: list[TrivialFactor] = []

    def add(name: str, role: str, kind: str, poly: Poly | None = None) -> Factor:
        f = Factor(f"{_SYMBOL[role]}[{name}]", kind, poly)
        records.append(FactorRecord(name, role, f))
        return f

    for name, _, _ in g.geometric_edges:
        f = fam.polys.get(name)
        if name in tree.tree_edges:
            if f.degree >= 2:
                add(name, TREE_T, POLY, f)
            else:
                trivial.append(TrivialFactor(name, f, -f[0] / f[1], "tree"))
        elif f is not None:
            add(name, CYCLE_Z, LAURENT)
            if f.degree >= 2:
                add(name, CYCLE_U, POLY, f)
            else:
                trivial.append(TrivialFactor(name, f, -f[0] / f[1], "cycle"))
        else:
            add(name, CYCLE_FREE, FREE)

    ring = FreeProduct(r.factor for r in records)
    by_role = {(r.edge, r.role): r.factor.id for r in records}
    roots = {t.edge: t.root for t in trivial}
    images: dict[DirectedEdge, FreeProductElement] = {}
    for name, _, _ in g.geometric_edges:
        y = ori.positive[name]
        yb = y.reverse()
        if name in tree.tree_edges:
            images[y] = ring.one()
            if (name, TREE_T) in by_role:
                images[yb] = ring.letter(by_role[name, TREE_T], 1)
            else:
                images[yb] = ring.scalar(roots[name])
        elif name in fam:
            z = by_role[name, CYCLE_Z]
            images[y] = ring.letter(z, 1)
            if (name, CYCLE_U) in by_role:
                images[yb] = ring.word([(z, -1), (by_role[name, CYCLE_U], 1)])
            else:
                images[yb] = ring.letter(z, -1, roots[name])
        else:
            w = by_role[name, CYCLE_FREE]
            images[y] = ring.letter(w, (X,))
            images[yb] = ring.letter(w, (XBAR,))
    return IsoContext(g, tree, ori, fam, ring, tuple(records), tuple(trivial), images)


# -- phi ---------------------------------------------------------------------

def _phi_path(ctx: IsoContext, p: Path) -> dict:
    key = ("phi", p.edges)
    hit = ctx._cache.get(key)
    if hit is not None:
        return hit
    if not p.edges:
        acc = {(): Fraction(1)}
    elif len(p.edges) == 1:
        acc = ctx.edge_images[p.edges[0]].terms
    else:
        # reuse the prefix
        head = _phi_path(ctx, Path(p.start, ctx.graph.origin(p.edges[-1]), p.edges[:-1]))
        last = ctx.edge_images[p.edges[-1]].terms
        acc = {}
        for u, c in head.items():
            for v, d in last.items():
                ctx.ring.join(u, v, c * d, acc)
    if len(ctx._cache) < 200_000:
        ctx._cache[key] = acc
    return acc


def phi(ctx: IsoContext, a: PathAlgebraElement) -> MatrixElement:
    if a.graph is not ctx.graph and a.graph != ctx.graph:
        raise AmbientMismatch("element is not over the context's graph")
    n = ctx.n
    acc: dict[tuple[int, int], dict] = {}
    for p, c in a.terms.items():
        cell = acc.setdefault((p.start, p.end), {})
        for w, v in _phi_path(ctx, p).items():
            s = cell.get(w, 0) + c * v
            if s:
                cell[w] = s
            else:
                cell.pop(w, None)
    ring = ctx.ring
    rows = [
        [FreeProductElement._raw(ring, acc.get((i, j), {})) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return MatrixElement(ring, rows)


def phi_generator(ctx: IsoContext, d: DirectedEdge) -> MatrixElement:
    g = ctx.graph
    return unit_matrix(ctx.ring, ctx.n, g.origin(d), g.terminus(d), ctx.edge_images[d])


# -- psi / Psi ---------------------------------------------------------------

def _edge_el(ctx: IsoContext, d: DirectedEdge) -> PathAlgebraElement:
    return PathAlgebraElement.edge(ctx.graph, d)


def psi_letter(ctx: IsoContext, i: int, letter: Letter) -> PathAlgebraElement:
    """Image of a single letter under psi_i, inside [s_i] Q[Gamma] [s_i]."""
    key = ("psi", i, letter)
    if key in ctx._cache:
        return ctx._cache[key]
    rec = ctx.record(letter.factor)
    rec.factor.check_payload(letter.payload)
    g = ctx.graph
    y = ctx.orientation.positive[rec.edge]
    o, t = g.origin(y), g.terminus(y)
    if rec.role in (TREE_T, CYCLE_U):
        k = letter.payload
        out = ctx.P(i, o) * PathAlgebraElement.path(g, Path(o, o, (y, y.reverse()) * k)) * ctx.P(o, i)
    elif rec.role == CYCLE_Z:
        k = letter.payload
        if k > 0:
            base = ctx.P(i, o) * _edge_el(ctx, y) * ctx.P(t, i)
        else:
            base = ctx.P(i, t) * vee(g, y, ctx.fam) * ctx.P(o, i)
        out = PathAlgebraElement.vertex(g, i)
        for _ in range(abs(k)):
            out = out * base
    else:
        xs = ctx.P(i, o) * _edge_el(ctx, y) * ctx.P(t, i)
        xbars = ctx.P(i, t) * _edge_el(ctx, y.reverse()) * ctx.P(o, i)
        out = PathAlgebraElement.vertex(g, i)
        for p in letter.payload:
            out = out * (xs if p == X else xbars)
    ctx._cache[key] = out
    return out


def psi(ctx: IsoContext, i: int, w) -> PathAlgebraElement:
    w = tuple(Letter(*l) for l in w)
    ctx.ring.check_word(w)
    out = PathAlgebraElement.vertex(ctx.graph, i)
    for l in w:
        out = out * psi_letter(ctx, i, l)
    return out


def Psi(ctx: IsoContext, M: MatrixElement) -> PathAlgebraElement:
    """Sum over entries q*e_ij of psi_i(q) * P(i, j), expanded literally in Q[Gamma]."""
    out = PathAlgebraElement.zero(ctx.graph)
    for i, j, q in M.nonzero_entries():
        Pij = ctx.P(i, j)
        for w, c in q.terms.items():
            out = out + psi(ctx, i, w) * Pij * c
    return out


def _phi_cached(ctx: IsoContext, key, make) -> MatrixElement:
    if key not in ctx._cache:
        ctx._cache[key] = phi(ctx, make())
    return ctx._cache[key]


def phi_P(ctx: IsoContext, i: int, j: int) -> MatrixElement:
    return _phi_cached(ctx, ("phiP", i, j), lambda: ctx.P(i, j))


def phi_psi_letter(ctx: IsoContext, i: int, letter: Letter) -> MatrixElement:
    return _phi_cached(ctx, ("phipsi", i, letter), lambda: psi_letter(ctx, i, letter))


def phi_psi(ctx: IsoContext, i: int, w) -> MatrixElement:
    """phi(psi_i(w)) evaluated letter by letter (phi and psi_i are multiplicative)."""
    out = unit_matrix(ctx.ring, ctx.n, i, i)
    for l in w:
        out = out * phi_psi_letter(ctx, i, Letter(*l))
    return out


def phi_Psi(ctx: IsoContext, M: MatrixElement) -> MatrixElement:
    """phi(Psi(M)) without expanding Psi(M) in the path algebra.

    Literal expansion grows exponentially with word length; here only the
    per-letter images psi_i(letter) and the geodesic elements are expanded.
    """
    out = MatrixElement.zero(ctx.ring, ctx.n)
    for i, j, q in M.nonzero_entries():
        Pij = phi_P(ctx, i, j)
        for w, c in q.terms.items():
            out = out + (phi_psi(ctx, i, w) * Pij) * c
    return out


def equal_in_R(ctx: IsoContext, a: PathAlgebraElement, b: PathAlgebraElement) -> bool:
    """Decide a == b modulo the relation ideal, via the injective Phi."""
    return phi(ctx, a) == phi(ctx, b)


# -- report ------------------------------------------------------------------

_KIND_TEXT = {POLY: "Q[t]/({})", LAURENT: "Q[z, z^-1]", FREE: "Q<x, xbar>"}


@dataclass(frozen=True)
class QReport:
    n: int
    cycle_count: int
    nontrivial: tuple[FactorRecord, ...]
    trivial: tuple[TrivialFactor, ...]
    tree_edges: tuple[str, ...]
    root: int

    def factor_multiset(self) -> Counter:
        return Counter((r.factor.kind, r.factor.poly.coeffs if r.factor.poly else None) for r in self.nontrivial)

    def kinds(self) -> Counter:
        return Counter(r.factor.kind for r in self.nontrivial)

    def describe_factor(self, r: FactorRecord) -> str:
        f = r.factor
        body = _KIND_TEXT[f.kind].format(f.poly) if f.kind == POLY else _KIND_TEXT[f.kind]
        return f"{f.id}  {body}  (edge {r.edge}, {r.role})"

    def lines(self) -> list[str]:
        out = [f"N = {self.n}", f"root = {self.root}", f"tree edges = {', '.join(self.tree_edges) or '-'}",
               f"fundamental cycles = {self.cycle_count}"]
        if self.nontrivial:
            out.append(f"nontrivial factors ({len(self.nontrivial)}):")
            out.extend("  " + self.describe_factor(r) for r in self.nontrivial)
        else:
            out.append("nontrivial factors: none (Q = Q)")
        if self.trivial:
            out.append(f"trivial factors ({len(self.trivial)}), each = Q:")
            out.extend(f"  Q[t]/({t.poly})  (edge {t.edge}, {t.role}; t = {t.root})" for t in self.trivial)
        else:
            out.append("trivial factors: none")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def describe_Q(ctx: IsoContext) -> QReport:
    return QReport(
        n=ctx.n,
        cycle_count=fundamental_cycle_count(ctx.graph),
        nontrivial=ctx.factors,
        trivial=ctx.trivial_factors,
        tree_edges=tuple(name for name in ctx.graph.edge_names if name in ctx.tree.tree_edges),
        root=ctx.tree.root,
    )


# -- verification ------------------------------------------------------------

@dataclass
class VerificationItem:
    number: int
    name: str
    passed: bool
    checks: int
    detail: str = ""

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.number} {self.name} ({self.checks} checks)"
        return f"FAIL {self.number} {self.name} {self.detail}"


@dataclass
class VerificationReport:
    items: list[VerificationItem]

    @property
    def ok(self) -> bool:
        return all(it.passed for it in self.items)

    def item(self, number: int) -> VerificationItem:
        return next(it for it in self.items if it.number == number)

    def lines(self) -> list[str]:
        return [it.line() for it in self.items] + [f"RESULT {'ok' if self.ok else 'fail'}"]

    def __str__(self) -> str:
        return "\n".join(self.lines())


class _Item:
    def __init__(self, number: int, name: str):
        self.number, self.name = number, name
        self.checks = 0
        self.failure = ""

    def check(self, cond: bool, what) -> None:
        self.checks += 1
        if not cond and not self.failure:
            self.failure = what() if callable(what) else str(what)

    def done(self) -> VerificationItem:
        return VerificationItem(self.number, self.name, not self.failure, self.checks, self.failure)


def _e(ctx: IsoContext, i: int, j: int, q: FreeProductElement | None = None) -> MatrixElement:
    return unit_matrix(ctx.ring, ctx.n, i, j, q)


def _sample_words(ctx: IsoContext, rng: random.Random, count: int) -> list[tuple]:
    letters = ctx.ring.generator_letters()
    words = [()] + [(l,) for l in letters]
    for _ in range(count if letters else 0):
        w: list[Letter] = []
        for _ in range(rng.randint(2, 3)):
            options = [l for l in letters if not w or l.factor != w[-1].factor]
            if not options:
                break
            w.append(rng.choice(options))
        words.append(tuple(w))
    return words


def verify_context(ctx: IsoContext, seed: int = 0, random_products: int = 20, max_length: int = 6) -> VerificationReport:
    g = ctx.graph
    n = ctx.n
    rng = random.Random(seed)
    zero = MatrixElement.zero(ctx.ring, n)
    items = []

    it = _Item(1, "relations-vanish")
    for name in g.edge_names:
        if name not in ctx.fam:
            continue
        for y in (DirectedEdge(name, True), DirectedEdge(name, False)):
            rel = eval_at_loop(g, ctx.fam[name], y)
            it.check(phi(ctx, rel) == zero, lambda: f"phi(f({y}{y.reverse()})) != O")
    items.append(it.done())

    it = _Item(2, "geodesic-units")
    for k in g.vertices:
        for l in g.vertices:
            it.check(phi_P(ctx, k, l) == _e(ctx, k, l), lambda: f"phi(P({k},{l})) != e_{k}{l}")
    items.append(it.done())

    it = _Item(3, "vee-images")
    for name in sorted(ctx.tree.tree_edges, key=g.edge_names.index):
        y = ctx.orientation.positive[name]
        it.check(phi(ctx, vee(g, y, ctx.fam)) == _e(ctx, g.terminus(y), g.origin(y)),
                 lambda: f"phi({y}^vee) != e_t'o'")
    for name in g.edge_names:
        if name not in ctx.fam:
            continue
        for y in (DirectedEdge(name, True), DirectedEdge(name, False)):
            v = vee(g, y, ctx.fam)
            ye = PathAlgebraElement.edge(g, y)
            o, t = g.origin(y), g.terminus(y)
            it.check(phi(ctx, ye * v) == _e(ctx, o, o), lambda: f"phi({y} {y}^vee) != e_oo")
            it.check(phi(ctx, v * ye) == _e(ctx, t, t), lambda: f"phi({y}^vee {y}) != e_tt")
    items.append(it.done())

    it = _Item(4, "orthogonality")
    for i in g.vertices:
        for j in g.vertices:
            for k in g.vertices:
                if j != k:
                    for l in g.vertices:
                        it.check((ctx.P(i, j) * ctx.P(k, l)).is_zero(),
                                 lambda: f"P({i},{j}) P({k},{l}) != 0")
                else:
                    for l in g.vertices:
                        it.check(phi(ctx, ctx.P(i, j) * ctx.P(j, l)) == phi_P(ctx, i, l),
                                 lambda: f"phi(P({i},{j}) P({j},{l})) != phi(P({i},{l}))")
    items.append(it.done())

    words = _sample_words(ctx, rng, 4)
    it = _Item(5, "conjugation")
    for w in words:
        for i in g.vertices:
            base = phi_psi(ctx, i, w)
            for j in g.vertices:
                it.check(phi_psi(ctx, j, w) == phi_P(ctx, j, i) * base * phi_P(ctx, i, j),
                         lambda: f"psi_{j}({_fmt_word(w)}) != P({j},{i}) psi_{i} P({i},{j})")
    items.append(it.done())

    it = _Item(6, "Phi-Psi-identity")
    one = ctx.ring.one()
    gens = [None] + ctx.ring.generator_letters()
    for i in g.vertices:
        for j in g.vertices:
            for l in gens:
                q = one if l is None else ctx.ring.word([l])
                M = _e(ctx, i, j, q)
                it.check(phi_Psi(ctx, M) == M,
                         lambda: f"phi(Psi({'1' if l is None else format_letter(l)} e_{i}{j})) differs")
    items.append(it.done())

    it = _Item(7, "Psi-Phi-identity")
    gens7: list[PathAlgebraElement] = [PathAlgebraElement.vertex(g, i) for i in g.vertices]
    gens7 += [PathAlgebraElement.edge(g, d) for d in g.directed_edges()]
    for _ in range(random_products):
        start = rng.randint(1, n)
        p = random_walk(g, rng, start, rng.randint(1, max_length))
        if p is not None:
            gens7.append(PathAlgebraElement.path(g, p))
    for x in gens7:
        m = phi(ctx, x)
        it.check(phi_Psi(ctx, m) == m, lambda: f"phi(Psi(phi({x}))) != phi({x})")
    items.append(it.done())

    return VerificationReport(items)


def _fmt_word(w) -> str:
    return "·".join(format_letter(Letter(*l)) for l in w) or "1"

