"""The path algebra Q[Gamma]: finitely supported rational combinations of
paths, multiplied by concatenation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .algebra import Poly, as_rational, extract_h_kappa, is_property_F
from .errors import AmbientMismatch, EdgeNotInY1, GraphError, PropertyFViolation
from .graph import DirectedEdge, Graph, Path, SpanningTree, geodesic, Orientation


def _path_key(p: Path):
    return (p.length, p.start, p.end, tuple((d.name, not d.forward) for d in p.edges))


class PathAlgebraElement:
    __slots__ = ("graph", "terms")

    def __init__(self, graph: Graph, terms: Mapping[Path, Fraction] | None = None):
        self.graph = graph
        self.terms: dict[Path, Fraction] = {}
        if terms:
            for p, c in terms.items():
                c = as_rational(c)
                if c:
                    self.terms[p] = c

    @classmethod
    def _raw(cls, graph: Graph, terms: dict[Path, Fraction]) -> PathAlgebraElement:
        out = cls.__new__(cls)
        out.graph = graph
        out.terms = terms
        return out

    @classmethod
    def zero(cls, graph: Graph) -> PathAlgebraElement:
        return cls._raw(graph, {})

    @classmethod
    def vertex(cls, graph: Graph, i: int) -> PathAlgebraElement:
        if not 1 <= i <= graph.vertex_count:
            raise GraphError(f"vertex {i} out of range")
        return cls._raw(graph, {graph.vertex_path(i): Fraction(1)})

    @classmethod
    def edge(cls, graph: Graph, d: DirectedEdge) -> PathAlgebraElement:
        if not graph.has_edge(d.name):
            raise GraphError(f"unknown edge {d.name!r}")
        return cls._raw(graph, {graph.edge_path(d): Fraction(1)})

    @classmethod
    def path(cls, graph: Graph, p: Path, coeff=1) -> PathAlgebraElement:
        return cls(graph, {p: coeff})

    @classmethod
    def scalar(cls, graph: Graph, c) -> PathAlgebraElement:
        return unit(graph) * c

    def _check(self, other: PathAlgebraElement) -> None:
        if other.graph is not self.graph and other.graph != self.graph:
            raise AmbientMismatch("elements live over different graphs")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, PathAlgebraElement):
            return self.graph == other.graph and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: PathAlgebraElement) -> PathAlgebraElement:
        if not isinstance(other, PathAlgebraElement):
            if other == 0:
                return self
            return self + PathAlgebraElement.scalar(self.graph, other)
        self._check(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            v = out.get(p, 0) + c
            if v:
                out[p] = v
            else:
                out.pop(p, None)
        return PathAlgebraElement._raw(self.graph, out)

    __radd__ = __add__

    def __neg__(self) -> PathAlgebraElement:
        return PathAlgebraElement._raw(self.graph, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other) -> PathAlgebraElement:
        return self + (-other)

    def __rsub__(self, other) -> PathAlgebraElement:
        return (-self) + other

    def __mul__(self, other) -> PathAlgebraElement:
        if not isinstance(other, PathAlgebraElement):
            c = as_rational(other)
            if not c:
                return PathAlgebraElement.zero(self.graph)
            return PathAlgebraElement._raw(self.graph, {p: v * c for p, v in self.terms.items()})
        return multiply(self, other)

    def __rmul__(self, other) -> PathAlgebraElement:
        return self * other

    def __pow__(self, k: int) -> PathAlgebraElement:
        out = unit(self.graph)
        for _ in range(k):
            out = out * self
        return out

    def sorted_terms(self) -> list[tuple[Path, Fraction]]:
        return sorted(self.terms.items(), key=lambda pc: _path_key(pc[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for p, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = str(p) if a == 1 else f"{a}*{p}"
            parts.append(f"{sign} {body}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"PathAlgebraElement({self})"


def multiply(a: PathAlgebraElement, b: PathAlgebraElement) -> PathAlgebraElement:
    a._check(b)
    out: dict[Path, Fraction] = {}
    by_start: dict[int, list[tuple[Path, Fraction]]] = {}
    for q, c in b.terms.items():
        by_start.setdefault(q.start, []).append((q, c))
    for p, c in a.terms.items():
        for q, d in by_start.get(p.end, ()):
            r = Path(p.start, q.end, p.edges + q.edges)
            v = out.get(r, 0) + c * d
            if v:
                out[r] = v
            else:
                del out[r]
    return PathAlgebraElement._raw(a.graph, out)


def unit(g: Graph) -> PathAlgebraElement:
    return PathAlgebraElement._raw(g, {g.vertex_path(i): Fraction(1) for i in g.vertices})


def loop_element(g: Graph, y: DirectedEdge) -> PathAlgebraElement:
    """y * reverse(y), a loop at o(y)."""
    return PathAlgebraElement.path(g, g.make_path([y, y.reverse()]))


def eval_at_loop(g: Graph, f: Poly, y: DirectedEdge) -> PathAlgebraElement:
    """f(y ybar) inside [o(y)] Q[Gamma] [o(y)], with t^0 -> [o(y)]."""
    o = g.origin(y)
    yb = y.reverse()
    terms: dict[Path, Fraction] = {}
    for k, c in enumerate(f.coeffs):
        if c:
            terms[Path(o, o, (y, yb) * k)] = c
    return PathAlgebraElement._raw(g, terms)


class PolyFamily:
    """Property-F polynomials keyed by geometric edge name (so f_y = f_ybar)."""

    def __init__(self, polys: Mapping[str, Poly] | None = None):
        self.polys: dict[str, Poly] = {}
        for name, f in (polys or {}).items():
            if not is_property_F(f):
                raise PropertyFViolation(f"poly for edge {name!r} ({f}) lacks property F")
            self.polys[name] = f

    @property
    def y1(self) -> frozenset[str]:
        return frozenset(self.polys)

    def __contains__(self, name: str) -> bool:
        return name in self.polys

    def __getitem__(self, name: str) -> Poly:
        try:
            return self.polys[name]
        except KeyError:
            raise EdgeNotInY1(name) from None

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyFamily) and self.polys == other.polys

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v}" for k, v in self.polys.items())
        return f"PolyFamily({{{inner}}})"

    def check_graph(self, g: Graph) -> None:
        for name in self.polys:
            if not g.has_edge(name):
                raise GraphError(f"polynomial given for unknown edge {name!r}")


def vee(g: Graph, y: DirectedEdge, fam: PolyFamily) -> PathAlgebraElement:
    """The partial inverse (1/kappa) * ybar * h(y ybar) of y in Y_1."""
    hk = extract_h_kappa(fam[y.name])
    yb = PathAlgebraElement.edge(g, y.reverse())
    return yb * eval_at_loop(g, hk.h, y) * (1 / hk.kappa)


@dataclass(frozen=True)
class TreeData:
    """What the geodesic elements need: a graph, its tree, the orientation and F."""

    graph: Graph
    tree: SpanningTree
    orientation: Orientation
    fam: PolyFamily


def alpha(ctx: TreeData, d: DirectedEdge) -> PathAlgebraElement:
    if ctx.orientation.is_positive(d):
        return PathAlgebraElement.edge(ctx.graph, d)
    return vee(ctx.graph, d.reverse(), ctx.fam)


def geodesic_element(ctx: TreeData, i: int, j: int) -> PathAlgebraElement:
    g = ctx.graph
    if i == j:
        return PathAlgebraElement.vertex(g, i)
    out = None
    for d in geodesic(ctx.tree, i, j):
        a = alpha(ctx, d)
        out = a if out is None else out * a
    return out


def random_walk(g: Graph, rng, start: int, length: int) -> Path | None:
    """A uniformly stepped walk; None if it gets stuck at an isolated vertex."""
    if length == 0:
        return g.vertex_path(start)
    steps = []
    v = start
    dirs = g.directed_edges()
    for _ in range(length):
        options = [d for d in dirs if g.origin(d) == v]
        if not options:
            return None
        d = rng.choice(options)
        steps.append(d)
        v = g.terminus(d)
    return Path(start, v, tuple(steps))


def element_from_paths(g: Graph, items: Iterable[tuple[Path, object]]) -> PathAlgebraElement:
    out = PathAlgebraElement.zero(g)
    for p, c in items:
        out = out + PathAlgebraElement.path(g, p, c)
    return out
