"""Serre graphs: geometric edges carry an involution realized by a direction
flag, paths are edge sequences, and spanning trees come with a root-based
orientation."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import GraphError, NoSpanningTree, NotConnected

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_VERTEX_RE = re.compile(r"v[0-9]+\Z")


class DirectedEdge(NamedTuple):
    name: str
    forward: bool = True

    def reverse(self) -> DirectedEdge:
        return DirectedEdge(self.name, not self.forward)

    def __str__(self) -> str:
        return self.name if self.forward else "~" + self.name


class Path(NamedTuple):
    """A walk from ``start`` to ``end``; ``edges == ()`` is the vertex idempotent."""

    start: int
    end: int
    edges: tuple[DirectedEdge, ...] = ()

    @property
    def length(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        if not self.edges:
            return f"v{self.start}"
        return "*".join(str(d) for d in self.edges)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    geometric_edges: tuple[tuple[str, int, int], ...]
    _ends: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_ends", {name: (o, t) for name, o, t in self.geometric_edges})

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @property
    def edge_names(self) -> list[str]:
        return [e[0] for e in self.geometric_edges]

    def has_edge(self, name: str) -> bool:
        return name in self._ends

    def origin(self, d: DirectedEdge) -> int:
        o, t = self._ends[d.name]
        return o if d.forward else t

    def terminus(self, d: DirectedEdge) -> int:
        o, t = self._ends[d.name]
        return t if d.forward else o

    def directed_edges(self) -> list[DirectedEdge]:
        out = []
        for name, _, _ in self.geometric_edges:
            out.append(DirectedEdge(name, True))
            out.append(DirectedEdge(name, False))
        return out

    def edge_path(self, d: DirectedEdge) -> Path:
        return Path(self.origin(d), self.terminus(d), (d,))

    def vertex_path(self, i: int) -> Path:
        return Path(i, i, ())

    def make_path(self, edges: Sequence[DirectedEdge]) -> Path:
        if not edges:
            raise GraphError("use vertex_path for length-0 paths")
        for a, b in zip(edges, edges[1:]):
            if self.terminus(a) != self.origin(b):
                raise GraphError(f"edges {a} and {b} do not compose")
        return Path(self.origin(edges[0]), self.terminus(edges[-1]), tuple(edges))

    def incident(self, v: int) -> Iterable[tuple[str, int, int]]:
        for e in self.geometric_edges:
            if v in (e[1], e[2]):
                yield e


def build_graph(n: int, edges: Iterable[tuple[str, int, int]]) -> Graph:
    if not isinstance(n, int) or n < 1:
        raise GraphError("a graph needs at least one vertex")
    seen: set[str] = set()
    clean = []
    for name, o, t in edges:
        if not isinstance(name, str) or not _NAME_RE.match(name) or _VERTEX_RE.match(name):
            raise GraphError(f"invalid edge name {name!r} (identifier, not of the form v<i>)")
        if name in seen:
            raise GraphError(f"duplicate edge name {name!r}")
        for v in (o, t):
            if not isinstance(v, int) or not 1 <= v <= n:
                raise GraphError(f"edge {name}: vertex {v!r} out of range 1..{n}")
        seen.add(name)
        clean.append((name, o, t))
    return Graph(n, tuple(clean))


def _components_reach(g: Graph, allowed: set[str] | None, root: int) -> set[int]:
    seen = {root}
    stack = [root]
    while stack:
        v = stack.pop()
        for name, o, t in g.incident(v):
            if allowed is not None and name not in allowed:
                continue
            w = t if o == v else o
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_connected(g: Graph) -> bool:
    return len(_components_reach(g, None, 1)) == g.vertex_count


def fundamental_cycle_count(g: Graph) -> int:
    if not is_connected(g):
        raise NotConnected("fundamental cycles are counted on connected graphs")
    return len(g.geometric_edges) - g.vertex_count + 1


@dataclass(frozen=True)
class SpanningTree:
    root: int
    tree_edges: frozenset[str]
    # child -> (parent, directed edge parent -> child)
    parent: dict[int, tuple[int, DirectedEdge]]
    depth: dict[int, int]

    def path_to_root(self, v: int) -> list[DirectedEdge]:
        """Edges walked upward from v (child -> parent direction)."""
        out = []
        while v != self.root:
            p, d = self.parent[v]
            out.append(d.reverse())
            v = p
        return out


def spanning_tree(g: Graph, allowed: Iterable[str] | None = None, root: int = 1) -> SpanningTree:
    """Layered breadth-first tree.

    Layer by layer, the allowed edges are scanned in input order and every edge
    joining the current frontier to an unseen vertex is taken.
    """
    if not 1 <= root <= g.vertex_count:
        raise GraphError(f"root {root} out of range")
    allowed_set = set(g.edge_names) if allowed is None else set(allowed)
    depth = {root: 0}
    parent: dict[int, tuple[int, DirectedEdge]] = {}
    tree: set[str] = set()
    frontier = {root}
    level = 0
    while frontier:
        nxt: set[int] = set()
        for name, o, t in g.geometric_edges:
            if name not in allowed_set or o == t:
                continue
            if o in frontier and t not in depth:
                child, d = t, DirectedEdge(name, True)
            elif t in frontier and o not in depth:
                child, d = o, DirectedEdge(name, False)
            else:
                continue
            depth[child] = level + 1
            parent[child] = (g.origin(d), d)
            tree.add(name)
            nxt.add(child)
        frontier = nxt
        level += 1
    if len(depth) != g.vertex_count:
        missing = sorted(set(g.vertices) - set(depth))
        raise NoSpanningTree(f"allowed edges do not reach vertices {missing}")
    return SpanningTree(root, frozenset(tree), parent, depth)


@dataclass(frozen=True)
class Orientation:
    positive: dict[str, DirectedEdge]
    tree_positive: frozenset[str]
    cycle_positive: frozenset[str]

    def is_positive(self, d: DirectedEdge) -> bool:
        return self.positive[d.name] == d


def orient(g: Graph, t: SpanningTree) -> Orientation:
    positive = {}
    for name, o, term in g.geometric_edges:
        if name in t.tree_edges:
            forward = t.depth[o] < t.depth[term]
            positive[name] = DirectedEdge(name, forward)
        else:
            positive[name] = DirectedEdge(name, True)
    tree_pos = frozenset(t.tree_edges)
    return Orientation(positive, tree_pos, frozenset(positive) - tree_pos)


def geodesic(t: SpanningTree, i: int, j: int) -> list[DirectedEdge]:
    """Edge list of the unique backtracking-free tree path from i to j."""
    up_i = t.path_to_root(i)
    up_j = t.path_to_root(j)
    # strip the shared tail above the meeting vertex
    while up_i and up_j and up_i[-1] == up_j[-1]:
        up_i.pop()
        up_j.pop()
    return up_i + [d.reverse() for d in reversed(up_j)]


def geodesic_path(g: Graph, t: SpanningTree, i: int, j: int) -> Path:
    edges = geodesic(t, i, j)
    return Path(i, j, tuple(edges))


def meet(t: SpanningTree, i: int, j: int) -> int:
    anc = {i}
    v = i
    while v != t.root:
        v = t.parent[v][0]
        anc.add(v)
    v = j
    while v not in anc:
        v = t.parent[v][0]
    return v
