"""Text formats: graph files, Coxeter files, path-algebra expressions and the
display syntax of free-product elements and matrices."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

from .algebra import Poly
from .coxeter import INF, CoxeterMatrix, coxeter_matrix
from .errors import CoxeterError, GraphError, ParseError, PathAlgError, PropertyFViolation
from .freeprod import X, XBAR, FreeProduct, FreeProductElement, Letter, canonicalize
from .graph import DirectedEdge, Graph, build_graph
from .matrix import MatrixElement
from .paths import PathAlgebraElement, PolyFamily

_INT = re.compile(r"[+-]?[0-9]+\Z")
_RAT = re.compile(r"[+-]?[0-9]+(/[0-9]+)?\Z")


def parse_rational(tok: str, line: int | None = None) -> Fraction:
    if not _RAT.match(tok):
        raise ParseError(f"not a rational number: {tok!r}", line)
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {tok!r}", line) from None


def _int(tok: str, line: int) -> int:
    if not _INT.match(tok):
        raise ParseError(f"expected an integer, got {tok!r}", line)
    return int(tok)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body.split()


class GraphFile(NamedTuple):
    graph: Graph
    fam: PolyFamily
    root: int
    has_polys: bool


def parse_graph_file(text: str) -> GraphFile:
    """``vertices N``, ``root i``, ``edge name i j``, ``poly name c0 c1 ... cd``."""
    n = None
    root = 1
    edges: list[tuple[str, int, int, int]] = []
    polys: dict[str, tuple[Poly, int]] = {}
    for no, toks in _lines(text):
        kw, args = toks[0], toks[1:]
        if kw == "vertices":
            if len(args) != 1 or n is not None:
                raise ParseError("'vertices' takes one integer and appears once", no)
            n = _int(args[0], no)
        elif kw == "root":
            if len(args) != 1:
                raise ParseError("'root' takes one integer", no)
            root = _int(args[0], no)
        elif kw == "edge":
            if len(args) != 3:
                raise ParseError("'edge' takes a name and two vertex indices", no)
            edges.append((args[0], _int(args[1], no), _int(args[2], no), no))
        elif kw == "poly":
            if len(args) < 2:
                raise ParseError("'poly' takes an edge name and coefficients c0 .. cd", no)
            if args[0] in polys:
                raise ParseError(f"second 'poly' line for edge {args[0]!r}", no)
            polys[args[0]] = (Poly(parse_rational(a, no) for a in args[1:]), no)
        else:
            raise ParseError(f"unknown keyword {kw!r}", no)
    if n is None:
        raise ParseError("missing 'vertices' line")
    try:
        g = build_graph(n, [(name, o, t) for name, o, t, _ in edges])
    except GraphError as exc:
        raise ParseError(str(exc)) from None
    if not 1 <= root <= n:
        raise ParseError(f"root {root} out of range 1..{n}")
    fam = {}
    for name, (f, no) in polys.items():
        if not g.has_edge(name):
            raise ParseError(f"poly for unknown edge {name!r}", no)
        fam[name] = f
    try:
        family = PolyFamily(fam)
    except PropertyFViolation as exc:
        raise ParseError(str(exc)) from None
    return GraphFile(g, family, root, bool(polys))


def parse_coxeter_file(text: str) -> tuple[CoxeterMatrix, int]:
    """``rank N``, optional ``root i``, lines ``m i j k|inf``; unlisted pairs are 2."""
    rank = None
    root = 1
    entries = {}
    for no, toks in _lines(text):
        kw, args = toks[0], toks[1:]
        if kw == "rank":
            if len(args) != 1 or rank is not None:
                raise ParseError("'rank' takes one integer and appears once", no)
            rank = _int(args[0], no)
        elif kw == "root":
            if len(args) != 1:
                raise ParseError("'root' takes one integer", no)
            root = _int(args[0], no)
        elif kw == "m":
            if len(args) != 3:
                raise ParseError("'m' takes i j and a value", no)
            i, j = _int(args[0], no), _int(args[1], no)
            if i >= j:
                raise ParseError("'m' lines need i < j", no)
            v = args[2].lower()
            entries[i, j] = INF if v in ("inf", "infinity", "oo") else _int(args[2], no)
        else:
            raise ParseError(f"unknown keyword {kw!r}", no)
    if rank is None:
        raise ParseError("missing 'rank' line")
    try:
        cm = coxeter_matrix(rank, entries)
    except CoxeterError as exc:
        raise ParseError(str(exc)) from None
    if not 1 <= root <= rank:
        raise ParseError(f"root {root} out of range 1..{rank}")
    return cm, root


# -- expressions -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>[0-9]+(?:/[0-9]+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*()~]))")
_VERTEX = re.compile(r"v([0-9]+)\Z")


class Token(NamedTuple):
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos=pos)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class ExprParser:
    """expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
    factor := '-' factor | rational | 'v'INT | NAME | '~'NAME | '(' expr ')'
    """

    def __init__(self, text: str, graph: Graph):
        self.graph = graph
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.take()
        if t.text != text:
            raise ParseError(f"expected {text!r}, got {t.text or 'end of input'!r}", pos=t.pos)
        return t

    def parse(self) -> PathAlgebraElement:
        e = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected {t.text!r}", pos=t.pos)
        return e

    def expr(self) -> PathAlgebraElement:
        acc = self.term()
        while self.peek().text in ("+", "-"):
            op = self.take().text
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.factor()
        while self.peek().text == "*":
            self.take()
            rhs = self.factor()
            acc = _mul(acc, rhs)
        return _as_element(acc, self.graph)

    def factor(self):
        t = self.take()
        if t.text == "-":
            v = self.factor()
            return -v
        if t.kind == "num":
            return parse_rational(t.text)
        if t.text == "(":
            e = self.expr()
            self.expect(")")
            return e
        if t.text == "~":
            nt = self.take()
            if nt.kind != "name":
                raise ParseError("'~' must be followed by an edge name", pos=nt.pos)
            return self._edge(nt, False)
        if t.kind == "name":
            m = _VERTEX.match(t.text)
            if m:
                i = int(m.group(1))
                if not 1 <= i <= self.graph.vertex_count:
                    raise ParseError(f"vertex {t.text} out of range", pos=t.pos)
                return PathAlgebraElement.vertex(self.graph, i)
            return self._edge(t, True)
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", pos=t.pos)

    def _edge(self, t: Token, forward: bool) -> PathAlgebraElement:
        if not self.graph.has_edge(t.text):
            raise ParseError(f"unknown edge {t.text!r}", pos=t.pos)
        return PathAlgebraElement.edge(self.graph, DirectedEdge(t.text, forward))


def _mul(a, b):
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a * b
    if isinstance(a, Fraction):
        return b * a
    return a * b


def _as_element(v, g: Graph) -> PathAlgebraElement:
    return v if isinstance(v, PathAlgebraElement) else PathAlgebraElement.scalar(g, v)


def parse_expression(text: str, graph: Graph) -> PathAlgebraElement:
    return ExprParser(text, graph).parse()


# -- free-product / matrix display syntax --------------------------------------

_LETTER = re.compile(r"(?P<id>[a-z]\[[A-Za-z_][A-Za-z0-9_]*\])(?:\^(?P<exp>-?[0-9]+)|:(?P<free>(?:xbar|x)+))")
_FREE_SYM = re.compile(r"xbar|x")


def parse_word(text: str, pos: int = 0) -> list[Letter]:
    letters = []
    for chunk in text.split("·"):
        m = _LETTER.fullmatch(chunk.strip())
        if not m:
            raise ParseError(f"bad letter {chunk!r}", pos=pos)
        if m.group("free"):
            payload = tuple(X if s == "x" else XBAR for s in _FREE_SYM.findall(m.group("free")))
        else:
            payload = int(m.group("exp"))
        letters.append(Letter(m.group("id"), payload))
        pos += len(chunk) + 1
    return letters


_TERM_SPLIT = re.compile(r"\s+([+-])\s+")


def parse_fp_element(text: str, ring: FreeProduct) -> FreeProductElement:
    text = text.strip()
    if text == "0":
        return ring.zero()
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:].lstrip()
    pieces = _TERM_SPLIT.split(text)
    terms: dict = {}
    signs = [sign] + [1 if s == "+" else -1 for s in pieces[1::2]]
    for sgn, body in zip(signs, pieces[0::2]):
        coeff = Fraction(sgn)
        if "*" in body:
            c, _, body = body.partition("*")
            coeff *= parse_rational(c)
        elif _RAT.match(body):
            coeff *= parse_rational(body)
            body = ""
        if body in ("", "1"):
            word: tuple = ()
        else:
            word = tuple(parse_word(body))
        try:
            ring.check_word(word)
        except (PathAlgError, ValueError) as exc:
            raise ParseError(str(exc)) from None
        terms[word] = terms.get(word, 0) + coeff
    return canonicalize(ring, terms)


_ENTRY = re.compile(r"e\[(\d+),(\d+)\]:\s*(.*)\Z")


def parse_matrix(text: str, ring: FreeProduct) -> MatrixElement:
    lines = [l.strip() for l in text.strip().splitlines() if l.strip()]
    if not lines or not lines[0].startswith("N="):
        raise ParseError("matrix text must start with 'N=<size>'", 1)
    n = _int(lines[0][2:], 1)
    rows = [[ring.zero() for _ in range(n)] for _ in range(n)]
    for no, l in enumerate(lines[1:], 2):
        m = _ENTRY.match(l)
        if not m:
            raise ParseError(f"bad matrix entry line {l!r}", no)
        i, j = int(m.group(1)), int(m.group(2))
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"entry ({i},{j}) out of range", no)
        rows[i - 1][j - 1] = rows[i - 1][j - 1] + parse_fp_element(m.group(3), ring)
    return MatrixElement(ring, rows)
