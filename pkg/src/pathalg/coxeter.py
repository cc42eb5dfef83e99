"""Coxeter matrices -> (graph, C_m family), and the bundled analysis."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .algebra import minpoly_4cos2
from .errors import CoxeterError, NotConnected
from .graph import Graph, build_graph, is_connected
from .iso import IsoContext, QReport, VerificationReport, build_context, describe_Q, verify_context
from .freeprod import POLY
from .paths import PolyFamily

INF = math.inf


@dataclass(frozen=True)
class CoxeterMatrix:
    rank: int
    # upper triangle, i < j; missing pairs mean m_ij = 2
    entries: Mapping[tuple[int, int], float]

    def m(self, i: int, j: int):
        if i == j:
            return 1
        if i > j:
            i, j = j, i
        return self.entries.get((i, j), 2)

    def full(self) -> list[list]:
        return [[self.m(i, j) for j in range(1, self.rank + 1)] for i in range(1, self.rank + 1)]


def coxeter_matrix(rank: int, entries: Mapping[tuple[int, int], object]) -> CoxeterMatrix:
    if not isinstance(rank, int) or rank < 1:
        raise CoxeterError("rank must be a positive integer")
    clean: dict[tuple[int, int], float] = {}
    for (i, j), m in entries.items():
        if not (1 <= i <= rank and 1 <= j <= rank) or i == j:
            raise CoxeterError(f"bad index pair ({i}, {j})")
        if i > j:
            i, j = j, i
        if m != INF and not (isinstance(m, int) and m >= 2):
            raise CoxeterError(f"m_{i}{j} = {m!r}: entries must be integers >= 2 or inf")
        if (i, j) in clean and clean[i, j] != m:
            raise CoxeterError(f"conflicting values for m_{i}{j}")
        clean[i, j] = m
    return CoxeterMatrix(rank, clean)


def from_rows(rows) -> CoxeterMatrix:
    """Build from a full symmetric matrix (diagonal 1)."""
    n = len(rows)
    entries = {}
    for i in range(n):
        if rows[i][i] != 1:
            raise CoxeterError("diagonal entries must be 1")
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise CoxeterError(f"matrix not symmetric at ({i + 1}, {j + 1})")
            entries[i + 1, j + 1] = rows[i][j]
    return coxeter_matrix(n, entries)


def edge_name(i: int, j: int) -> str:
    return f"y{i}_{j}"


def coxeter_to_graph(cm: CoxeterMatrix) -> tuple[Graph, PolyFamily]:
    """Edges y_ij (i < j) for m_ij >= 3, listed by (deg C_m, i, j) with inf last.

    The order feeds the spanning-tree scan, so low-degree edges (trivial
    factors) are preferred as tree edges.
    """
    keyed = []
    polys = {}
    for i in range(1, cm.rank + 1):
        for j in range(i + 1, cm.rank + 1):
            m = cm.m(i, j)
            if m == 2:
                continue
            name = edge_name(i, j)
            if m == INF:
                keyed.append((math.inf, i, j, name))
            else:
                polys[name] = minpoly_4cos2(m)
                keyed.append((polys[name].degree, i, j, name))
    keyed.sort()
    edges = [(name, i, j) for _, i, j, name in keyed]
    return build_graph(cm.rank, edges), PolyFamily(polys)


def _m_label(m) -> str:
    return "inf" if m == INF else str(m)


@dataclass
class CoxeterAnalysis:
    matrix: CoxeterMatrix
    ctx: IsoContext
    report: QReport
    verification: VerificationReport | None

    def edge_m(self, name: str):
        i, j = (int(s) for s in name[1:].split("_"))
        return self.matrix.m(i, j)

    def factor_labels(self) -> list[str]:
        """Nontrivial factors named as K_m, Q[z, z^-1] and Q<x, xbar>."""
        out = []
        for r in self.report.nontrivial:
            if r.factor.kind == POLY:
                out.append(f"K_{self.edge_m(r.edge)}")
            elif r.role == "cycle-z":
                out.append("Q[z, z^-1]")
            else:
                out.append("Q<x, xbar>")
        return out

    def trivial_labels(self) -> list[str]:
        return [f"K_{self.edge_m(t.edge)}" for t in self.report.trivial]

    def lines(self) -> list[str]:
        rows = self.matrix.full()
        out = ["Coxeter matrix:"]
        out += ["  " + " ".join(f"{_m_label(m):>3}" for m in r) for r in rows]
        out.append(f"R ~ M_{self.matrix.rank}(Q), Q the free product of:")
        for r, label in zip(self.report.nontrivial, self.factor_labels()):
            i, j = r.edge[1:].split("_")
            out.append(f"  {label:<11} {r.factor.id:<12} edge s{i}-s{j}, {r.role}")
        for t, label in zip(self.report.trivial, self.trivial_labels()):
            i, j = t.edge[1:].split("_")
            out.append(f"  {label} = Q   {'':<12} edge s{i}-s{j}, {t.role}, C = {t.poly}")
        if not self.report.nontrivial:
            out.append(f"  (all factors trivial: Q = Q, R ~ M_{self.matrix.rank}(Q))")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def coxeter_analyze(cm: CoxeterMatrix, root: int = 1, verify: bool = True, seed: int = 0) -> CoxeterAnalysis:
    g, fam = coxeter_to_graph(cm)
    if not is_connected(g):
        raise NotConnected("reducible Coxeter system (disconnected graph): analyze the irreducible components separately")
    ctx = build_context(g, fam, root)
    report = describe_Q(ctx)
    return CoxeterAnalysis(cm, ctx, report, verify_context(ctx, seed=seed) if verify else None)


def type_A(n: int) -> CoxeterMatrix:
    return coxeter_matrix(n, {(i, i + 1): 3 for i in range(1, n)})


def type_B(n: int) -> CoxeterMatrix:
    entries = {(i, i + 1): 3 for i in range(1, n - 1)}
    entries[n - 1, n] = 4
    return coxeter_matrix(n, entries)


def type_D(n: int) -> CoxeterMatrix:
    entries = {(i, i + 1): 3 for i in range(1, n - 1)}
    entries[n - 2, n] = 3
    return coxeter_matrix(n, entries)


WORKED_EXAMPLE = from_rows([
    [1, 3, 2, 4, 2],
    [3, 1, 5, 2, 2],
    [2, 5, 1, 6, 5],
    [4, 2, 6, 1, INF],
    [2, 2, 5, INF, 1],
])
