"""Cohn path algebras: the all-(t - 1) family, the relation check through
phi, and a free-reduction rewriting oracle for the equality decision."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly
from .freeprod import LAURENT
from .graph import Graph, Path, fundamental_cycle_count
from .iso import IsoContext, VerificationReport, build_context, describe_Q, phi, verify_context
from .matrix import MatrixElement
from .paths import PathAlgebraElement, PolyFamily, loop_element

T_MINUS_ONE = Poly((-1, 1))

UGN_CHAIN = (
    "C(Gamma) maps onto M_N(Q) with Q a free product of Laurent polynomial rings;",
    "Q is a free ideal ring (Cohn), hence weakly finite;",
    "M_N(Q) is weakly finite (matrix characterization);",
    "a ring with a weakly finite homomorphic image has UGN, so C(Gamma) has UGN.",
    "(cited chain only; not re-proved or tested here)",
)


def cohn_family(g: Graph) -> PolyFamily:
    return PolyFamily({name: T_MINUS_ONE for name in g.edge_names})


@dataclass
class CohnReport:
    ctx: IsoContext
    relations_checked: int
    relation_failures: list[str]
    laurent_factors: int
    cycle_count: int
    verification: VerificationReport

    @property
    def ok(self) -> bool:
        return (not self.relation_failures and self.laurent_factors == self.cycle_count
                and self.verification.ok)

    def lines(self) -> list[str]:
        n = self.ctx.n
        q = "Q" if self.laurent_factors == 0 else " * ".join(["Q[z, z^-1]"] * self.laurent_factors)
        out = [f"N = {n}", f"fundamental cycles = {self.cycle_count}",
               f"Laurent factors = {self.laurent_factors}", f"Q = {q}", f"R ~ M_{n}({q})"]
        if self.relation_failures:
            out += [f"FAIL cohn-relation {f}" for f in self.relation_failures]
        else:
            out.append(f"PASS cohn-relations ({self.relations_checked} checks)")
        out += self.verification.lines()[:-1]
        out += ["UGN: " + line for line in UGN_CHAIN]
        out.append(f"RESULT {'ok' if self.ok else 'fail'}")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def cohn_check(g: Graph, root: int = 1, seed: int = 0) -> CohnReport:
    ctx = build_context(g, cohn_family(g), root)
    zero = MatrixElement.zero(ctx.ring, ctx.n)
    failures = []
    checked = 0
    for name in g.edge_names:
        y = ctx.orientation.positive[name]
        for d in (y, y.reverse()):
            # d dbar - [o(d)]; for d = ybar this is the Cohn relation ybar y - [t(y)]
            rel = loop_element(g, d) - PathAlgebraElement.vertex(g, g.origin(d))
            checked += 1
            if phi(ctx, rel) != zero:
                failures.append(f"phi({d}*{d.reverse()} - v{g.origin(d)}) != O")
    laurent = sum(1 for r in describe_Q(ctx).nontrivial if r.factor.kind == LAURENT)
    return CohnReport(ctx, checked, failures, laurent, fundamental_cycle_count(g),
                      verify_context(ctx, seed=seed))


def free_reduce_path(p: Path) -> Path:
    """Cancel every backtracking pair d dbar (rewrite d dbar -> [o(d)])."""
    stack = []
    for d in p.edges:
        if stack and stack[-1] == d.reverse():
            stack.pop()
        else:
            stack.append(d)
    return Path(p.start, p.end, tuple(stack))


def rewrite_normal_form(a: PathAlgebraElement) -> PathAlgebraElement:
    """Normal form for the all-(t - 1) quotient: combinations of reduced paths."""
    out: dict[Path, Fraction] = {}
    for p, c in a.terms.items():
        r = free_reduce_path(p)
        v = out.get(r, 0) + c
        if v:
            out[r] = v
        else:
            out.pop(r, None)
    return PathAlgebraElement._raw(a.graph, out)


def rewrite_equal(a: PathAlgebraElement, b: PathAlgebraElement) -> bool:
    return rewrite_normal_form(a) == rewrite_normal_form(b)
