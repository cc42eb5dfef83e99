"""Five generators r, s, t, u, v with the Coxeter matrix below.

The quotient of the path algebra by the C_m relations is a 5x5 matrix ring
over a free product; this prints the factors and runs the identity checks.
"""
from pathalg import INF, coxeter_analyze, from_rows, phi
from pathalg.paths import PathAlgebraElement, eval_at_loop
from pathalg.graph import DirectedEdge

cm = from_rows([
    [1, 3, 2, 4, 2],
    [3, 1, 5, 2, 2],
    [2, 5, 1, 6, 5],
    [4, 2, 6, 1, INF],
    [2, 2, 5, INF, 1],
])

ana = coxeter_analyze(cm)
print(ana)
print()
print(ana.verification)

# the s-t relation C_5(y ybar) is nonzero in the path algebra but dies under phi
ctx = ana.ctx
y = DirectedEdge("y2_3")
rel = eval_at_loop(ctx.graph, ctx.fam["y2_3"], y)
print()
print("C_5(y ybar) =", rel)
print("phi of it is zero:", phi(ctx, rel).is_zero())
print("phi(y ybar):")
print(phi(ctx, PathAlgebraElement.path(ctx.graph, ctx.graph.make_path([y, y.reverse()]))))
