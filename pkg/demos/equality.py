"""Deciding equality modulo the relations through the matrix image."""
from pathalg import parse_expression, parse_graph_file
from pathalg.iso import build_context, equal_in_R, phi
from pathalg.paths import vee
from pathalg.graph import DirectedEdge

text = """
vertices 3
edge a 1 2
edge b 2 3
edge c 3 1
poly a 1 -3 1
poly b -2 1
"""
gf = parse_graph_file(text)
g = gf.graph
ctx = build_context(g, gf.fam)

a = DirectedEdge("a")
print("a^vee =", vee(g, a, gf.fam))
print("a * a^vee == v1 :", equal_in_R(ctx, parse_expression("a", g) * vee(g, a, gf.fam), parse_expression("v1", g)))

lhs = parse_expression("a*~a*a*~a", g)
rhs = parse_expression("3*a*~a - v1", g)
print(f"{lhs} == {rhs} :", equal_in_R(ctx, lhs, rhs))
print(f"{lhs} == v1 :", equal_in_R(ctx, lhs, parse_expression("v1", g)))

# c is not in Y_1, so it stays free
print("phi(c * ~c):")
print(phi(ctx, parse_expression("c*~c", g)))
