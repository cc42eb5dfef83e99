"""Cohn path algebra of a theta graph: three edges between two vertices.

Every edge gets t - 1, so y ybar = [o(y)] for all directed y.  Two independent
cycles give two Laurent factors.
"""
from pathalg import build_graph, cohn_check, parse_expression
from pathalg.cohn import cohn_family, rewrite_normal_form
from pathalg.iso import build_context, equal_in_R

g = build_graph(2, [("a", 1, 2), ("b", 1, 2), ("c", 1, 2)])
rep = cohn_check(g)
print(rep)

ctx = build_context(g, cohn_family(g))
x = parse_expression("a*~b*b*~c - a*~c + 2*v1", g)
print()
print("x            =", x)
print("reduced form =", rewrite_normal_form(x))
print("x == 2*v1 in the quotient:", equal_in_R(ctx, x, parse_expression("2*v1", g)))
