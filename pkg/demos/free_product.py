"""Arithmetic in Q[t]/(t^2 - 3t + 1) * Q[z, z^-1] * Q<x, xbar>."""
from pathalg.sampling import mixed_free_product

Q = mixed_free_product()
T, Z, W = "t[a]", "z[b]", "w[c]"

a = Q.word([(T, 1), (Z, 1), (T, 1)])
b = Q.word([(T, 1), (Z, -1)])
print(f"({a}) * ({b}) = {a * b}")
# t*t folds to 3t - 1; the -1 part lets z and z^-1 meet and cancel

x = Q.letter(W, (0,))
xbar = Q.letter(W, (1,))
print(f"x * xbar = {x * xbar}   (the free factor never reduces)")

u = Q.letter(Z, 2) + Q.scalar(1)
print(f"({u})^3 = {u ** 3}")
