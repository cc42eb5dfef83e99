"""C_m, the minimal polynomial of 4cos^2(pi/m), for small m."""
import math
from fractions import Fraction

from pathalg import minpoly_4cos2

for m in range(3, 16):
    c = minpoly_4cos2(m)
    x = 4 * math.cos(math.pi / m) ** 2
    print(f"C_{m:<2} = {str(c):<40} deg {c.degree}   residual {float(c(Fraction(x))):.1e}")
