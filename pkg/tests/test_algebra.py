import math
import random
from fractions import Fraction

import mpmath
import pytest
import sympy

from pathalg.algebra import (
    Poly,
    cyclotomic,
    extract_h_kappa,
    is_property_F,
    minpoly_4cos2,
    totient,
)
from pathalg.errors import PropertyFViolation
from pathalg.sampling import random_property_f_poly

t = Poly.t()


def test_mul_and_divmod_examples():
    assert (t - 1) * (t + 1) == Poly([-1, 0, 1])
    assert divmod(Poly([1, -3, 1]), t) == (t - 3, Poly([1]))
    assert divmod(Poly([-1, 0, 0, 1]), t - 1) == (Poly([1, 1, 1]), Poly())


def test_divmod_identity_random():
    rng = random.Random(11)
    for _ in range(200):
        a = Poly(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(rng.randint(0, 6)))
        b = Poly(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(rng.randint(1, 4)))
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(t, Poly())


@pytest.mark.parametrize("f, expected", [(t - 1, True), (t * t, False), (Poly([5]), False), (Poly(), False)])
def test_is_property_F(f, expected):
    assert is_property_F(f) is expected


@pytest.mark.parametrize(
    "f, h, kappa",
    [
        (t - 1, Poly([1]), 1),
        (Poly([1, -3, 1]), t - 3, -1),
        (t - 2, Poly([1]), 2),
    ],
)
def test_extract_h_kappa_examples(f, h, kappa):
    hk = extract_h_kappa(f)
    assert hk.h == h and hk.kappa == kappa


def test_extract_h_kappa_rejects():
    with pytest.raises(PropertyFViolation):
        extract_h_kappa(t * t)


def test_extract_h_kappa_round_trip():
    rng = random.Random(2024)
    for _ in range(500):
        f = random_property_f_poly(rng, 5)
        assert extract_h_kappa(f).reconstruct() == f


def _sympy_coeffs(expr, var):
    return [Fraction(int(c)) for c in reversed(sympy.Poly(expr, var).all_coeffs())]


def test_cyclotomic_examples():
    assert cyclotomic(1) == Poly([-1, 1])
    assert cyclotomic(4) == Poly([1, 0, 1])
    assert cyclotomic(7) == Poly([1] * 7)


def test_cyclotomic_against_sympy():
    z = sympy.Symbol("z")
    for m in range(1, 31):
        assert list(cyclotomic(m).coeffs) == _sympy_coeffs(sympy.cyclotomic_poly(m, z), z), m


def test_cyclotomic_product_identity():
    for m in range(1, 31):
        prod = Poly([1])
        for d in range(1, m + 1):
            if m % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == Poly([-1] + [0] * (m - 1) + [1])


def test_minpoly_table_from_coxeter_section():
    assert minpoly_4cos2(3) == t - 1
    assert minpoly_4cos2(4) == t - 2
    assert minpoly_4cos2(5) == Poly([1, -3, 1])
    assert minpoly_4cos2(6) == t - 3


def test_minpoly_7_and_8():
    c7 = minpoly_4cos2(7)
    assert c7 == Poly([-1, 6, -5, 1])
    assert residual_at_double(c7, 7) < 1e-9
    c8 = minpoly_4cos2(8)
    assert c8 == Poly([2, -4, 1])
    for root in (2 + math.sqrt(2), 2 - math.sqrt(2)):
        assert abs(c8(root)) < 1e-12


def residual_at_double(c: Poly, m: int) -> float:
    # float Horner on the monomial basis loses ~1e-6 to cancellation for m = 29;
    # evaluate exactly at the double-precision value of 4cos^2(pi/m) instead
    x = 4 * math.cos(math.pi / m) ** 2
    return abs(float(c(Fraction(x))))


@pytest.mark.parametrize("m", range(3, 31))
def test_minpoly_invariants(m):
    c = minpoly_4cos2(m)
    assert c.degree == totient(m) // 2
    assert c.lead == 1 and all(x.denominator == 1 for x in c.coeffs)
    assert residual_at_double(c, m) < 1e-9


@pytest.mark.parametrize("m", range(3, 31))
def test_minpoly_root_high_precision(m):
    with mpmath.workdps(60):
        assert abs(minpoly_4cos2(m)(4 * mpmath.cos(mpmath.pi / m) ** 2)) < mpmath.mpf(10) ** -40


@pytest.mark.parametrize("m", [3, 5, 7, 9, 10, 12])
def test_minpoly_against_sympy_minimal_polynomial(m):
    x = sympy.Symbol("x")
    ref = sympy.minimal_polynomial(4 * sympy.cos(sympy.pi / m) ** 2, x)
    assert list(minpoly_4cos2(m).coeffs) == _sympy_coeffs(ref, x)


def test_minpoly_rejects_small_m():
    with pytest.raises(ValueError):
        minpoly_4cos2(2)


def test_display():
    assert str(Poly([1, -3, 1])) == "t^2 - 3*t + 1"
    assert str(Poly([Fraction(1, 2), 0, -1])) == "-t^2 + 1/2"
    assert str(Poly()) == "0"
