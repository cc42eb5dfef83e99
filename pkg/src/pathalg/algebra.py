"""Exact univariate polynomials over Q, cyclotomic polynomials and the
Coxeter polynomials C_m (minimal polynomial of 4cos^2(pi/m))."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import PropertyFViolation

Rational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass int, Fraction or 'a/b' strings")
    return Fraction(x)


class Poly:
    """Dense polynomial c0 + c1*t + ... + cd*t^d with rational coefficients."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def t(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> Poly:
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("Poly", self.coeffs))
        return self._hash

    def __add__(self, other) -> Poly:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> Poly:
        return _coerce(other) - self

    def __mul__(self, other) -> Poly:
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        if len(rem) - 1 < d:
            return Poly(), Poly(rem)
        quot = [Fraction(0)] * (len(rem) - d)
        lead = other.lead
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k] / lead
            quot[k - d] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k - d + j] -= c * b
        return Poly(quot), Poly(rem[:d])

    def __floordiv__(self, other) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Poly:
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + (float(c) if isinstance(x, float) else c)
        return acc

    def compose(self, inner: Poly) -> Poly:
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def to_str(self, var: str = "t") -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append(f"{sign} {body}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Poly({self.to_str()!r})"


def _coerce(x) -> Poly:
    return x if isinstance(x, Poly) else Poly.const(x)


def poly_from_ints(coeffs: Sequence[int]) -> Poly:
    return Poly(coeffs)


def is_property_F(f: Poly) -> bool:
    """Nonconstant with a nonzero (hence unit) constant term."""
    return f.degree >= 1 and f[0] != 0


@dataclass(frozen=True)
class HKappa:
    h: Poly
    kappa: Fraction

    def reconstruct(self) -> Poly:
        return Poly.t() * self.h - self.kappa


def extract_h_kappa(f: Poly) -> HKappa:
    """Split f(t) = t*h(t) - kappa."""
    if not is_property_F(f):
        raise PropertyFViolation(f"{f} is constant or has zero constant term")
    return HKappa(h=Poly(f.coeffs[1:]), kappa=-f[0])


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> Poly:
    if m < 1:
        raise ValueError("cyclotomic index must be >= 1")
    num = Poly([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            num, r = divmod(num, cyclotomic(d))
            assert r.is_zero()
    return num


def totient(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if _gcd(k, m) == 1)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _palindromic_reduce(p: Poly) -> Poly:
    """For palindromic p(z) of even degree 2n return Q with p(z) = z^n Q(z + 1/z)."""
    cs = list(p.coeffs)
    n2 = len(cs) - 1
    if n2 % 2 or any(cs[k] != cs[n2 - k] for k in range(n2 + 1)):
        raise ValueError(f"{p.to_str('z')} is not an even-degree palindrome")
    n = n2 // 2
    # z^-n p(z) = sum_k a_k (z^k + z^-k) + a_0, a_k = cs[n+k]; z^k + z^-k is a Dickson
    # polynomial D_k(w) in w = z + 1/z: D_0 = 2, D_1 = w, D_{k+1} = w D_k - D_{k-1}.
    w = Poly.t()
    dickson = [Poly.const(2), w]
    for k in range(2, n + 1):
        dickson.append(w * dickson[k - 1] - dickson[k - 2])
    out = Poly.const(cs[n])
    for k in range(1, n + 1):
        out = out + cs[n + k] * dickson[k]
    return out


@lru_cache(maxsize=None)
def minpoly_4cos2(m: int) -> Poly:
    """Minimal polynomial C_m of 4cos^2(pi/m) over Q, m >= 3 finite.

    Uses 4cos^2(pi/m) = 2 + 2cos(2pi/m): with w = z + 1/z at z = exp(2pi i/m),
    Phi_m(z) = z^(phi(m)/2) Psi(w) and C_m(t) = Psi(t - 2).
    """
    if not isinstance(m, int) or m < 3:
        raise ValueError("C_m is defined for integers m >= 3")
    psi = _palindromic_reduce(cyclotomic(m))
    return psi.compose(Poly((-2, 1)))
