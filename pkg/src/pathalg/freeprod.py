"""Free products over Q of three kinds of augmented factors, with elements
kept as rational combinations of alternating words.

Factor kinds and the basis complement of Q used for their letters:

* ``poly``    Q[t]/(f), deg f >= 2:  t^k for 1 <= k < deg f
* ``laurent`` Q[z, 1/z]:             z^k for k != 0
* ``free``    Q<x, xbar>:            nonempty words in x, xbar (payload tuple of 0/1)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Union

from .algebra import Poly, as_rational
from .errors import AmbientMismatch, NonAlternatingWord

POLY = "poly"
LAURENT = "laurent"
FREE = "free"

X, XBAR = 0, 1

Payload = Union[int, tuple]


@dataclass(frozen=True)
class Factor:
    id: str
    kind: str
    poly: Poly | None = None
    _table: tuple = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind == POLY:
            f = self.poly
            if f is None or f.degree < 2 or f[0] == 0:
                raise ValueError(f"poly factor {self.id} needs deg >= 2 and f(0) != 0")
            # reduced coefficient vectors of t^k mod f for 0 <= k <= 2(d-1)
            d = f.degree
            table = []
            for k in range(2 * d - 1):
                r = (Poly([0] * k + [1])) % f
                table.append(tuple(r[j] for j in range(d)))
            object.__setattr__(self, "_table", tuple(table))
        elif self.kind not in (LAURENT, FREE):
            raise ValueError(f"unknown factor kind {self.kind!r}")

    @property
    def degree(self) -> int:
        return self.poly.degree if self.kind == POLY else 0

    def check_payload(self, payload: Payload) -> None:
        ok = False
        if self.kind == POLY:
            ok = isinstance(payload, int) and 1 <= payload < self.degree
        elif self.kind == LAURENT:
            ok = isinstance(payload, int) and payload != 0
        else:
            ok = isinstance(payload, tuple) and payload and all(p in (X, XBAR) for p in payload)
        if not ok:
            raise ValueError(f"payload {payload!r} out of range for factor {self.id}")

    def merge(self, a: Payload, b: Payload) -> list[tuple[Payload | None, Fraction]]:
        """Product of two letters of this factor; ``None`` stands for the scalar part."""
        if self.kind == LAURENT:
            s = a + b
            return [(None if s == 0 else s, Fraction(1))]
        if self.kind == FREE:
            return [(a + b, Fraction(1))]
        out = []
        for k, c in enumerate(self._table[a + b]):
            if c:
                out.append((None if k == 0 else k, c))
        return out

    def reduce_poly(self, p: Poly) -> list[tuple[Payload | None, Fraction]]:
        """Express a polynomial in the generator of a poly factor on the letter basis."""
        r = p % self.poly
        return [(None if k == 0 else k, c) for k, c in enumerate(r.coeffs) if c]


class Letter(NamedTuple):
    factor: str
    payload: Payload


Word = tuple  # tuple[Letter, ...]


def _payload_key(p: Payload):
    return p if isinstance(p, tuple) else (p,)


def word_key(w: Word):
    return (len(w), tuple((l.factor, _payload_key(l.payload)) for l in w))


class FreeProduct:
    """The factor universe; elements created here share it."""

    def __init__(self, factors: Iterable[Factor] = ()):
        self.factors: dict[str, Factor] = {}
        for f in factors:
            if f.id in self.factors:
                raise ValueError(f"duplicate factor id {f.id!r}")
            self.factors[f.id] = f

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeProduct) and self.factors == other.factors

    def __hash__(self):
        return hash(tuple(self.factors))

    def __repr__(self) -> str:
        return f"FreeProduct({list(self.factors)})"

    def one(self) -> FreeProductElement:
        return FreeProductElement._raw(self, {(): Fraction(1)})

    def zero(self) -> FreeProductElement:
        return FreeProductElement._raw(self, {})

    def scalar(self, c) -> FreeProductElement:
        c = as_rational(c)
        return FreeProductElement._raw(self, {(): c} if c else {})

    def letter(self, factor: str, payload: Payload, coeff=1) -> FreeProductElement:
        return self.word([Letter(factor, payload)], coeff)

    def word(self, letters: Iterable, coeff=1) -> FreeProductElement:
        w = tuple(Letter(*l) for l in letters)
        self.check_word(w)
        c = as_rational(coeff)
        return FreeProductElement._raw(self, {w: c} if c else {})

    def element(self, terms: Mapping[Word, object]) -> FreeProductElement:
        out: dict[Word, Fraction] = {}
        for w, c in terms.items():
            w = tuple(Letter(*l) for l in w)
            self.check_word(w)
            c = as_rational(c)
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return FreeProductElement._raw(self, out)

    def check_word(self, w: Word) -> None:
        prev = None
        for l in w:
            if l.factor not in self.factors:
                raise AmbientMismatch(f"unknown factor {l.factor!r}")
            self.factors[l.factor].check_payload(l.payload)
            if l.factor == prev:
                raise NonAlternatingWord(f"consecutive letters from factor {l.factor}")
            prev = l.factor

    def generator_letters(self) -> list[Letter]:
        """One letter per algebra generator: t, z, 1/z, x, xbar (plus t^k for k < deg)."""
        out = []
        for f in self.factors.values():
            if f.kind == POLY:
                out.extend(Letter(f.id, k) for k in range(1, f.degree))
            elif f.kind == LAURENT:
                out.extend([Letter(f.id, 1), Letter(f.id, -1)])
            else:
                out.extend([Letter(f.id, (X,)), Letter(f.id, (XBAR,))])
        return out

    def join(self, left: Word, right: Word, coeff: Fraction, out: dict) -> None:
        """Accumulate coeff * left * right into ``out`` (cascading seam merges)."""
        while left and right and left[-1].factor == right[0].factor:
            a, b = left[-1], right[0]
            parts = self.factors[a.factor].merge(a.payload, b.payload)
            scalar = None
            for p, c in parts:
                if p is None:
                    scalar = c
                    continue
                # neighbours on both sides belong to other factors: no further merge
                w = left[:-1] + (Letter(a.factor, p),) + right[1:]
                v = out.get(w, 0) + coeff * c
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
            if scalar is None:
                return
            left, right, coeff = left[:-1], right[1:], coeff * scalar
        w = left + right
        v = out.get(w, 0) + coeff
        if v:
            out[w] = v
        else:
            out.pop(w, None)


class FreeProductElement:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: FreeProduct, terms: Mapping[Word, object] | None = None):
        built = ring.element(terms or {})
        self.ring = ring
        self.terms = built.terms

    @classmethod
    def _raw(cls, ring: FreeProduct, terms: dict) -> FreeProductElement:
        out = cls.__new__(cls)
        out.ring = ring
        out.terms = terms
        return out

    def _check(self, other: FreeProductElement) -> None:
        if other.ring is not self.ring and other.ring != self.ring:
            raise AmbientMismatch("elements of different free products")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def scalar_part(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, FreeProductElement):
            return self.terms == other.terms and self.ring == other.ring
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return self.terms == ({(): c} if c else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _lift(self, other) -> FreeProductElement:
        if isinstance(other, FreeProductElement):
            self._check(other)
            return other
        return self.ring.scalar(other)

    def __add__(self, other) -> FreeProductElement:
        other = self._lift(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return FreeProductElement._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> FreeProductElement:
        return FreeProductElement._raw(self.ring, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> FreeProductElement:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> FreeProductElement:
        return self._lift(other) - self

    def scale(self, c) -> FreeProductElement:
        c = as_rational(c)
        if not c:
            return self.ring.zero()
        return FreeProductElement._raw(self.ring, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other) -> FreeProductElement:
        if not isinstance(other, FreeProductElement):
            return self.scale(other)
        return fp_mul(self, other)

    def __rmul__(self, other) -> FreeProductElement:
        return self.scale(other)

    def __pow__(self, k: int) -> FreeProductElement:
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def sorted_terms(self) -> list[tuple[Word, Fraction]]:
        return sorted(self.terms.items(), key=lambda wc: word_key(wc[0]))

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"FreeProductElement({self})"


def fp_one(ring: FreeProduct) -> FreeProductElement:
    return ring.one()


def fp_add(a: FreeProductElement, b: FreeProductElement) -> FreeProductElement:
    return a + b


def fp_scale(a: FreeProductElement, c) -> FreeProductElement:
    return a.scale(c)


def fp_mul(a: FreeProductElement, b: FreeProductElement) -> FreeProductElement:
    a._check(b)
    out: dict[Word, Fraction] = {}
    join = a.ring.join
    for u, c in a.terms.items():
        for v, d in b.terms.items():
            join(u, v, c * d, out)
    return FreeProductElement._raw(a.ring, out)


def canonicalize(ring: FreeProduct, terms: Mapping[Iterable, object]) -> FreeProductElement:
    """Normal form of an arbitrary (possibly non-alternating) combination of letter strings."""
    out: dict[Word, Fraction] = {}
    for letters, c in terms.items():
        acc: dict[Word, Fraction] = {(): as_rational(c)}
        for l in letters:
            l = Letter(*l)
            ring.factors[l.factor].check_payload(l.payload)
            nxt: dict[Word, Fraction] = {}
            for w, v in acc.items():
                ring.join(w, (l,), v, nxt)
            acc = nxt
        for w, v in acc.items():
            s = out.get(w, 0) + v
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return FreeProductElement._raw(ring, out)


def format_letter(l: Letter, ring: FreeProduct | None = None) -> str:
    if isinstance(l.payload, tuple):
        return f"{l.factor}:" + "".join("x" if p == X else "xbar" for p in l.payload)
    return f"{l.factor}^{l.payload}"


def format_word(w: Word) -> str:
    return "·".join(format_letter(l) for l in w) if w else "1"


def format_element(a: FreeProductElement) -> str:
    if not a.terms:
        return "0"
    parts = []
    for w, c in a.sorted_terms():
        sign = "-" if c < 0 else "+"
        m = abs(c)
        if not w:
            body = str(m)
        elif m == 1:
            body = format_word(w)
        else:
            body = f"{m}*{format_word(w)}"
        parts.append(f"{sign} {body}")
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]
