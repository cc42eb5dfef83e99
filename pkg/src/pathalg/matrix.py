"""Dense N x N matrices over a free product."""

from __future__ import annotations

from .errors import AmbientMismatch
from .freeprod import FreeProduct, FreeProductElement, format_element


class MatrixElement:
    __slots__ = ("ring", "n", "rows")

    def __init__(self, ring: FreeProduct, rows):
        self.ring = ring
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def zero(cls, ring: FreeProduct, n: int) -> MatrixElement:
        z = ring.zero()
        return cls(ring, [[z] * n for _ in range(n)])

    @classmethod
    def identity(cls, ring: FreeProduct, n: int) -> MatrixElement:
        z, one = ring.zero(), ring.one()
        return cls(ring, [[one if i == j else z for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> FreeProductElement:
        """1-based entry access."""
        i, j = ij
        return self.rows[i - 1][j - 1]

    def _check(self, other: MatrixElement) -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch {self.n} vs {other.n}")
        if self.ring is not other.ring and self.ring != other.ring:
            raise AmbientMismatch("matrices over different free products")

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixElement):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.rows for e in r)

    def __add__(self, other: MatrixElement) -> MatrixElement:
        self._check(other)
        return MatrixElement(
            self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> MatrixElement:
        return MatrixElement(self.ring, [[-a for a in r] for r in self.rows])

    def __sub__(self, other: MatrixElement) -> MatrixElement:
        return self + (-other)

    def __mul__(self, other) -> MatrixElement:
        if not isinstance(other, MatrixElement):
            return MatrixElement(self.ring, [[a * other for a in r] for r in self.rows])
        self._check(other)
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.ring.zero()
                for k in range(n):
                    a = self.rows[i][k]
                    if a:
                        b = other.rows[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return MatrixElement(self.ring, out)

    def __rmul__(self, c) -> MatrixElement:
        return MatrixElement(self.ring, [[a.scale(c) for a in r] for r in self.rows])

    def nonzero_entries(self):
        for i, r in enumerate(self.rows, 1):
            for j, e in enumerate(r, 1):
                if e:
                    yield i, j, e

    def __str__(self) -> str:
        return format_matrix(self)

    def __repr__(self) -> str:
        return f"MatrixElement(n={self.n}, {list(self.nonzero_entries())})"


def unit_matrix(ring: FreeProduct, n: int, i: int, j: int, q: FreeProductElement | None = None) -> MatrixElement:
    """q placed at 1-based position (i, j)."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"position ({i}, {j}) outside {n}x{n}")
    q = ring.one() if q is None else q
    z = ring.zero()
    return MatrixElement(ring, [[q if (a, b) == (i, j) else z for b in range(1, n + 1)] for a in range(1, n + 1)])


def mat_mul(a: MatrixElement, b: MatrixElement) -> MatrixElement:
    return a * b


def mat_add(a: MatrixElement, b: MatrixElement) -> MatrixElement:
    return a + b


def mat_eq(a: MatrixElement, b: MatrixElement) -> bool:
    a._check(b)
    return a == b


def format_matrix(m: MatrixElement) -> str:
    lines = [f"N={m.n}"]
    for i, j, e in m.nonzero_entries():
        lines.append(f"e[{i},{j}]: {format_element(e)}")
    return "\n".join(lines)
