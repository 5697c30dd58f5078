"""Dense exact matrices over a division ring.

Elimination only ever multiplies rows on the left, so the same code is
correct over the quaternions.  Indices in this module are 0-based.
"""
from __future__ import annotations

from .errors import (
    InconsistencyError,
    QuasideterminantUndefinedError,
    RingMismatchError,
    SingularMatrixError,
)
from .ring import Ring, common_ring, inv


class Matrix:
    __slots__ = ("ring", "entries")

    def __init__(self, entries, ring: Ring | None = None):
        rows = [list(r) for r in entries]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix must be rectangular")
        if ring is None:
            flat = [x for r in rows for x in r]
            if not flat:
                raise ValueError("ring is required for an empty matrix")
            ring = common_ring(*flat)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "entries", tuple(tuple(ring.check(x) for x in r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, ring, n):
        return cls([[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)], ring)

    @classmethod
    def zeros(cls, ring, rows, cols=None):
        cols = rows if cols is None else cols
        return cls([[ring.zero()] * cols for _ in range(rows)], ring)

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0]) if self.entries else 0

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return list(self.entries[i])

    def col(self, j):
        return [r[j] for r in self.entries]

    def minor(self, i, j):
        """Copy with row i and column j removed."""
        return Matrix(
            [[x for c, x in enumerate(r) if c != j] for k, r in enumerate(self.entries) if k != i],
            self.ring,
        )

    def transpose(self):
        return Matrix([list(c) for c in zip(*self.entries)], self.ring)

    def _same(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.ring is not self.ring:
            raise RingMismatchError(f"mixed rings: {self.ring.value}, {other.ring.value}")
        return other

    def __add__(self, other):
        other = self._same(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
                      self.ring)

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.entries], self.ring)

    def __sub__(self, other):
        return self + (-self._same(other))

    def __matmul__(self, other):
        other = self._same(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.ring.zero()
        cols = other.col
        out = []
        for r in self.entries:
            row = []
            for j in range(other.cols):
                s = zero
                for a, b in zip(r, cols(j)):
                    if a and b:
                        s = s + a * b
                row.append(s)
            out.append(row)
        return Matrix(out, self.ring)

    def apply(self, vec):
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        zero = self.ring.zero()
        out = []
        for r in self.entries:
            s = zero
            for a, b in zip(r, vec):
                s = s + a * b
            out.append(s)
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring is other.ring and self.entries == other.entries

    def __hash__(self):
        return hash((self.ring, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(map(str, r)) for r in self.entries)
        return f"Matrix([{body}], {self.ring.value})"


def _eliminate(m: Matrix, rhs):
    """Gauss-Jordan reduce m to the identity, applying the same left row
    operations to the rows of ``rhs``.  Returns the transformed rhs."""
    n = m.rows
    if m.cols != n:
        raise ValueError(f"matrix must be square, got {m.shape}")
    a = [list(r) for r in m.entries]
    b = [list(r) for r in rhs]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise SingularMatrixError(col)
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        s = inv(a[col][col])
        a[col] = [s * x for x in a[col]]
        b[col] = [s * x for x in b[col]]
        for r in range(n):
            c = a[r][col]
            if r == col or not c:
                continue
            a[r] = [x - c * y for x, y in zip(a[r], a[col])]
            b[r] = [x - c * y for x, y in zip(b[r], b[col])]
    return b


def invert(m: Matrix) -> Matrix:
    result = Matrix(_eliminate(m, Matrix.identity(m.ring, m.rows).entries), m.ring)
    if __debug__:
        ident = Matrix.identity(m.ring, m.rows)
        if m @ result != ident or result @ m != ident:
            raise InconsistencyError("computed inverse is not two-sided")
    return result


def solve(m: Matrix, vec):
    """z with m z = vec."""
    return [r[0] for r in _eliminate(m, [[v] for v in vec])]


def solve_left(vec, m: Matrix):
    """w with w m = vec, i.e. the row-vector solve."""
    # transposing does not turn w m = v into a column solve over a noncommutative ring
    return (Matrix([vec], m.ring) @ invert(m)).row(0)


def quasidet(m: Matrix, i: int, j: int):
    """The (i, j) quasideterminant  a_ij - r_i (A^{ij})^{-1} c_j  (0-based)."""
    n = m.rows
    if m.cols != n:
        raise ValueError(f"quasideterminant needs a square matrix, got {m.shape}")
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"({i}, {j}) out of range for {n}x{n} matrix")
    if n == 1:
        return m[0, 0]
    row = [x for c, x in enumerate(m.row(i)) if c != j]
    col = [x for r, x in enumerate(m.col(j)) if r != i]
    try:
        z = solve(m.minor(i, j), col)
    except SingularMatrixError as exc:
        raise QuasideterminantUndefinedError(
            f"|A|_{{{i},{j}}} does not exist: the complementary minor is singular"
        ) from exc
    acc = m[i, j]
    for r, zz in zip(row, z):
        acc = acc - r * zz
    return acc


def det(m: Matrix):
    """Determinant by elimination; rationals only."""
    if not m.ring.commutative:
        raise TypeError("determinant is only defined for a commutative ring")
    n = m.rows
    if m.cols != n:
        raise ValueError(f"determinant needs a square matrix, got {m.shape}")
    a = [list(r) for r in m.entries]
    result = m.ring.one()
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return m.ring.zero()
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            result = -result
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            c = a[r][col] / p
            if c:
                a[r] = [x - c * y for x, y in zip(a[r], a[col])]
    return result
