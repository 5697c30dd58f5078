"""Bimoment tables and the pairing <p(x), q(y)> they define."""
from __future__ import annotations

from .errors import InsufficientBimomentsError, RingMismatchError
from .poly import LeftPoly, RightPoly
from .ring import Ring, common_ring


class BimomentTable:
    """Finite corner of the bimoment array, entry (a, b) = I_{a,b} = <x^a, y^b>."""

    __slots__ = ("ring", "entries")

    def __init__(self, entries, ring: Ring | None = None):
        rows = [list(r) for r in entries]
        if not rows or not rows[0]:
            raise ValueError("a bimoment table needs at least one entry")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("bimoment table must be rectangular")
        if ring is None:
            ring = common_ring(*(x for r in rows for x in r))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(
            self, "entries", tuple(tuple(ring.check(x) for x in r) for r in rows)
        )

    def __setattr__(self, name, value):
        raise AttributeError("BimomentTable is immutable")

    @classmethod
    def from_function(cls, ring, rows, cols, fn):
        return cls([[fn(a, b) for b in range(cols)] for a in range(rows)], ring)

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0])

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, ab):
        a, b = ab
        if not (0 <= a < self.rows and 0 <= b < self.cols):
            raise InsufficientBimomentsError(a, b, self.rows, self.cols)
        return self.entries[a][b]

    def require(self, rows, cols):
        """Raise unless the table covers I_{a,b} for a < rows, b < cols."""
        if rows > self.rows:
            raise InsufficientBimomentsError(rows - 1, 0, self.rows, self.cols)
        if cols > self.cols:
            raise InsufficientBimomentsError(0, cols - 1, self.rows, self.cols)

    def crop(self, rows, cols):
        self.require(rows, cols)
        return BimomentTable([r[:cols] for r in self.entries[:rows]], self.ring)

    def replace(self, a, b, value):
        """Copy of the table with a single entry changed."""
        self[a, b]
        rows = [list(r) for r in self.entries]
        rows[a][b] = value
        return BimomentTable(rows, self.ring)

    def __eq__(self, other):
        if not isinstance(other, BimomentTable):
            return NotImplemented
        return self.ring is other.ring and self.entries == other.entries

    def __hash__(self):
        return hash((self.ring, self.entries))

    def __repr__(self):
        return f"BimomentTable({self.rows}x{self.cols}, {self.ring.value})"


def _check(p, q, table):
    if not isinstance(p, LeftPoly) or not isinstance(q, RightPoly):
        raise TypeError("pair expects a LeftPoly in x and a RightPoly in y")
    if p.ring is not table.ring or q.ring is not table.ring:
        raise RingMismatchError("polynomials and table must share a ring")


def pair(p: LeftPoly, q: RightPoly, table: BimomentTable):
    """<sum a_i x^i, sum y^j b_j> = sum a_i I_{i,j} b_j."""
    _check(p, q, table)
    total = table.ring.zero()
    for i, a in enumerate(p.coeffs):
        if not a:
            continue
        for j, b in enumerate(q.coeffs):
            if b:
                total = total + a * table[i, j] * b
    return total


def pair_vec(ps, q: RightPoly, table: BimomentTable):
    return [pair(p, q, table) for p in ps]


def pair_vec_right(p: LeftPoly, qs, table: BimomentTable):
    return [pair(p, q, table) for q in qs]


def gram(ps, qs, table: BimomentTable):
    """G[n][m] = <p_n, q_m>."""
    return [[pair(p, q, table) for q in qs] for p in ps]


def hankel_table(moments, n) -> BimomentTable:
    """n x n table with I_{a,b} = S_{a+b} (commutative rings only)."""
    moments = list(moments)
    if len(moments) < 2 * n - 1:
        raise ValueError(f"need {2 * n - 1} moments for a {n}x{n} Hankel table, got {len(moments)}")
    ring = common_ring(*moments)
    if not ring.commutative:
        raise ValueError("Hankel tables are only defined here over the rationals")
    return BimomentTable([[moments[a + b] for b in range(n)] for a in range(n)], ring)


def kronecker_table(ring, rows, cols=None) -> BimomentTable:
    cols = rows if cols is None else cols
    return BimomentTable.from_function(
        ring, rows, cols, lambda a, b: ring.one() if a == b else ring.zero()
    )
