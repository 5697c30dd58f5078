"""Finite corners of infinite banded matrices.

A :class:`BandedMatrix` stands for the leading ``trunc`` x ``trunc`` corner of
an infinite matrix together with a band certificate [lo, hi]: entry (u, v)
is zero unless lo <= u - v <= hi (row index minus column index).  Either side
of the band may be unbounded (``-inf`` / ``+inf``).

Because products of truncations drop terms, every matrix also records
``exact``: the size of the leading sub-square whose entries agree with the
infinite matrix.
"""
from __future__ import annotations

import math

from .errors import InconsistencyError, RingMismatchError, TruncationError
from .linalg import Matrix
from .ring import Ring, common_ring

INF = math.inf


def _bound(x):
    if x in (INF, -INF):
        return x
    if isinstance(x, float) and not x.is_integer():
        raise ValueError(f"band bounds are integers or +/-inf, got {x}")
    return int(x)


class BandedMatrix:
    __slots__ = ("ring", "trunc", "lo", "hi", "entries", "exact")

    def __init__(self, ring: Ring, trunc: int, lo, hi, entries=None, exact=None):
        lo, hi = _bound(lo), _bound(hi)
        if lo > hi:
            raise ValueError(f"empty band [{lo}, {hi}]")
        if trunc < 0:
            raise ValueError("truncation must be non-negative")
        clean = {}
        for (u, v), x in (entries or {}).items():
            if not (0 <= u < trunc and 0 <= v < trunc):
                raise IndexError(f"entry ({u}, {v}) outside {trunc}x{trunc} truncation")
            x = ring.check(x)
            if not x:
                continue
            if not lo <= u - v <= hi:
                raise InconsistencyError(
                    f"nonzero entry ({u}, {v}) violates band certificate [{lo}, {hi}]"
                )
            clean[(u, v)] = x
        exact = trunc if exact is None else min(int(exact), trunc)
        for name, value in (("ring", ring), ("trunc", trunc), ("lo", lo), ("hi", hi),
                            ("entries", clean), ("exact", exact)):
            object.__setattr__(self, name, value)

    def __setattr__(self, name, value):
        raise AttributeError("BandedMatrix is immutable")

    def __getitem__(self, uv):
        u, v = uv
        if not (0 <= u < self.trunc and 0 <= v < self.trunc):
            raise IndexError(f"({u}, {v}) outside {self.trunc}x{self.trunc} truncation")
        return self.entries.get((u, v), self.ring.zero())

    @property
    def band(self):
        return (self.lo, self.hi)

    def row(self, u):
        return [self[u, v] for v in range(self.trunc)]

    def support(self, u):
        """Column indices of the nonzero entries in row u."""
        return sorted(v for (r, v) in self.entries if r == u)

    def to_dense(self) -> Matrix:
        return Matrix([self.row(u) for u in range(self.trunc)], self.ring)

    def transpose(self):
        return BandedMatrix(self.ring, self.trunc, -self.hi, -self.lo,
                            {(v, u): x for (u, v), x in self.entries.items()}, self.exact)

    def __neg__(self):
        return BandedMatrix(self.ring, self.trunc, self.lo, self.hi,
                            {k: -x for k, x in self.entries.items()}, self.exact)

    def __add__(self, other):
        return band_add(self, other)

    def __sub__(self, other):
        return band_add(self, -other)

    def __matmul__(self, other):
        return band_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, BandedMatrix):
            return NotImplemented
        return (self.ring is other.ring and self.trunc == other.trunc
                and self.band == other.band and self.entries == other.entries
                and self.exact == other.exact)

    def __repr__(self):
        return (f"BandedMatrix(N={self.trunc}, band=[{self.lo}, {self.hi}], "
                f"exact={self.exact}, nnz={len(self.entries)}, {self.ring.value})")


def unit(ring, i, j, n):
    """E_{i,j}."""
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"({i}, {j}) outside {n}x{n} truncation")
    return BandedMatrix(ring, n, i - j, i - j, {(i, j): ring.one()})


def shift(ring, n):
    """The up-shift Lambda: ones on the superdiagonal, so (Lambda v)_u = v_{u+1}."""
    return BandedMatrix(ring, n, -1, -1, {(u, u + 1): ring.one() for u in range(n - 1)})


def identity(ring, n):
    return BandedMatrix(ring, n, 0, 0, {(u, u): ring.one() for u in range(n)})


def diagonal(ds, ring=None):
    ds = list(ds)
    if ring is None:
        if not ds:
            raise ValueError("ring is required for an empty diagonal")
        ring = common_ring(*ds)
    return BandedMatrix(ring, len(ds), 0, 0, {(u, u): d for u, d in enumerate(ds)})


def zeros(ring, n):
    return BandedMatrix(ring, n, 0, 0)


def _compatible(x, y):
    if x.ring is not y.ring:
        raise RingMismatchError(f"mixed rings: {x.ring.value}, {y.ring.value}")
    if x.trunc != y.trunc:
        raise TruncationError(f"truncation mismatch: {x.trunc} vs {y.trunc}")


def band_add(x: BandedMatrix, y: BandedMatrix) -> BandedMatrix:
    """X + Y with certificate [min(lo), max(hi)]."""
    _compatible(x, y)
    out = dict(x.entries)
    for k, v in y.entries.items():
        out[k] = out[k] + v if k in out else v
    return BandedMatrix(x.ring, x.trunc, min(x.lo, y.lo), max(x.hi, y.hi), out,
                        min(x.exact, y.exact))


def _contributors(x, y, u, v):
    """Range of w with (u, w) in X's band and (w, v) in Y's band, clipped at 0."""
    w_lo = max(0, u - x.hi, v + y.lo)
    w_hi = min(u - x.lo, v + y.hi)
    return w_lo, w_hi


def product_entry_exact(x, y, u, v):
    """True if (XY)_{u,v} computed from the corners equals the infinite product's entry."""
    e = min(x.exact, y.exact)
    if u >= e or v >= e:
        return False
    w_lo, w_hi = _contributors(x, y, u, v)
    return w_lo > w_hi or w_hi < e


def band_mul(x: BandedMatrix, y: BandedMatrix) -> BandedMatrix:
    """Truncated product XY with certificate [lo_x + lo_y, hi_x + hi_y].

    The result's ``exact`` is the largest s such that every entry of the
    leading s x s corner only involves inner indices w inside the exact part
    of both factors.
    """
    _compatible(x, y)
    ring = x.ring
    by_row = {}
    for (w, v), b in y.entries.items():
        by_row.setdefault(w, []).append((v, b))
    out = {}
    for (u, w), a in x.entries.items():
        for v, b in by_row.get(w, ()):
            out[(u, v)] = out[(u, v)] + a * b if (u, v) in out else a * b
    s = 0
    limit = min(x.exact, y.exact)
    while s < limit and all(product_entry_exact(x, y, s, t) and product_entry_exact(x, y, t, s)
                            for t in range(s + 1)):
        s += 1
    return BandedMatrix(ring, x.trunc, x.lo + y.lo, x.hi + y.hi, out, s)


def inferred_band(entries):
    """(lo, hi) of the nonzero positions; (0, 0) for no nonzeros."""
    diffs = [u - v for (u, v), x in entries if x]
    if not diffs:
        return (0, 0)
    return (min(diffs), max(diffs))


def band_infer(m) -> BandedMatrix:
    """Tightest certificate for a dense matrix (or re-certify a banded one)."""
    if isinstance(m, BandedMatrix):
        lo, hi = inferred_band(m.entries.items())
        return BandedMatrix(m.ring, m.trunc, lo, hi, m.entries, m.exact)
    if m.rows != m.cols:
        raise ValueError(f"band_infer needs a square matrix, got {m.shape}")
    entries = {(u, v): m[u, v] for u in range(m.rows) for v in range(m.cols) if m[u, v]}
    lo, hi = inferred_band(entries.items())
    return BandedMatrix(m.ring, m.rows, lo, hi, entries)


def restrict(m: BandedMatrix, size=None) -> BandedMatrix:
    """Leading size x size corner (default: the exact part)."""
    size = m.exact if size is None else size
    if size > m.trunc:
        raise TruncationError(f"cannot restrict {m.trunc}x{m.trunc} to {size}")
    return BandedMatrix(m.ring, size, m.lo, m.hi,
                        {k: v for k, v in m.entries.items() if k[0] < size and k[1] < size},
                        min(m.exact, size))


def band_within(inner, outer):
    """Interval containment inner subset of outer."""
    return outer[0] <= inner[0] and inner[1] <= outer[1]


def col_minus_row(band):
    """The same band measured as column index minus row index."""
    lo, hi = band
    return (-hi, -lo)
