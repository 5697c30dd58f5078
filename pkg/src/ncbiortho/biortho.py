"""Biorthogonal polynomials built from a bimoment table by quasideterminants.

For n >= 1 let M_n be the n x n block of bimoments with rows a = n-1, ..., 0
and columns b = 0, ..., n-1.  Expanding the boxed corner of the displayed
quasideterminants gives

    p_n(x) = x^n - [I_{n,0} .. I_{n,n-1}] M_n^{-1} [x^{n-1} .. 1]^T
    q_n(y) = y^n - [1 .. y^{n-1}] M_n^{-1} [I_{n-1,n} .. I_{0,n}]^T

so only the scalar block M_n is ever inverted.  The biorthonormal variant
left-multiplies p_n by the inverse of the corner quasideterminant of the full
(n+1) x (n+1) block, which equals <p_n, q_n>.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple

from .errors import GenericityError, SingularMatrixError
from .linalg import Matrix, QuasideterminantUndefinedError, quasidet, solve, solve_left
from .pairing import BimomentTable, pair
from .poly import LeftPoly, RightPoly, scale_left
from .report import Report
from .ring import Ring, inv

MONIC = "monic"
BIORTHONORMAL = "biorthonormal"


class Power(NamedTuple):
    """Placeholder for a power of the indeterminate inside a displayed matrix."""

    var: str
    exp: int

    def __str__(self):
        return f"{self.var}^{self.exp}"


def _need(table, rows, cols):
    table.require(rows, cols)


def p_matrix(table: BimomentTable, n):
    """Rows a = n..0 of [I_{a,0} .. I_{a,n-1} | x^a], as displayed."""
    _need(table, n + 1, n)
    return [[table[a, b] for b in range(n)] + [Power("x", a)] for a in range(n, -1, -1)]


def q_matrix(table: BimomentTable, n):
    """[1, y, .., y^n] on top of rows a = n-1..0 of [I_{a,0} .. I_{a,n}]."""
    _need(table, n, n + 1)
    top = [Power("y", b) for b in range(n + 1)]
    return [top] + [[table[a, b] for b in range(n + 1)] for a in range(n - 1, -1, -1)]


def moment_block(table: BimomentTable, n, cols=None):
    """Rows a = n-1..0, columns b = 0..cols-1 (default n)."""
    cols = n if cols is None else cols
    return Matrix([[table[a, b] for b in range(cols)] for a in range(n - 1, -1, -1)], table.ring)


def build_p(table: BimomentTable, n) -> LeftPoly:
    """Monic p_n of degree n."""
    ring = table.ring
    if n == 0:
        return LeftPoly.constant(ring.one(), ring)
    _need(table, n + 1, n)
    block = moment_block(table, n)
    top = [table[n, b] for b in range(n)]
    try:
        w = solve_left(top, block)
    except SingularMatrixError as exc:
        raise GenericityError(n, "moment block for p_n is singular") from exc
    # w[k] multiplies x^(n-1-k)
    coeffs = [-w[n - 1 - e] for e in range(n)] + [ring.one()]
    return LeftPoly(coeffs, ring)


def build_q(table: BimomentTable, n) -> RightPoly:
    """Monic q_n of degree n (coefficients on the right)."""
    ring = table.ring
    if n == 0:
        return RightPoly.constant(ring.one(), ring)
    _need(table, n, n + 1)
    block = moment_block(table, n)
    col = [table[a, n] for a in range(n - 1, -1, -1)]
    try:
        v = solve(block, col)
    except SingularMatrixError as exc:
        raise GenericityError(n, "moment block for q_n is singular") from exc
    return RightPoly([-x for x in v] + [ring.one()], ring)


def normalizer(table: BimomentTable, n):
    """Corner quasideterminant |J|_{1,n+1} of the full (n+1) x (n+1) block."""
    _need(table, n + 1, n + 1)
    full = moment_block(table, n + 1)
    try:
        h = quasidet(full, 0, n)
    except QuasideterminantUndefinedError as exc:
        raise GenericityError(n, "normalizing quasideterminant does not exist") from exc
    if not h:
        raise GenericityError(n, "normalizing quasideterminant is zero")
    return h


def build_p_normalized(table: BimomentTable, n) -> LeftPoly:
    """p_n scaled on the left so that <p_n, q_n> = 1."""
    return scale_left(inv(normalizer(table, n)), build_p(table, n))


@dataclass(frozen=True)
class BiorthoSystem:
    ps: tuple
    qs: tuple
    normalization: str = MONIC
    table: BimomentTable | None = None

    def __post_init__(self):
        if self.normalization not in (MONIC, BIORTHONORMAL):
            raise ValueError(f"unknown normalization {self.normalization!r}")
        if len(self.ps) != len(self.qs):
            raise ValueError("ps and qs must have the same length")
        object.__setattr__(self, "ps", tuple(self.ps))
        object.__setattr__(self, "qs", tuple(self.qs))

    @property
    def ring(self) -> Ring:
        return self.ps[0].ring

    def __len__(self):
        return len(self.ps)


def build_system(table: BimomentTable, size, normalized=False) -> BiorthoSystem:
    """p_0..p_{size-1} and q_0..q_{size-1}."""
    if size < 1:
        raise ValueError("size must be at least 1")
    table.require(size, size)
    build = build_p_normalized if normalized else build_p
    ps = [build(table, n) for n in range(size)]
    qs = [build_q(table, n) for n in range(size)]
    return BiorthoSystem(ps, qs, BIORTHONORMAL if normalized else MONIC, table)


def verify_biortho(system: BiorthoSystem, table: BimomentTable, size=None) -> Report:
    """Full Gram array check."""
    size = len(system) if size is None else size
    ring = table.ring
    report = Report("biorthogonality")
    gram = []
    for n in range(size):
        row = []
        for m in range(size):
            g = pair(system.ps[n], system.qs[m], table)
            row.append(g)
            report.checked += 1
            if n != m and g:
                report.fail(kind="off-diagonal", n=n, m=m, value=ring.dump(g))
            elif n == m and system.normalization == BIORTHONORMAL and g != ring.one():
                report.fail(kind="diagonal-not-one", n=n, m=m, value=ring.dump(g))
            elif n == m and not g:
                report.fail(kind="diagonal-zero", n=n, m=m, value=ring.dump(g))
        gram.append(row)
    report.data["gram"] = [[ring.dump(g) for g in row] for row in gram]
    return report


def verify_lemma(system: BiorthoSystem, table: BimomentTable) -> Report:
    """<x^i, q_n> = 0 and <p_n, y^i> = 0 for every i < n."""
    ring = table.ring
    report = Report("lemma")
    for n in range(len(system)):
        for i in range(n):
            left = pair(LeftPoly.monomial(ring, i), system.qs[n], table)
            right = pair(system.ps[n], RightPoly.monomial(ring, i), table)
            report.checked += 2
            if left:
                report.fail(kind="x^i vs q_n", i=i, n=n, value=ring.dump(left))
            if right:
                report.fail(kind="p_n vs y^i", i=i, n=n, value=ring.dump(right))
    return report


def check_generic(table: BimomentTable, size):
    """Raise GenericityError unless the normalized system up to size-1 exists."""
    for n in range(size):
        normalizer(table, n)


def random_table(ring: Ring, rows, cols, rng: random.Random, bound=3, den=3):
    return BimomentTable.from_function(
        ring, rows, cols, lambda a, b: ring.random(rng, bound, den)
    )


def random_generic_table(ring: Ring, size, rng: random.Random, rows=None, cols=None,
                         max_retries=50, bound=3, den=3) -> BimomentTable:
    """Random table whose biorthonormal system exists up to degree size-1."""
    rows = size if rows is None else rows
    cols = size if cols is None else cols
    last = None
    for _ in range(max_retries):
        table = random_table(ring, rows, cols, rng, bound, den)
        try:
            check_generic(table, size)
        except GenericityError as exc:
            last = exc
            continue
        return table
    raise GenericityError(last.index if last else 0,
                          f"no generic table found in {max_retries} attempts")
