"""Bimoments from prescribed polynomial sequences.

Given p_0, p_1, ... (left coefficients) and q_0, q_1, ... (right
coefficients) with deg p_n = deg q_n = n, and targets c_k, there is exactly
one table I with

    <x^a, q_b> = 0   (a < b),   <p_a, y^b> = 0   (a > b),   <p_a, q_a> = c_a.

The table is filled along anti-diagonals a + b = 0, 1, 2, ...; on each cell
the relevant equation has a single unknown, I_{a,b}, multiplied by leading
coefficients on known sides.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DegreeError, RingMismatchError
from .pairing import BimomentTable, pair
from .poly import LeftPoly, RightPoly
from .report import Report
from .ring import Ring, inv


@dataclass(frozen=True)
class FavardInput:
    ps: tuple
    qs: tuple
    cs: tuple

    def __post_init__(self):
        ps, qs, cs = tuple(self.ps), tuple(self.qs), tuple(self.cs)
        if not ps:
            raise ValueError("at least p_0 and q_0 are required")
        ring = ps[0].ring
        for n, p in enumerate(ps):
            if not isinstance(p, LeftPoly) or p.ring is not ring:
                raise RingMismatchError(f"p_{n} is not a LeftPoly over {ring.value}")
            if p.is_zero() or p.degree() != n:
                raise DegreeError(f"p_{n} must have degree {n}")
        for n, q in enumerate(qs):
            if not isinstance(q, RightPoly) or q.ring is not ring:
                raise RingMismatchError(f"q_{n} is not a RightPoly over {ring.value}")
            if q.is_zero() or q.degree() != n:
                raise DegreeError(f"q_{n} must have degree {n}")
        object.__setattr__(self, "ps", ps)
        object.__setattr__(self, "qs", qs)
        object.__setattr__(self, "cs", tuple(ring.check(c) for c in cs))

    @property
    def ring(self) -> Ring:
        return self.ps[0].ring

    @classmethod
    def with_unit_targets(cls, ps, qs):
        ring = ps[0].ring
        return cls(ps, qs, [ring.one()] * len(ps))


def _check_size(inp: FavardInput, size):
    if size < 1:
        raise ValueError("size must be at least 1")
    if min(len(inp.ps), len(inp.qs), len(inp.cs)) < size:
        raise ValueError(
            f"size {size} needs p_0..p_{size - 1}, q_0..q_{size - 1} and c_0..c_{size - 1}"
        )


def favard_bimoments(inp: FavardInput, size) -> BimomentTable:
    """The unique size x size table making (ps, qs) biorthogonal with <p_k, q_k> = c_k."""
    _check_size(inp, size)
    ring = inp.ring
    zero = ring.zero()
    grid = [[None] * size for _ in range(size)]
    for diag in range(2 * size - 1):
        for a in range(max(0, diag - size + 1), min(diag, size - 1) + 1):
            b = diag - a
            if a < b:
                # <x^a, q_b> = sum_j I_{a,j} d_j = 0
                d = inp.qs[b].coeffs
                acc = zero
                for j in range(b):
                    acc = acc + grid[a][j] * d[j]
                grid[a][b] = -acc * inv(d[b])
            elif a > b:
                # <p_a, y^b> = sum_i c_i I_{i,b} = 0
                c = inp.ps[a].coeffs
                acc = zero
                for i in range(a):
                    acc = acc + c[i] * grid[i][b]
                grid[a][b] = -inv(c[a]) * acc
            else:
                # <p_a, q_a> = c_a, unknown sandwiched between leading coefficients
                c = inp.ps[a].coeffs
                d = inp.qs[a].coeffs
                acc = zero
                for i in range(a + 1):
                    for j in range(a + 1):
                        if i == a and j == a:
                            continue
                        acc = acc + c[i] * grid[i][j] * d[j]
                grid[a][a] = inv(c[a]) * (inp.cs[a] - acc) * inv(d[a])
    return BimomentTable(grid, ring)


def favard_verify(inp: FavardInput, table: BimomentTable, size) -> Report:
    """Check the three families of conditions for a, b < size."""
    _check_size(inp, size)
    table.require(size, size)
    ring = inp.ring
    report = Report("favard")
    for a in range(size):
        for b in range(size):
            report.checked += 1
            if a < b:
                v = pair(LeftPoly.monomial(ring, a), inp.qs[b], table)
                if v:
                    report.fail(condition=1, a=a, b=b, value=ring.dump(v))
            elif a > b:
                v = pair(inp.ps[a], RightPoly.monomial(ring, b), table)
                if v:
                    report.fail(condition=2, a=a, b=b, value=ring.dump(v))
            else:
                v = pair(inp.ps[a], inp.qs[a], table)
                if v != inp.cs[a]:
                    report.fail(condition=3, a=a, b=b, value=ring.dump(v),
                                expected=ring.dump(inp.cs[a]))
    return report


def random_graded(ring: Ring, size, rng: random.Random, bound=3, den=3):
    """Random (ps, qs, cs) with deg p_n = deg q_n = n and invertible c_k."""
    def poly(cls, n):
        coeffs = [ring.random(rng, bound, den) for _ in range(n)]
        coeffs.append(ring.random(rng, bound, den, nonzero=True))
        return cls(coeffs, ring)

    ps = [poly(LeftPoly, n) for n in range(size)]
    qs = [poly(RightPoly, n) for n in range(size)]
    cs = [ring.random(rng, bound, den, nonzero=True) for _ in range(size)]
    return FavardInput(ps, qs, cs)
