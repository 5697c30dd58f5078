"""Finite-term recurrences for biorthonormal systems under a rank-one kernel condition.

Hypothesis: central polynomials f(x) = sum a_i x^i (degree n) and
g(y) = sum y^j b_j (degree m) with

    sum_i a_i I_{r+i,s} + sum_j I_{r,s+j} b_j = alpha_r beta_s      for all r, s.

For a biorthonormal system define X_{k,l} = <p_k f, q_l>,
Y^T_{k,l} = <p_k, g q_l>, pi_k = sum c_i alpha_i and eta_l = sum beta_i d_i
(c_i, d_i the coefficients of p_k, q_l).  Then X + Y^T = pi eta^T, and

    A   = (Lambda - Id) D_pi^{-1} X          = -(Lambda - Id) D_pi^{-1} Y^T
    B^T = Y^T D_eta^{-1} (Lambda^T - Id)      = -X D_eta^{-1} (Lambda^T - Id)

are banded.  Row k-1 of A and column k-1 of B^T give

    (pi_k^{-1} p_k - pi_{k-1}^{-1} p_{k-1}) f = sum_i A_{k-1,i} p_i,
    g (q_k eta_k^{-1} - q_{k-1} eta_{k-1}^{-1}) = sum_i q_i B^T_{i,k-1},

with i running over k-1-m .. k+n and k-1-n .. k+m respectively (n+m+2 terms).

Bands here use the row-minus-column convention of :mod:`ncbiortho.banded`:
X in [-n, +inf], Y^T in [-inf, m], A in [-(n+1), m], B^T in [-n, m+1].
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from . import banded
from .banded import INF, BandedMatrix
from .biortho import BIORTHONORMAL, BiorthoSystem, build_system, check_generic
from .errors import (
    DegenerateNormalizationError,
    GenericityError,
    InconsistencyError,
    InsufficientBimomentsError,
    RingMismatchError,
)
from .pairing import BimomentTable, pair
from .poly import CentralPoly, LeftPoly, RightPoly, as_central, mul_central, mul_central_right
from .report import Report
from .ring import Ring, inv


@dataclass(frozen=True)
class KernelData:
    f: CentralPoly
    g: CentralPoly
    alpha: tuple
    beta: tuple

    def __post_init__(self):
        f = as_central(self.f, var="x")
        g = as_central(self.g, var="y")
        if f.is_zero() or g.is_zero():
            raise ValueError("f and g must be nonzero")
        if f.ring is not g.ring:
            raise RingMismatchError("f and g must share a ring")
        alpha = tuple(f.ring.check(a) for a in self.alpha)
        beta = tuple(f.ring.check(b) for b in self.beta)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def ring(self) -> Ring:
        return self.f.ring

    @property
    def n(self):
        return self.f.degree()

    @property
    def m(self):
        return self.g.degree()


def operator_size(kd: KernelData, upto):
    """Truncation N of X, Y^T needed to verify the recurrences for k = 1..upto."""
    return upto + max(kd.n, kd.m) + 2


def required_table_shape(kd: KernelData, size):
    """Bimoment rows/cols needed to compute X and Y^T at truncation ``size``."""
    return size + kd.n, size + kd.m


def check_kernel(table: BimomentTable, kd: KernelData, rows, cols) -> Report:
    """Check the kernel condition for r < rows, s < cols."""
    n, m = kd.n, kd.m
    table.require(rows + n, cols + m)
    if len(kd.alpha) < rows or len(kd.beta) < cols:
        raise ValueError(f"alpha/beta must cover {rows}/{cols} indices")
    a, b = kd.f.coeffs, kd.g.coeffs
    ring = table.ring
    report = Report("kernel-condition")
    for r in range(rows):
        for s in range(cols):
            lhs = ring.zero()
            for i, ai in enumerate(a):
                lhs = lhs + ai * table[r + i, s]
            for j, bj in enumerate(b):
                lhs = lhs + table[r, s + j] * bj
            rhs = kd.alpha[r] * kd.beta[s]
            report.checked += 1
            if lhs != rhs:
                report.fail(r=r, s=s, lhs=ring.dump(lhs), rhs=ring.dump(rhs))
    return report


def seed_widths(kd: KernelData, rows, cols):
    """Width each row (n >= 1) must have so the fill reaches rows x cols."""
    n, m = kd.n, kd.m
    need = [cols] * rows
    for r in range(rows - 1, n - 1, -1):
        need[r - n] = max(need[r - n], need[r] + m)
        for i in range(1, n):
            need[r - n + i] = max(need[r - n + i], need[r])
    return need


def synth_kernel(kd: KernelData, seed, rows, cols) -> BimomentTable:
    """Table satisfying the kernel condition, grown from free seed data.

    For deg f = n >= 1 the seed is the first n rows of the table (row r must
    have at least ``seed_widths(kd, rows, cols)[r]`` entries) and later rows
    are solved as I_{r+n,s} = a_n^{-1}(alpha_r beta_s - sum_{i<n} a_i I_{r+i,s}
    - sum_j I_{r,s+j} b_j).  For n = 0 < m the seed is the first m columns
    (given as a list of columns) and columns are solved from the right.  For
    n = m = 0 the table is (a_0 + b_0)^{-1} alpha_r beta_s and ``seed`` is
    ignored.
    """
    ring = kd.ring
    n, m = kd.n, kd.m
    a, b = kd.f.coeffs, kd.g.coeffs
    if n >= 1:
        need = seed_widths(kd, max(rows, n), cols)
        if len(seed) < n:
            raise ValueError(f"need {n} seed rows, got {len(seed)}")
        grid = []
        for r in range(n):
            row = [ring.check(x) for x in seed[r]]
            if len(row) < need[r]:
                raise ValueError(f"seed row {r} needs {need[r]} entries, got {len(row)}")
            grid.append(row[:need[r]])
        if len(kd.alpha) < rows - n or len(kd.beta) < max(need[n:rows], default=0):
            raise ValueError("alpha/beta too short for the requested table")
        lead = inv(a[n])
        for r in range(n, rows):
            base = r - n
            row = []
            for s in range(need[r]):
                acc = kd.alpha[base] * kd.beta[s]
                for i in range(n):
                    acc = acc - a[i] * grid[base + i][s]
                for j in range(m + 1):
                    acc = acc - grid[base][s + j] * b[j]
                row.append(lead * acc)
            grid.append(row)
        return BimomentTable([r[:cols] for r in grid[:rows]], ring)
    if m >= 1:
        columns = [[ring.check(x) for x in c] for c in seed]
        if len(columns) < m or any(len(c) < rows for c in columns[:m]):
            raise ValueError(f"need {m} seed columns of length {rows}")
        if len(kd.alpha) < rows or len(kd.beta) < cols - m:
            raise ValueError("alpha/beta too short for the requested table")
        grid = [[columns[s][r] for s in range(m)] for r in range(rows)]
        lead = inv(b[m])
        for r in range(rows):
            for s in range(cols - m):
                acc = kd.alpha[r] * kd.beta[s] - a[0] * grid[r][s]
                for j in range(m):
                    acc = acc - grid[r][s + j] * b[j]
                grid[r].append(acc * lead)
        return BimomentTable([row[:cols] for row in grid], ring)
    scale = inv(a[0] + b[0])
    return BimomentTable.from_function(ring, rows, cols,
                                       lambda r, s: scale * kd.alpha[r] * kd.beta[s])


def random_seed(kd: KernelData, rows, cols, rng: random.Random, bound=3, den=3):
    """Free data for :func:`synth_kernel`: n seed rows, or m seed columns when n = 0."""
    ring = kd.ring
    if kd.n >= 1:
        widths = seed_widths(kd, max(rows, kd.n), cols)
        return [[ring.random(rng, bound, den) for _ in range(widths[r])] for r in range(kd.n)]
    return [[ring.random(rng, bound, den) for _ in range(rows)] for _ in range(kd.m)]


def synth_generic(kd: KernelData, rows, cols, rng: random.Random, generic_size=None,
                  max_retries=50, bound=3, den=3) -> BimomentTable:
    """:func:`synth_kernel` with random seeds, redrawn until the table is generic."""
    generic_size = min(rows, cols) if generic_size is None else generic_size
    last = None
    for _ in range(max_retries):
        table = synth_kernel(kd, random_seed(kd, rows, cols, rng, bound, den), rows, cols)
        try:
            check_generic(table, generic_size)
        except GenericityError as exc:
            last = exc
            continue
        return table
    raise GenericityError(last.index if last else 0,
                          f"no generic kernel table found in {max_retries} attempts")


def random_kernel_table(kd_shape, ring: Ring, rows, cols, rng: random.Random,
                        generic_size=None, max_retries=50, bound=3, den=3):
    """Random alpha, beta and seed for fixed f, g; returns (KernelData, table).

    ``kd_shape`` is a pair (f, g).  Everything is redrawn until the
    biorthonormal system up to degree ``generic_size - 1`` exists and has
    nonzero pi_k, eta_k, so the recurrence operators are defined.
    """
    f, g = kd_shape
    f, g = as_central(f, ring, "x"), as_central(g, ring, "y")
    probe = KernelData(f, g, (), ())
    width = max(seed_widths(probe, max(rows, probe.n), cols)) if probe.n >= 1 else cols
    last = None
    for _ in range(max_retries):
        alpha = [ring.random(rng, bound, den, nonzero=True) for _ in range(rows)]
        beta = [ring.random(rng, bound, den, nonzero=True) for _ in range(width)]
        kd = KernelData(f, g, alpha, beta)
        try:
            table = synth_generic(kd, rows, cols, rng, generic_size, 1, bound, den)
            size = min(rows, cols) if generic_size is None else generic_size
            compute_pi_eta(build_system(table, size, normalized=True), kd, size)
            return kd, table
        except GenericityError as exc:
            last = exc
        except DegenerateNormalizationError as exc:
            last = GenericityError(exc.index, str(exc))
    raise GenericityError(last.index if last else 0,
                          f"no generic kernel table found in {max_retries} attempts")


def _require_biorthonormal(system: BiorthoSystem, size):
    if system.normalization != BIORTHONORMAL:
        raise ValueError("the recurrence operators need a biorthonormal system")
    if len(system) < size:
        raise ValueError(f"system has {len(system)} polynomials, {size} needed")


def compute_X(system: BiorthoSystem, kd: KernelData, table: BimomentTable, size) -> BandedMatrix:
    """X_{k,l} = <p_k f, q_l>, certified in [-n, +inf]."""
    _require_biorthonormal(system, size)
    n = kd.n
    entries = {}
    for k in range(size):
        pf = mul_central(system.ps[k], kd.f)
        for l in range(min(k + n, size - 1) + 1):
            entries[(k, l)] = pair(pf, system.qs[l], table)
    return BandedMatrix(kd.ring, size, -n, INF, entries)


def compute_Y_T(system: BiorthoSystem, kd: KernelData, table: BimomentTable, size) -> BandedMatrix:
    """Y^T_{k,l} = <p_k, g q_l>, certified in [-inf, m]."""
    _require_biorthonormal(system, size)
    m = kd.m
    entries = {}
    for l in range(size):
        gq = mul_central_right(kd.g, system.qs[l])
        for k in range(min(l + m, size - 1) + 1):
            entries[(k, l)] = pair(system.ps[k], gq, table)
    return BandedMatrix(kd.ring, size, -INF, m, entries)


def expand_left(poly: LeftPoly, basis):
    """Coefficients e with poly = sum e_i basis[i], by peeling leading terms."""
    ring = poly.ring
    out = [ring.zero()] * len(basis)
    rest = poly
    while not rest.is_zero():
        d = rest.degree()
        if d >= len(basis):
            raise InsufficientBimomentsError(d, 0, len(basis), 0)
        c = rest.leading() * inv(basis[d].leading())
        out[d] = c
        rest = rest - basis[d].scale(c)
    return out


def expand_right(poly: RightPoly, basis):
    """Coefficients e with poly = sum basis[i] e_i."""
    ring = poly.ring
    out = [ring.zero()] * len(basis)
    rest = poly
    while not rest.is_zero():
        d = rest.degree()
        if d >= len(basis):
            raise InsufficientBimomentsError(0, d, 0, len(basis))
        c = inv(basis[d].leading()) * rest.leading()
        out[d] = c
        rest = rest - basis[d].scale(c)
    return out


def X_by_expansion(system: BiorthoSystem, kd: KernelData, size):
    """Rows k of X with k + n < len(system), from expanding p_k f in the p-basis."""
    rows = {}
    for k in range(min(size, len(system) - kd.n)):
        coeffs = expand_left(mul_central(system.ps[k], kd.f), system.ps)
        rows[k] = coeffs[:size]
    return rows


def Y_T_by_expansion(system: BiorthoSystem, kd: KernelData, size):
    """Columns l of Y^T with l + m < len(system), from expanding g q_l in the q-basis."""
    cols = {}
    for l in range(min(size, len(system) - kd.m)):
        coeffs = expand_right(mul_central_right(kd.g, system.qs[l]), system.qs)
        cols[l] = coeffs[:size]
    return cols


def compute_pi_eta(system: BiorthoSystem, kd: KernelData, size=None):
    size = len(system) if size is None else size
    if len(kd.alpha) < size or len(kd.beta) < size:
        raise ValueError(f"alpha/beta must cover degrees below {size}")
    ring = kd.ring
    pi, eta = [], []
    for k in range(size):
        s = ring.zero()
        for i, c in enumerate(system.ps[k].coeffs):
            s = s + c * kd.alpha[i]
        if not s:
            raise DegenerateNormalizationError("pi", k)
        pi.append(s)
        t = ring.zero()
        for i, d in enumerate(system.qs[k].coeffs):
            t = t + kd.beta[i] * d
        if not t:
            raise DegenerateNormalizationError("eta", k)
        eta.append(t)
    return pi, eta


def _first_mismatch(x: BandedMatrix, y: BandedMatrix, size):
    for u in range(size):
        for v in range(size):
            if x[u, v] != y[u, v]:
                return (u, v)
    return None


def compute_A_B(X: BandedMatrix, Y_T: BandedMatrix, pi, eta, n=None, m=None):
    """(A, B^T) from both defining forms, cut to the corner where both are exact.

    Raises InconsistencyError if the two forms disagree there or if the
    result leaves the band [-(n+1), m] (for A) or [-n, m+1] (for B^T).
    """
    ring = X.ring
    size = X.trunc
    n = -X.lo if n is None else n
    m = Y_T.hi if m is None else m
    for k, p in enumerate(pi):
        if not p:
            raise DegenerateNormalizationError("pi", k)
    for k, e in enumerate(eta):
        if not e:
            raise DegenerateNormalizationError("eta", k)
    step = banded.shift(ring, size) - banded.identity(ring, size)
    step_t = step.transpose()
    d_pi = banded.diagonal([inv(p) for p in pi[:size]], ring)
    d_eta = banded.diagonal([inv(e) for e in eta[:size]], ring)

    a1 = step @ (d_pi @ X)
    a2 = -(step @ (d_pi @ Y_T))
    b1 = (Y_T @ d_eta) @ step_t
    b2 = -((X @ d_eta) @ step_t)

    exact_a = min(a1.exact, a2.exact)
    exact_b = min(b1.exact, b2.exact)
    bad = _first_mismatch(a1, a2, exact_a)
    if bad:
        raise InconsistencyError(f"the two forms of A differ at {bad}; kernel condition fails?")
    bad = _first_mismatch(b1, b2, exact_b)
    if bad:
        raise InconsistencyError(f"the two forms of B^T differ at {bad}; kernel condition fails?")

    A = banded.restrict(a1, exact_a)
    B_T = banded.restrict(b1, exact_b)
    try:
        A = BandedMatrix(ring, A.trunc, -(n + 1), m, A.entries)
        B_T = BandedMatrix(ring, B_T.trunc, -n, m + 1, B_T.entries)
    except InconsistencyError as exc:
        raise InconsistencyError(f"band theorem violated on the exact region: {exc}") from exc
    return A, B_T


@dataclass(frozen=True)
class RecurrenceOperators:
    X: BandedMatrix
    Y_T: BandedMatrix
    pi: tuple
    eta: tuple
    A: BandedMatrix
    B_T: BandedMatrix

    def verifiable(self, kd: KernelData):
        """Largest K such that rows k = 1..K of both recurrences are fully inside the exact region."""
        return max(0, min(self.A.trunc - kd.n, self.B_T.trunc - kd.m) - 1)


def compute_operators(system: BiorthoSystem, kd: KernelData, table: BimomentTable, size):
    X = compute_X(system, kd, table, size)
    Y_T = compute_Y_T(system, kd, table, size)
    pi, eta = compute_pi_eta(system, kd, size)
    A, B_T = compute_A_B(X, Y_T, pi, eta, kd.n, kd.m)
    return RecurrenceOperators(X, Y_T, tuple(pi), tuple(eta), A, B_T)


def check_rank_one(ops: RecurrenceOperators) -> Report:
    """(X + Y^T)_{k,l} = pi_k eta_l on the whole corner."""
    ring = ops.X.ring
    report = Report("rank-one")
    size = ops.X.trunc
    for k in range(size):
        for l in range(size):
            lhs = ops.X[k, l] + ops.Y_T[k, l]
            rhs = ops.pi[k] * ops.eta[l]
            report.checked += 1
            if lhs != rhs:
                report.fail(k=k, l=l, lhs=ring.dump(lhs), rhs=ring.dump(rhs))
    return report


def check_cross_method(system, kd, ops: RecurrenceOperators) -> Report:
    """X and Y^T by pairing agree with the basis expansions."""
    ring = kd.ring
    size = ops.X.trunc
    report = Report("cross-method")
    for k, row in X_by_expansion(system, kd, size).items():
        for l, c in enumerate(row):
            report.checked += 1
            if ops.X[k, l] != c:
                report.fail(matrix="X", k=k, l=l, pairing=ring.dump(ops.X[k, l]),
                            expansion=ring.dump(c))
    for l, col in Y_T_by_expansion(system, kd, size).items():
        for k, c in enumerate(col):
            report.checked += 1
            if ops.Y_T[k, l] != c:
                report.fail(matrix="Y_T", k=k, l=l, pairing=ring.dump(ops.Y_T[k, l]),
                            expansion=ring.dump(c))
    return report


def check_bands(ops: RecurrenceOperators, kd: KernelData) -> Report:
    """Tightest inferred bands lie inside the theorem's bounds."""
    n, m = kd.n, kd.m
    report = Report("bands")
    expected = {
        "X": (ops.X, (-n, INF)),
        "Y_T": (ops.Y_T, (-INF, m)),
        "A": (ops.A, (-(n + 1), m)),
        "B_T": (ops.B_T, (-n, m + 1)),
    }
    for name, (mat, bound) in expected.items():
        got = banded.inferred_band(mat.entries.items())
        report.checked += 1
        report.data[f"band_{name}"] = [_band_json(x) for x in got]
        if not banded.band_within(got, bound):
            report.fail(matrix=name, inferred=list(map(_band_json, got)),
                        bound=list(map(_band_json, bound)))
    return report


def _band_json(x):
    if x == INF:
        return "+inf"
    if x == -INF:
        return "-inf"
    return int(x)


def verify_recurrence(system: BiorthoSystem, kd: KernelData, ops: RecurrenceOperators, k) -> Report:
    """Both recurrences at row k-1, as exact polynomial identities."""
    n, m = kd.n, kd.m
    ring = kd.ring
    A, B_T = ops.A, ops.B_T
    if k < 1:
        raise ValueError("k must be at least 1")
    if k + n >= A.trunc or k + m >= B_T.trunc:
        raise InsufficientBimomentsError(k + max(n, m), k + max(n, m), A.trunc, B_T.trunc)
    ps, qs, pi, eta = system.ps, system.qs, ops.pi, ops.eta
    report = Report(f"recurrence k={k}")

    lhs = mul_central(ps[k].scale(inv(pi[k])) - ps[k - 1].scale(inv(pi[k - 1])), kd.f)
    rhs = LeftPoly.zero(ring)
    support = A.support(k - 1)
    for i in support:
        rhs = rhs + ps[i].scale(A[k - 1, i])
    report.checked += 1
    if lhs != rhs:
        report.fail(side="p", k=k, residual=str(lhs - rhs))
    report.data["p_terms"] = support
    if support and (min(support) < k - 1 - m or max(support) > k + n):
        report.fail(side="p", k=k, support=support, allowed=[k - 1 - m, k + n])
    if len(support) > n + m + 2:
        report.fail(side="p", k=k, terms=len(support), allowed=n + m + 2)

    lhs = mul_central_right(kd.g, qs[k].scale(inv(eta[k])) - qs[k - 1].scale(inv(eta[k - 1])))
    rhs = RightPoly.zero(ring)
    support = sorted(i for (i, c) in B_T.entries if c == k - 1)
    for i in support:
        rhs = rhs + qs[i].scale(B_T[i, k - 1])
    report.checked += 1
    if lhs != rhs:
        report.fail(side="q", k=k, residual=str(lhs - rhs))
    report.data["q_terms"] = support
    if support and (min(support) < k - 1 - n or max(support) > k + m):
        report.fail(side="q", k=k, support=support, allowed=[k - 1 - n, k + m])
    if len(support) > n + m + 2:
        report.fail(side="q", k=k, terms=len(support), allowed=n + m + 2)
    return report


def run_recurrence(table: BimomentTable, kd: KernelData, upto):
    """Whole pipeline; returns (system, operators, report).

    The report merges the kernel check, rank-one identity, cross-method
    agreement, band bounds and both recurrences for k = 1..upto.
    """
    size = operator_size(kd, upto)
    rows, cols = required_table_shape(kd, size)
    table.require(rows, cols)
    system = build_system(table, size, normalized=True)
    report = Report("recurrence")
    report.data["operator_size"] = size
    report.data["required_table"] = [rows, cols]
    report.merge(check_kernel(table, kd, min(table.rows - kd.n, len(kd.alpha)),
                              min(table.cols - kd.m, len(kd.beta))))
    ops = compute_operators(system, kd, table, size)
    report.merge(check_rank_one(ops))
    report.merge(check_cross_method(system, kd, ops))
    bands = check_bands(ops, kd)
    report.merge(bands)
    report.data.update(bands.data)
    rows_out = []
    for k in range(1, min(upto, ops.verifiable(kd)) + 1):
        r = verify_recurrence(system, kd, ops, k)
        report.merge(r)
        rows_out.append({
            "k": k,
            "status": "PASS" if r.passed else "FAIL",
            "p_terms": r.data["p_terms"],
            "q_terms": r.data["q_terms"],
            "A_row": [kd.ring.dump(ops.A[k - 1, i]) for i in r.data["p_terms"]],
            "B_col": [kd.ring.dump(ops.B_T[i, k - 1]) for i in r.data["q_terms"]],
        })
    report.data["rows"] = rows_out
    report.data["pi"] = [kd.ring.dump(x) for x in ops.pi]
    report.data["eta"] = [kd.ring.dump(x) for x in ops.eta]
    return system, ops, report
