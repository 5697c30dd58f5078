import random
from fractions import Fraction as F

import pytest

from ncbiortho import banded
from ncbiortho.biortho import build_system, check_generic, random_generic_table
from ncbiortho.errors import DegenerateNormalizationError, GenericityError, InconsistencyError
from ncbiortho.pairing import hankel_table
from ncbiortho.poly import CentralPoly, LeftPoly, RightPoly
from ncbiortho.recurrence import (
    KernelData,
    X_by_expansion,
    check_bands,
    check_cross_method,
    check_kernel,
    check_rank_one,
    compute_A_B,
    compute_operators,
    compute_pi_eta,
    compute_X,
    compute_Y_T,
    operator_size,
    random_kernel_table,
    required_table_shape,
    run_recurrence,
    synth_kernel,
    verify_recurrence,
)
from ncbiortho.ring import Quaternion, Ring

R, Q = Ring.RATIONAL, Ring.QUATERNION


def central(ring, *cs, var="x"):
    return CentralPoly([ring.embed(F(c)) for c in cs], ring, var)


def cauchy(ring, alpha, beta):
    return KernelData(central(ring, 0, 1), central(ring, 0, 1, var="y"), alpha, beta)


def test_alternating_seed_unrolls():
    size = 6
    kd = cauchy(R, [F(0)] * size, [F(0)] * (2 * size))
    seed = [[F((-1) ** s) for s in range(2 * size)]]
    t = synth_kernel(kd, seed, size, size)
    # oracle: I_{r+1,s} = -I_{r,s+1} unrolled from row 0
    for r in range(size):
        for s in range(size):
            assert t[r, s] == (-1) ** r * seed[0][r + s]
            assert t[r, s] == (-1) ** s
    assert check_kernel(t, kd, size - 1, size - 1).passed


def test_hankel_fails_cauchy_condition():
    zero = [F(0)] * 3
    kd = cauchy(R, zero, zero)
    bad = hankel_table([F(x) for x in (1, 1, 2, 3, 5)], 3)
    report = check_kernel(bad, kd, 2, 2)
    assert not report.passed
    assert report.violations[0]["r"] == 0 and report.violations[0]["s"] == 0
    # 2 S_{r+s+1} = 0 at every r + s + 1 >= 1 leaves only S_0
    good = hankel_table([F(x) for x in (1, 0, 0, 0, 0)], 3)
    assert check_kernel(good, kd, 2, 2).passed
    gaussian = hankel_table([F(x) for x in (1, 0, 1, 0, 3)], 3)
    assert [(v["r"], v["s"]) for v in check_kernel(gaussian, kd, 2, 2).violations] == [(0, 1), (1, 0)]


@pytest.mark.parametrize("shape", [((0, 1), (0, 1)), ((1, 0, 1), (0, 1)), ((2, 1), (1, 1, 3))])
def test_synthesized_tables_pass_check(shape, rng):
    fc, gc = shape
    f, g = central(R, *fc), central(R, *gc, var="y")
    kd, t = random_kernel_table((f, g), R, 9, 9, rng, generic_size=4)
    assert check_kernel(t, kd, 9 - kd.n, 9 - kd.m).passed
    check_generic(t, 4)


def test_f_one_gives_identity(rng):
    t = random_generic_table(R, 5, rng)
    kd = KernelData(central(R, 1), central(R, 1, var="y"), [F(1)] * 5, [F(1)] * 5)
    sys = build_system(t, 5, normalized=True)
    x = compute_X(sys, kd, t, 5)
    assert x.to_dense() == banded.identity(R, 5).to_dense()


def test_first_row_of_X_for_gaussian_moments():
    t = hankel_table([F(x) for x in (1, 0, 1, 0, 3, 0, 15)], 4)
    kd = KernelData(central(R, 0, 1), central(R, 0, 1, var="y"), [F(0)] * 4, [F(0)] * 4)
    sys = build_system(t, 4, normalized=True)
    assert sys.ps[1] == LeftPoly([F(0), F(1)])
    x = compute_X(sys, kd, t, 3)
    assert x.row(0) == [0, 1, 0]
    # oracle: expanding x * p_0 = p_1 in the p-basis
    assert X_by_expansion(sys, kd, 3)[0] == [0, 1, 0]


def test_pi_is_value_at_one(rng):
    t = random_generic_table(R, 5, rng)
    kd = KernelData(central(R, 0, 1), central(R, 0, 1, var="y"), [F(1)] * 5, [F(1)] * 5)
    sys = build_system(t, 5, normalized=True)
    pi, eta = compute_pi_eta(sys, kd)
    assert pi == [sum(p.coeffs) for p in sys.ps]
    assert eta == [sum(q.coeffs) for q in sys.qs]
    assert pi[0] == 1 / t[0, 0]


def test_zero_pi_is_an_error(rng):
    t = random_generic_table(R, 3, rng)
    kd = KernelData(central(R, 0, 1), central(R, 0, 1, var="y"), [F(0), F(1), F(1)], [F(1)] * 3)
    sys = build_system(t, 3, normalized=True)
    with pytest.raises(DegenerateNormalizationError) as err:
        compute_pi_eta(sys, kd)
    assert err.value.index == 0


@pytest.mark.parametrize("ring,fc,gc", [
    (R, (0, 1), (0, 1)),
    (R, (1, 2, 1), (3, 1)),
    (R, (2, 1), (0, 1, 1)),
    (Q, (0, 1), (1, 1)),
])
def test_operators_on_synthesized_tables(ring, fc, gc):
    rng = random.Random(17)
    f, g = central(ring, *fc), central(ring, *gc, var="y")
    upto = 4
    probe = KernelData(f, g, (), ())
    size = operator_size(probe, upto)
    rows, cols = required_table_shape(probe, size)
    kd, t = random_kernel_table((f, g), ring, rows, cols, rng, generic_size=size)
    sys = build_system(t, size, normalized=True)
    ops = compute_operators(sys, kd, t, size)
    assert check_rank_one(ops).passed
    assert check_cross_method(sys, kd, ops).passed
    assert check_bands(ops, kd).passed
    n, m = kd.n, kd.m
    assert ops.A.band == (-(n + 1), m) and ops.B_T.band == (-n, m + 1)
    assert ops.verifiable(kd) >= upto
    for k in range(1, upto + 1):
        report = verify_recurrence(sys, kd, ops, k)
        assert report.passed, report.violations
        assert len(report.data["p_terms"]) <= n + m + 2
        assert len(report.data["q_terms"]) <= n + m + 2


def test_two_forms_of_A_agree_and_violations_are_caught():
    rng = random.Random(4)
    f, g = central(R, 0, 1), central(R, 0, 1, var="y")
    kd, t = random_kernel_table((f, g), R, 8, 8, rng, generic_size=7)
    sys = build_system(t, 7, normalized=True)
    x, y_t = compute_X(sys, kd, t, 7), compute_Y_T(sys, kd, t, 7)
    pi, eta = compute_pi_eta(sys, kd, 7)
    a, _ = compute_A_B(x, y_t, pi, eta, 1, 1)
    step = banded.shift(R, 7) - banded.identity(R, 7)
    d_pi = banded.diagonal([1 / p for p in pi], R)
    other = -(step @ (d_pi @ y_t))
    assert all(a[u, v] == other[u, v] for u in range(a.trunc) for v in range(a.trunc))

    # break the kernel condition deep in the table: the pipeline must notice
    broken = t.replace(3, 2, t[3, 2] + 1)
    sys = build_system(broken, 7, normalized=True)
    x, y_t = compute_X(sys, kd, broken, 7), compute_Y_T(sys, kd, broken, 7)
    pi, eta = compute_pi_eta(sys, kd, 7)
    with pytest.raises(InconsistencyError):
        compute_A_B(x, y_t, pi, eta, 1, 1)


def test_run_recurrence_report():
    rng = random.Random(8)
    f, g = central(R, 0, 1), central(R, 0, 1, var="y")
    probe = KernelData(f, g, (), ())
    size = operator_size(probe, 3)
    rows, cols = required_table_shape(probe, size)
    kd, t = random_kernel_table((f, g), R, rows, cols, rng, generic_size=size)
    _, _, report = run_recurrence(t, kd, 3)
    assert report.passed
    assert [r["k"] for r in report.data["rows"]] == [1, 2, 3]
    assert all(len(r["p_terms"]) <= 4 for r in report.data["rows"])
    assert report.data["required_table"] == [rows, cols]


def test_constant_kernels_force_rank_one_tables():
    # n = m = 0: (a_0 + b_0) I_{r,s} = alpha_r beta_s, so the table has rank one
    kd = KernelData(central(R, 1), central(R, 1, var="y"), [F(1), F(2), F(3)], [F(2), F(5), F(1)])
    t = synth_kernel(kd, [], 3, 3)
    assert check_kernel(t, kd, 3, 3).passed
    assert t[1, 2] == F(2 * 1, 2)
    check_generic(t, 1)
    with pytest.raises(GenericityError) as err:
        check_generic(t, 2)
    assert err.value.index == 1
    # at degree 0 the two-term identity reduces to X + Y^T = pi eta
    sys = build_system(t, 1, normalized=True)
    x, y_t = compute_X(sys, kd, t, 1), compute_Y_T(sys, kd, t, 1)
    pi, eta = compute_pi_eta(sys, kd, 1)
    assert x[0, 0] + y_t[0, 0] == pi[0] * eta[0] == 2


def test_quaternion_right_scaling_matters():
    # q-side coefficients attach on the right: check a hand-built right expansion
    q = RightPoly([Quaternion(0, 1), Quaternion(0, 0, 1)], Q)
    c = Quaternion(0, 0, 0, 1)
    assert q.scale(c) != RightPoly([c * x for x in q.coeffs], Q)
