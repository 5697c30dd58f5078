from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncbiortho.errors import CentralityError, DegreeError, RingMismatchError
from ncbiortho.poly import (
    CentralPoly,
    LeftPoly,
    RightPoly,
    degree,
    leading,
    mul_central,
    mul_central_right,
    scale_left,
    scale_right,
)
from ncbiortho.ring import I, J, K, Quaternion, Ring

from conftest import small_fractions

Q = Ring.QUATERNION
R = Ring.RATIONAL
ONE = Quaternion(1)


def test_scale_left_units():
    p = LeftPoly([J, ONE], Q)  # x + j
    assert scale_left(I, p) == LeftPoly([K, I], Q)


def test_scale_left_by_zero():
    assert scale_left(F(0), LeftPoly.monomial(R, 3)).is_zero()


def test_scale_right_units():
    q = RightPoly([Quaternion(), I], Q)  # y i
    assert scale_right(q, J) == RightPoly([Quaternion(), K], Q)


def test_scale_side_matters():
    p = LeftPoly([Quaternion(), J], Q)
    assert scale_left(I, p).coeffs[1] == K
    q = RightPoly([Quaternion(), J], Q)
    assert scale_right(q, I).coeffs[1] == -K


def test_mul_central_examples():
    assert mul_central(LeftPoly([F(1), F(1)]), CentralPoly([F(0), F(1)])) == LeftPoly([F(0), F(1), F(1)])
    two = Quaternion(2)
    got = mul_central(LeftPoly([Quaternion(), I], Q), CentralPoly([ONE, two], Q))
    # i x (2x + 1) = 2i x^2 + i x, expanded term by term
    assert got == LeftPoly([Quaternion(), I, Quaternion(0, 2)], Q)
    p = LeftPoly([J, K, I], Q)
    assert mul_central(p, CentralPoly([ONE], Q)) == p


def test_mul_central_right():
    q = RightPoly([J, I], Q)  # y i + j
    got = mul_central_right(CentralPoly([Quaternion(), Quaternion(3)], Q, "y"), q)
    assert got == RightPoly([Quaternion(), Quaternion(0, 0, 3), Quaternion(0, 3)], Q)


def test_noncentral_rejected():
    with pytest.raises(CentralityError):
        CentralPoly([ONE, I], Q)
    with pytest.raises(CentralityError):
        mul_central(LeftPoly([ONE], Q), LeftPoly([I], Q))


def test_degree_and_leading():
    assert degree(LeftPoly([F(1), F(0), F(0), F(1)])) == 3
    assert leading(RightPoly([Quaternion(), ONE, K], Q)) == K
    with pytest.raises(DegreeError):
        degree(LeftPoly.zero(R))
    with pytest.raises(DegreeError):
        leading(RightPoly.zero(Q))


def test_trailing_zeros_trimmed():
    assert LeftPoly([F(1), F(0), F(0)]).degree() == 0


def test_mixed_ring_rejected():
    with pytest.raises(RingMismatchError):
        LeftPoly([F(1)]) + LeftPoly([ONE])
    with pytest.raises(RingMismatchError):
        LeftPoly([F(1)]) + RightPoly([F(1)])


coeff_lists = st.lists(small_fractions(), min_size=1, max_size=5)


@given(coeff_lists, st.integers(0, 4))
def test_multiplying_by_monomial_shifts(cs, s):
    p = LeftPoly(cs, R)
    f = CentralPoly([F(0)] * s + [F(1)], R)
    got = mul_central(p, f)
    assert got.coeffs == ((F(0),) * s + p.coeffs if not p.is_zero() else ())


@given(coeff_lists, coeff_lists, coeff_lists)
def test_associativity_through_center(cs, fs, gs):
    p = LeftPoly(cs, R)
    f, g = CentralPoly(fs, R), CentralPoly(gs, R)
    assert mul_central(mul_central(p, f), g) == mul_central(p, f * g)


def test_quaternion_associativity_through_center(rng):
    for _ in range(50):
        p = LeftPoly([Q.random(rng) for _ in range(4)], Q)
        f = CentralPoly([Quaternion(Q.random(rng).a) for _ in range(3)], Q)
        g = CentralPoly([Quaternion(Q.random(rng).a) for _ in range(2)], Q)
        assert mul_central(mul_central(p, f), g) == mul_central(p, f * g)


def test_str_forms():
    assert str(LeftPoly([F(-1, 2), F(0), F(1, 2)])) == "(1/2)*x^2 - 1/2"
    assert str(RightPoly([F(0), F(-3), F(1)])) == "y^2 - y*3"
