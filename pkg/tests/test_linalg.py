import random
from fractions import Fraction as F

import pytest

from ncbiortho.errors import QuasideterminantUndefinedError, SingularMatrixError
from ncbiortho.linalg import Matrix, det, invert, quasidet, solve, solve_left
from ncbiortho.ring import I, J, Quaternion, Ring

from oracles import cofactor_det, drop

R, Q = Ring.RATIONAL, Ring.QUATERNION


def rat(rows):
    return Matrix([[F(x) for x in r] for r in rows])


def test_invert_small():
    assert invert(rat([[2]])) == rat([[F(1, 2)]])
    assert invert(Matrix.identity(R, 4)) == Matrix.identity(R, 4)
    z = Quaternion()
    m = Matrix([[I, z], [z, J]], Q)
    assert invert(m) == Matrix([[-I, z], [z, -J]], Q)


def test_invert_singular_names_column():
    with pytest.raises(SingularMatrixError) as err:
        invert(rat([[1, 2, 3], [2, 4, 6], [0, 0, 1]]))
    assert err.value.column == 1


def test_invert_twice_is_identity(rng):
    for ring in (R, Q):
        done = 0
        while done < 15:
            n = rng.randint(1, 5)
            m = Matrix([[ring.random(rng) for _ in range(n)] for _ in range(n)], ring)
            try:
                mi = invert(m)
            except SingularMatrixError:
                continue
            assert m @ mi == Matrix.identity(ring, n)
            assert mi @ m == Matrix.identity(ring, n)
            assert invert(mi) == m
            done += 1


def test_solve_and_solve_left(rng):
    m = Matrix([[Q.random(rng, nonzero=True) for _ in range(3)] for _ in range(3)], Q)
    v = [Q.random(rng) for _ in range(3)]
    z = solve(m, v)
    assert m.apply(z) == v
    w = solve_left(v, m)
    assert (Matrix([w], Q) @ m).row(0) == v


def test_quasidet_1x1():
    assert quasidet(Matrix([[I]], Q), 0, 0) == I


def test_quasidet_2x2_corner():
    a, b, c, d = I + Quaternion(1), J, Quaternion(0, 0, 1, 1), Quaternion(2, 0, 1)
    m = Matrix([[a, b], [c, d]], Q)
    assert quasidet(m, 1, 1) == d - c * a.inverse() * b


def test_quasidet_3x3_rational():
    m = rat([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    rows = [list(r) for r in m.entries]
    # det A = -3, det of the (1,1) minor = 2
    assert cofactor_det(rows) == -3 and cofactor_det(drop(rows, 0, 0)) == 2
    assert quasidet(m, 0, 0) == F(-3, 2)


def test_quasidet_undefined():
    m = rat([[5, 1, 1], [1, 1, 1], [1, 1, 1]])
    with pytest.raises(QuasideterminantUndefinedError):
        quasidet(m, 0, 0)


def test_det_examples():
    assert det(rat([[1, 2], [3, 4]])) == -2
    assert det(Matrix.identity(R, 3)) == 1
    with pytest.raises(TypeError):
        det(Matrix.identity(Q, 2))


def test_det_matches_cofactor(rng):
    for _ in range(30):
        rows = [[R.random(rng) for _ in range(4)] for _ in range(4)]
        assert det(Matrix(rows, R)) == cofactor_det(rows)


def test_quasidet_det_ratio(rng):
    for _ in range(40):
        n = rng.randint(2, 5)
        rows = [[R.random(rng) for _ in range(n)] for _ in range(n)]
        m = Matrix(rows, R)
        for i in range(n):
            for j in range(n):
                minor = cofactor_det(drop(rows, i, j))
                if minor == 0:
                    with pytest.raises(QuasideterminantUndefinedError):
                        quasidet(m, i, j)
                    continue
                assert quasidet(m, i, j) == (-1) ** (i + j) * cofactor_det(rows) / minor


def _repeat_column(rows, src, dst):
    return [r[:dst] + [r[src]] + r[dst + 1:] for r in rows]


def test_repeated_lines_vanish_quaternion():
    # boxed column copied from another column, or boxed row copied from another row
    rng = random.Random(3)
    hits = 0
    for _ in range(60):
        n = rng.randint(2, 5)
        rows = [[Q.random(rng) for _ in range(n)] for _ in range(n)]
        i, j = rng.randrange(n), rng.randrange(n)
        src = rng.choice([c for c in range(n) if c != j])
        col_rep = Matrix(_repeat_column(rows, src, j), Q)
        try:
            assert quasidet(col_rep, i, j) == Quaternion()
            hits += 1
        except QuasideterminantUndefinedError:
            pass
        src = rng.choice([r for r in range(n) if r != i])
        row_rep = [list(r) for r in rows]
        row_rep[i] = list(row_rep[src])
        try:
            assert quasidet(Matrix(row_rep, Q), i, j) == Quaternion()
            hits += 1
        except QuasideterminantUndefinedError:
            pass
    assert hits > 60
