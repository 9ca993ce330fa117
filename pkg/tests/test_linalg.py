from qgt.linalg import determinant, nullspace, rank, rref, solve
from qgt.scalar import ONE, Q, ZERO, QScalar


def sc(n):
    return QScalar.from_int(n)


def test_rank_and_rref():
    rows = [[sc(1), sc(2)], [sc(2), sc(4)], [sc(0), sc(1)]]
    assert rank(rows, 2) == 2
    red, pivots = rref(rows, 2)
    assert pivots == [0, 1]


def test_nullspace():
    # x + 2y = 0 has a one-dimensional kernel
    rows = [[sc(1), sc(2)]]
    basis = nullspace(rows, 2, ZERO, ONE)
    assert len(basis) == 1
    v = basis[0]
    assert (v[0] + sc(2) * v[1]).is_zero()


def test_determinant_exact_in_q():
    rows = [[Q, ONE], [ONE, Q]]
    det = determinant(rows)
    assert (det - (Q * Q - ONE)).is_zero()
    singular = [[Q, Q], [Q, Q]]
    assert determinant(singular).is_zero()


def test_solve():
    rows = [[sc(2), sc(1)], [sc(1), sc(3)]]
    rhs = [sc(5), sc(10)]
    x = solve(rows, rhs)
    for row, b in zip(rows, rhs):
        acc = ZERO
        for a, v in zip(row, x):
            acc = acc + a * v
        assert (acc - b).is_zero()
