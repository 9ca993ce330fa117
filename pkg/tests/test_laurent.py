import pytest

from qgt.laurent import LaurentRing, RatFun
from qgt.scalar import ONE, QScalar


@pytest.fixture
def ring():
    return LaurentRing(["x", "y"])


def test_basic_arithmetic(ring):
    x, y = ring.gen("x"), ring.gen("y")
    p = (x + y) * (x - y)
    assert (p - (x * x - y * y)).is_zero()
    assert (p * ring.zero).is_zero()
    assert (p * ring.one - p).is_zero()


def test_negative_exponents(ring):
    xinv = ring.monomial((-1, 0))
    x = ring.gen("x")
    assert (x * xinv - ring.one).is_zero()


def test_substitute(ring):
    x, y = ring.gen("x"), ring.gen("y")
    p = x * x + y.scale(QScalar.from_int(3))
    v = p.substitute([QScalar.from_int(2), QScalar.q_power(1)])
    expected = QScalar.from_int(4) + QScalar.from_int(3) * QScalar.q_power(1)
    assert (v - expected).is_zero()


def test_monomial_unit_inverse(ring):
    m = ring.monomial((2, -1), QScalar.q_power(3))
    assert (m * m.monomial_unit_inverse() - ring.one).is_zero()


def test_scale_and_coefficient(ring):
    x = ring.gen("x")
    p = x.scale(QScalar.from_int(5))
    assert (p.coefficient((1, 0)) - QScalar.from_int(5)).is_zero()


def test_ratfun_arithmetic(ring):
    x, y = ring.gen("x"), ring.gen("y")
    a = RatFun(x, y)
    b = RatFun(y, x)
    assert (a * b - RatFun(ring.one)).is_zero()
    s = a + b
    # x/y + y/x = (x^2 + y^2)/(xy)
    expected = RatFun(x * x + y * y, x * y)
    assert (s - expected).is_zero()
    assert s == expected


def test_ratfun_inverse(ring):
    x, y = ring.gen("x"), ring.gen("y")
    a = RatFun(x + y, x)
    assert (a * a.inv() - RatFun(ring.one)).is_zero()
