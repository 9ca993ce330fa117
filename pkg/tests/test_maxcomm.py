import pytest

from qgt.engine import UqEngine
from qgt.gtsub import d_gen
from qgt.maxcomm import box_monomials, certificate, commutant_in_box


@pytest.fixture(scope="module")
def eng2():
    return UqEngine(2)


def test_box_size(eng2):
    assert len(box_monomials(1)) == 2 * 2 * 3 * 3
    assert len(box_monomials(2)) == 3 * 3 * 5 * 5


def test_commutant_contains_generators(eng2):
    box, index, basis = commutant_in_box(eng2, 1)
    # d_11 = q^2 K_1^{-1} lies in the bound-1 box and must be in the
    # commutant; check by solving for its coordinates among the basis
    d11 = d_gen(eng2, 1, 1)
    coords = [None] * len(box)
    from qgt.scalar import ZERO

    vec = [ZERO] * len(box)
    for (r, lam, k), c in d11.pbw_terms():
        vec[index[(r, lam, k)]] = c
    from qgt.linalg import in_row_span, rref

    red, pivots = rref(basis, len(box))
    assert in_row_span(red, pivots, vec)


def test_certificate_bound_one(eng2):
    rep = certificate(eng2, 1)
    assert rep["equal"]
    assert rep["commutant_dim"] == rep["gamma_dim"] == 18
    assert rep["box_size"] == 36
