from itertools import permutations

import pytest

from qgt.dck import (
    DegreeVector,
    admissible_terms,
    brute_force_leading_perm,
    element_degree,
    gr_multiply,
    gr_of_pbw,
    leading_term,
    perm_stats,
    perm_term_degree,
    term_admissible,
    theorem_perm,
    verify_lt_theorem,
)
from qgt.engine import UqEngine
from qgt.gtsub import d_gen
from qgt.scalar import ONE


@pytest.fixture(scope="module")
def eng3():
    return UqEngine(3)


def test_degree_order_is_lexicographic():
    a = DegreeVector(2, (0, 1, 0), (0, 0, 0))
    b = DegreeVector(1, (5, 5, 5), (9, 9, 9))
    assert a > b
    c = DegreeVector(2, (1, 0, 0), (0, 0, 0))
    assert c > a


def test_theorem_perm_is_cycle_power():
    assert theorem_perm(3, 1) == (2, 3, 1)
    assert theorem_perm(3, 2) == (3, 1, 2)
    assert theorem_perm(4, 4) == (1, 2, 3, 4)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_leading_term_theorem(n):
    rep = verify_lt_theorem(UqEngine(n))
    assert rep["ok"]
    for p in rep["pairs"]:
        assert p["theorem_perm"] == p["oracle_perm"]


def test_oracle_independent_of_engine(eng3):
    # the brute-force argmax only reads index data, never products
    for r in (1, 2, 3):
        for s in range(1, r + 1):
            assert brute_force_leading_perm(eng3, r, s) == theorem_perm(r, s)


@pytest.mark.parametrize("r", range(1, 8))
def test_height_lemma(r):
    # over admissible permutations the maximal height is 2s(r-s)
    perms = [perm_stats(sigma) for sigma in permutations(range(1, r + 1))]
    for s in range(0, r + 1):
        adm = [p for p in perms if p.c_less <= s and p.c_greater <= r - s]
        assert adm, (r, s)
        assert max(p.ht for p in adm) == 2 * s * (r - s)


@pytest.mark.parametrize("r", range(2, 8))
def test_derangement_lemma(r):
    # every degree-maximal admissible permutation is a derangement
    # (for 0 < s < r; at the endpoints only the identity is admissible)
    eng = UqEngine(r)
    for s in range(1, r):
        adm = [
            sigma
            for sigma in permutations(range(1, r + 1))
            if term_admissible(sigma, s, r)
        ]
        degs = [(perm_term_degree(eng, sigma, s), sigma) for sigma in adm]
        top = max(d for d, _ in degs)
        assert top.ht == 2 * s * (r - s)
        for d, sigma in degs:
            if d == top:
                assert perm_stats(sigma).derangement, (r, s, sigma)


def test_admissible_terms_k_budget():
    for sigma, k in admissible_terms(3, 2):
        st = perm_stats(sigma)
        assert term_admissible(sigma, 2, 3)
        assert sum(k) == 2
        for j, v in enumerate(sigma, start=1):
            if v < j:
                assert k[j - 1] == 1
            elif v > j:
                assert k[j - 1] == 0


def test_leading_term_unique(eng3):
    pbw, coeff = leading_term(d_gen(eng3, 3, 1))
    assert not coeff.is_zero()
    deg = element_degree(d_gen(eng3, 3, 1))
    assert deg.ht == 2 * 1 * (3 - 1)


def test_gr_multiply_exponent_additivity(eng3):
    x = gr_of_pbw(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    y = gr_of_pbw(((0, 1, 0), (1, 0, 0), (1, 0, 0)))
    z = gr_multiply(eng3, x, y)
    assert z.rdeg == (1, 1, 0)
    assert z.alpha == (1, 1, 0)
    assert z.kdeg == (1, 0, 1)


def test_gr_multiply_associative(eng3):
    x = gr_of_pbw(((1, 0, 0), (0, 0, 0), (0, 0, 0)))
    y = gr_of_pbw(((0, 0, 0), (1, -1, 0), (0, 1, 0)))
    z = gr_of_pbw(((0, 1, 0), (0, 0, 1), (1, 0, 0)))
    a = gr_multiply(eng3, gr_multiply(eng3, x, y), z)
    b = gr_multiply(eng3, x, gr_multiply(eng3, y, z))
    assert a.rdeg == b.rdeg and a.alpha == b.alpha and a.kdeg == b.kdeg
    assert (a.coeff - b.coeff).is_zero()


def test_gr_q_commutation_against_engine(eng3):
    # exchanging two root vectors multiplies the leading coefficient by the
    # same q-power in the engine and in the graded algebra
    cases = [
        (eng3.Ebeta(1, 2), eng3.Ebeta(2, 3),
         ((0,) * 3, (0,) * 3, (1, 0, 0)), ((0,) * 3, (0,) * 3, (0, 0, 1))),
        (eng3.Fbeta(1, 2), eng3.Fbeta(1, 3),
         ((1, 0, 0), (0,) * 3, (0,) * 3), ((0, 1, 0), (0,) * 3, (0,) * 3)),
        (eng3.K(1), eng3.Ebeta(1, 3),
         ((0,) * 3, (1, 0, 0), (0,) * 3), ((0,) * 3, (0,) * 3, (0, 1, 0))),
    ]
    for a, b, xm, ym in cases:
        _, ca = leading_term(a * b)
        pbw_b, cb = leading_term(b * a)
        assert leading_term(a * b)[0] == pbw_b
        gxy = gr_multiply(eng3, gr_of_pbw(xm), gr_of_pbw(ym))
        gyx = gr_multiply(eng3, gr_of_pbw(ym), gr_of_pbw(xm))
        assert (ca * cb.inv() - gxy.coeff * gyx.coeff.inv()).is_zero()
