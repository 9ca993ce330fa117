import random

import pytest

from qgt.engine import UqEngine
from qgt.gl2gwa import (
    GWA,
    GTCharacter,
    GWAElement,
    GWAGens,
    break_points,
    fiber_gl2,
    module_action_check,
    orbit_values,
    pbw_to_gwa,
    sample_characters,
    tau_value,
    uq2_iso_check,
)
from qgt.gtsub import d_gen
from qgt.scalar import ONE, ZERO, QScalar


@pytest.fixture(scope="module")
def gwa():
    return GWA()


def test_defining_relations_hold():
    assert uq2_iso_check()["ok"]


def test_step_generators(gwa):
    gens = GWAGens(gwa)
    xm, xp = gens.F(1), gens.E(1)
    t = GWAElement.from_poly(gwa, gwa.ring.gen("t"))
    sigma_t = GWAElement.from_poly(gwa, gwa.ring.gen("t") + gwa.t_shift(1))
    assert (xm * xp - t).is_zero()
    assert (xp * xm - sigma_t).is_zero()


def test_transport_is_homomorphism(gwa):
    eng = UqEngine(2)
    rng = random.Random(3)
    gens = [eng.E(1), eng.F(1), eng.K(1), eng.K(2, -1)]
    for _ in range(40):
        a = gens[rng.randrange(4)] * gens[rng.randrange(4)]
        b = gens[rng.randrange(4)]
        lhs = pbw_to_gwa(gwa, a * b)
        rhs = pbw_to_gwa(gwa, a) * pbw_to_gwa(gwa, b)
        assert (lhs - rhs).is_zero()


def test_character_round_trip(gwa):
    k1 = QScalar.parse("2q")
    k2 = QScalar.parse("3q^-2")
    tau = QScalar.parse("q^2-1")
    chi = GTCharacter.from_point(k1, k2, tau)
    assert (chi.k1 - k1).is_zero()
    assert (chi.k2 - k2).is_zero()
    assert (chi.tau - tau).is_zero()


def test_character_values_match_subalgebra_images(gwa):
    # evaluating the transported generators at (k1, k2, tau) recovers the
    # character values
    eng = UqEngine(2)
    chi = GTCharacter.from_point(
        QScalar.parse("2"), QScalar.parse("3q^2"), QScalar.parse("5")
    )
    for (r, s), g in [((1, 1), chi.g11), ((2, 1), chi.g21), ((2, 2), chi.g22)]:
        img = pbw_to_gwa(gwa, d_gen(eng, r, s))
        assert list(img.terms) == [0]
        v = img.terms[0].substitute([chi.k1, chi.k2, chi.tau])
        assert (v - g).is_zero()


def test_engineered_break(gwa):
    k1, k2 = QScalar.parse("2q"), QScalar.parse("3")
    for nstar in range(-3, 4):
        tau = -gwa.t_shift(-nstar).substitute([k1, k2, ZERO])
        chi = GTCharacter.from_point(k1, k2, tau)
        assert nstar in break_points(gwa, chi)
        assert tau_value(gwa, chi, nstar).is_zero()
        rep = fiber_gl2(gwa, chi)
        assert rep["count"] == 2
        kinds = [m["kind"] for m in rep["modules"]]
        assert kinds == ["highest", "lowest"]


def test_generic_character_is_dense(gwa):
    chi = GTCharacter.from_point(
        QScalar.parse("2"), QScalar.parse("3"), QScalar.parse("7")
    )
    rep = fiber_gl2(gwa, chi)
    assert rep["count"] == 1
    assert rep["modules"][0]["kind"] == "dense"
    assert module_action_check(gwa, chi, rep["modules"][0], 5)["ok"]


def test_orbit_values(gwa):
    chi = GTCharacter.from_point(ONE, ONE, ONE)
    k1n, k2n = orbit_values(gwa, chi, 3)
    assert (k1n - QScalar.q_power(3)).is_zero()
    assert (k2n - QScalar.q_power(-3)).is_zero()


def test_sampled_fibers(gwa):
    chars = sample_characters(gwa, seed=0, count=20)
    assert len(chars) == 20
    assert sum(1 for kind, _ in chars if kind.startswith("break")) >= 6
    for kind, chi in chars:
        rep = fiber_gl2(gwa, chi)
        if kind.startswith("break"):
            assert rep["count"] == 2
        else:
            assert rep["count"] == 1
        dims = []
        for module in rep["modules"]:
            check = module_action_check(gwa, chi, module, 5)
            assert check["ok"], check["failures"]
            assert check["dim_character_space"] <= 2
            dims.append(check["dim_character_space"])
        assert any(d > 0 for d in dims)


def test_character_requires_invertible_values():
    with pytest.raises(ValueError):
        GTCharacter(ZERO, ONE, ONE)
