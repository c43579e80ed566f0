import warnings

import pytest
from hypothesis import given, strategies as st

from radcool.errors import (
    EquilibriumBelowAmbient,
    InvalidScenario,
    MissingConvection,
    NegativeCoefficientWarning,
    UnstableSystem,
)
from radcool.exact import build_exact_law
from radcool.scenario import (
    ThermalScenario,
    celsius,
    h_from_equilibrium_active,
    h_from_equilibrium_passive,
    slab_heat_capacity,
    slab_scenario,
    to_celsius,
)
from radcool.sources import SLAB_SOURCE, Linear


def slab(**kw):
    base = dict(surface=0.01, emissivity=0.94, heat_capacity=slab_heat_capacity(0.01),
                t_ambient=celsius(20.0), t_initial=celsius(25.0), source=SLAB_SOURCE)
    base.update(kw)
    return ThermalScenario(**base)


def test_unit_conversions_are_affine():
    assert celsius(0.0) == 273.15
    assert to_celsius(celsius(37.5)) == pytest.approx(37.5, abs=1e-12)


def test_heat_capacity_of_slab():
    assert slab_heat_capacity(0.01) == pytest.approx(30.97418)


@pytest.mark.parametrize("kw", [dict(surface=0.0), dict(heat_capacity=-1.0),
                                dict(emissivity=1.5), dict(t_initial=celsius(150.0)),
                                dict(temp_range=(300.0, 290.0))])
def test_invalid_scenarios(kw):
    with pytest.raises(InvalidScenario):
        slab(**kw)


def test_h_required_before_use():
    with pytest.raises(MissingConvection):
        slab().require_h()


def test_active_h_of_slab():
    h = h_from_equilibrium_active(slab(), celsius(45.0))
    assert h == pytest.approx(4.3108 / 0.25, rel=1e-4)
    assert h == pytest.approx(17.243, abs=1e-3)


def test_active_h_unit_case():
    scn = slab(surface=1.0, source=Linear(0.0, 1.0), t_initial=celsius(20.0))
    assert h_from_equilibrium_active(scn, scn.t_ambient + 1.0) == pytest.approx(1.0)


@pytest.mark.parametrize("fn", [h_from_equilibrium_active, h_from_equilibrium_passive])
def test_equilibrium_at_ambient_rejected(fn):
    with pytest.raises(EquilibriumBelowAmbient):
        fn(slab(), celsius(20.0))


def test_active_h_unstable():
    # H(Te) = 100 W but dH/dT = 5 W/K: the required h stays below dH/dT / S
    scn = slab(source=Linear(eta1=5.0, eta0=-1490.0))
    with pytest.raises(UnstableSystem):
        h_from_equilibrium_active(scn, celsius(45.0))


@pytest.mark.parametrize("te,ref", [(45.0, 11.144), (25.0, 76.939)])
def test_passive_h_matches_reference_values(te, ref):
    assert h_from_equilibrium_passive(slab(), celsius(te)) == pytest.approx(ref, rel=5e-4)


def test_passive_equals_active_without_radiation():
    scn = slab(emissivity=0.0)
    for te in (30.0, 45.0, 80.0):
        assert h_from_equilibrium_passive(scn, celsius(te)) == pytest.approx(
            h_from_equilibrium_active(scn, celsius(te)), rel=1e-14)


def test_negative_h_warns():
    with pytest.warns(NegativeCoefficientWarning):
        h = h_from_equilibrium_passive(slab(surface=0.05, heat_capacity=1.0), celsius(60.0))
    assert h < 0


@given(st.floats(0.5, 80.0), st.sampled_from([1e-3, 1e-2, 5e-2]))
def test_passive_below_active(rise, S):
    scn = slab(surface=S)
    te = scn.t_ambient + rise
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert h_from_equilibrium_passive(scn, te) <= h_from_equilibrium_active(scn, te)


@given(st.floats(0.5, 80.0), st.sampled_from([1e-3, 1e-2, 5e-2]))
def test_equilibrium_round_trip(rise, S):
    scn = slab(surface=S)
    te = scn.t_ambient + rise
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        law = build_exact_law(scn.with_h(h_from_equilibrium_passive(scn, te)), allow_negative_h=True)
    assert law.Te == pytest.approx(te, rel=1e-6)


def test_slab_presets():
    heat, cool = slab_scenario("heating"), slab_scenario("cooling")
    assert to_celsius(heat.t_initial) == pytest.approx(25.0)
    assert to_celsius(cool.t_initial) == pytest.approx(45.0)
    with pytest.raises(InvalidScenario):
        slab_scenario("sideways")
