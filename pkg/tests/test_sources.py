import numpy as np
import pytest
from hypothesis import given, strategies as st

from radcool.errors import DegenerateRange, InputError, NonPolynomialSource
from radcool.scenario import celsius
from radcool.sources import (
    IHG_MAX,
    IHG_MIN,
    SLAB_SOURCE,
    Exponential,
    Linear,
    PolyCubic,
    fit_source_polynomial,
    heat_rate,
    linearize,
    source_from_mapping,
    source_to_mapping,
)


def test_linear_kelvin_value():
    assert heat_rate(SLAB_SOURCE, 298.15) == pytest.approx(4.1227, abs=5e-5)


def test_exponential_celsius_value():
    assert heat_rate(IHG_MIN, celsius(25.0)) == pytest.approx(
        0.396 + np.exp((25 - 82.738) / 29.015), rel=1e-12)
    assert heat_rate(IHG_MIN, celsius(25.0)) == pytest.approx(0.5328, abs=1e-4)


def test_constant_source():
    src = Linear(0.0, 1.318)
    assert all(heat_rate(src, T) == 1.318 for T in (1.0, 300.0, 1e4))


@given(eta1=st.floats(-1, 1), eta0=st.floats(-10, 10), T=st.floats(1.0, 1000.0))
def test_celsius_and_kelvin_bases_agree(eta1, eta0, T):
    c = Linear(eta1, eta0, basis="celsius")
    k = Linear(eta1, eta0 - eta1 * 273.15, basis="kelvin")
    assert heat_rate(c, T) == pytest.approx(heat_rate(k, T), rel=1e-12, abs=1e-12)


@given(st.lists(st.floats(-5, 5), min_size=4, max_size=4), st.floats(250.0, 400.0))
def test_cubic_kelvin_coefficients_reproduce_values(coeffs, T):
    src = PolyCubic(*coeffs, basis="celsius")
    kc = src.kelvin_coefficients()
    assert np.polynomial.polynomial.polyval(T, kc) == pytest.approx(src(T), rel=1e-9, abs=1e-6)


def test_exponential_has_no_polynomial_form():
    with pytest.raises(NonPolynomialSource):
        IHG_MAX.kelvin_coefficients()


def test_bad_basis_rejected():
    with pytest.raises(InputError):
        Linear(1.0, 1.0, basis="fahrenheit")


def test_fit_of_nearly_constant_exponential():
    flat = Exponential(alpha=1.0, beta=1e6, gamma=0.0)
    fit = fit_source_polynomial(flat, (celsius(25.0), celsius(85.0)), order=1)
    assert fit.max_rel_error < 1e-6


def test_fit_of_full_speed_source_is_tight():
    fit = fit_source_polynomial(IHG_MAX, (celsius(25.0), celsius(85.0)), order=2)
    assert fit.max_rel_error < 0.02
    assert fit.source.basis == "celsius"


def test_fit_error_drops_with_order():
    rng = (celsius(25.0), celsius(55.0))
    e1 = fit_source_polynomial(IHG_MIN, rng, order=1).max_rel_error
    e2 = fit_source_polynomial(IHG_MIN, rng, order=2).max_rel_error
    assert e1 > e2


def test_fit_rejects_empty_range():
    with pytest.raises(DegenerateRange):
        fit_source_polynomial(IHG_MAX, (300.0, 300.0))


def test_tangent_line_touches_source():
    T = celsius(60.0)
    tan = linearize(IHG_MAX, T)
    assert tan(T) == pytest.approx(IHG_MAX(T), rel=1e-12)
    assert tan.eta1 == pytest.approx(float(IHG_MAX.derivative(T)))


@pytest.mark.parametrize("src", [SLAB_SOURCE, IHG_MIN, PolyCubic(1.0, 2.0, 3.0, 4.0)])
def test_mapping_round_trip(src):
    m = source_to_mapping(src)
    kind, basis = m.pop("kind"), m.pop("basis")
    assert source_from_mapping(kind, {k: str(v) for k, v in m.items()}, basis) == src


def test_mapping_missing_coefficient():
    with pytest.raises(InputError):
        source_from_mapping("linear", {"eta1": "1"}, "kelvin")
