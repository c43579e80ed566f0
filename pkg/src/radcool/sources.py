"""Internal heat generation models H(T).

Every model carries an explicit temperature ``basis``: the coefficients are
applied either to the absolute temperature (``"kelvin"``) or to the Celsius
reading (``"celsius"``).  All call sites pass temperatures in kelvin; the
model performs the shift itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import DegenerateRange, InputError, NonPolynomialSource

ZERO_CELSIUS = 273.15
BASES = ("kelvin", "celsius")


def _check_basis(basis):
    if basis not in BASES:
        raise InputError(f"basis must be one of {BASES}, got {basis!r}")


def _offset(basis):
    return ZERO_CELSIUS if basis == "celsius" else 0.0


@dataclass(frozen=True)
class Linear:
    """H(T) = eta1 * T + eta0."""

    eta1: float
    eta0: float
    basis: str = "kelvin"

    def __post_init__(self):
        _check_basis(self.basis)

    def __call__(self, T):
        x = np.asarray(T, dtype=float) - _offset(self.basis)
        return self.eta1 * x + self.eta0

    def derivative(self, T):
        return np.zeros_like(np.asarray(T, dtype=float)) + self.eta1

    def kelvin_coefficients(self):
        """Ascending coefficients (c0, c1, c2, c3) of H as a polynomial in kelvin."""
        return _shift_to_kelvin([self.eta0, self.eta1], self.basis)


@dataclass(frozen=True)
class PolyCubic:
    """H(T) = kappa0 + kappa1*T + kappa2*T**2 + kappa3*T**3."""

    kappa0: float
    kappa1: float = 0.0
    kappa2: float = 0.0
    kappa3: float = 0.0
    basis: str = "kelvin"

    def __post_init__(self):
        _check_basis(self.basis)

    @property
    def coefficients(self):
        return (self.kappa0, self.kappa1, self.kappa2, self.kappa3)

    def __call__(self, T):
        x = np.asarray(T, dtype=float) - _offset(self.basis)
        return P.polyval(x, self.coefficients)

    def derivative(self, T):
        x = np.asarray(T, dtype=float) - _offset(self.basis)
        return P.polyval(x, P.polyder(self.coefficients))

    def kelvin_coefficients(self):
        return _shift_to_kelvin(self.coefficients, self.basis)


@dataclass(frozen=True)
class Exponential:
    """H(T) = alpha + exp((T - gamma) / beta)."""

    alpha: float
    beta: float
    gamma: float
    basis: str = "celsius"

    def __post_init__(self):
        _check_basis(self.basis)
        if not self.beta > 0:
            raise InputError("exponential source needs beta > 0")

    def __call__(self, T):
        x = np.asarray(T, dtype=float) - _offset(self.basis)
        return self.alpha + np.exp((x - self.gamma) / self.beta)

    def derivative(self, T):
        x = np.asarray(T, dtype=float) - _offset(self.basis)
        return np.exp((x - self.gamma) / self.beta) / self.beta

    def kelvin_coefficients(self):
        raise NonPolynomialSource(
            "exponential heat source has no polynomial form; fit it first "
            "(fit_source_polynomial)")


HeatSourceModel = Union[Linear, PolyCubic, Exponential]


def _shift_to_kelvin(coeffs, basis):
    """Re-expand a polynomial in (T - offset) as a polynomial in T."""
    c = np.zeros(4)
    coeffs = np.asarray(coeffs, dtype=float)
    off = _offset(basis)
    if off == 0.0:
        c[:len(coeffs)] = coeffs
        return c
    # sum_i a_i (T - off)^i
    for i, a in enumerate(coeffs):
        c[:i + 1] += a * P.polypow([-off, 1.0], i)
    return c


def is_polynomial(source):
    return isinstance(source, (Linear, PolyCubic))


def heat_rate(source, T):
    """Internal heat generation in watts at absolute temperature ``T`` [K]."""
    return source(T)


def linearize(source, T):
    """Tangent line of ``source`` at ``T`` [K], as a kelvin-basis :class:`Linear`."""
    slope = float(source.derivative(T))
    return Linear(eta1=slope, eta0=float(source(T)) - slope * T, basis="kelvin")


def as_kelvin_linear(source):
    """Express a :class:`Linear` source on the kelvin scale."""
    c = source.kelvin_coefficients()
    return Linear(eta1=float(c[1]), eta0=float(c[0]), basis="kelvin")


class PolynomialFit(NamedTuple):
    source: PolyCubic
    max_rel_error: float


def fit_source_polynomial(source, temp_range, order=2, samples=200):
    """Least-squares polynomial surrogate of ``source`` over ``temp_range`` [K].

    The fit is done in the source's own basis variable and returned as a
    :class:`PolyCubic` of the same basis, together with the maximum relative
    error measured on a grid ten times denser than the fitting grid.
    """
    lo, hi = (float(v) for v in temp_range)
    if not hi > lo:
        raise DegenerateRange(f"fit range needs lo < hi, got [{lo}, {hi}]")
    if order not in (1, 2, 3):
        raise InputError("order must be 1, 2 or 3")
    samples = max(int(samples), 100)
    off = _offset(source.basis)
    T = np.linspace(lo, hi, samples)
    coeffs = P.polyfit(T - off, source(T), order)
    coeffs = np.pad(coeffs, (0, 4 - len(coeffs)))
    fitted = PolyCubic(*map(float, coeffs), basis=source.basis)

    dense = np.linspace(lo, hi, 10 * samples)
    ref = source(dense)
    err = np.max(np.abs(fitted(dense) - ref) / np.abs(ref))
    return PolynomialFit(fitted, float(err))


# Linear source used for the silica-slab validation runs (kelvin basis).
SLAB_SOURCE = Linear(eta1=9.407e-3, eta0=1.318, basis="kelvin")

# Cortex-A15 power/temperature fits, low-power and full-speed.
IHG_MIN = Exponential(alpha=0.396, beta=29.015, gamma=82.738, basis="celsius")
IHG_MAX = Exponential(alpha=4.030, beta=32.010, gamma=149.797, basis="celsius")
IHG_PRESETS = {"min": IHG_MIN, "max": IHG_MAX}


def describe(source):
    kind = {Linear: "linear", PolyCubic: "cubic", Exponential: "exponential"}[type(source)]
    return kind


def source_from_mapping(kind, params, basis=None):
    """Build a source from string parameters as read from a scenario file."""
    kind = kind.lower()
    try:
        if kind == "linear":
            return Linear(float(params["eta1"]), float(params["eta0"]), basis or "kelvin")
        if kind in ("cubic", "polycubic", "poly"):
            ks = [float(params.get(f"kappa{i}", 0.0)) for i in range(4)]
            return PolyCubic(*ks, basis=basis or "kelvin")
        if kind == "exponential":
            return Exponential(float(params["alpha"]), float(params["beta"]),
                               float(params["gamma"]), basis or "celsius")
    except KeyError as exc:
        raise InputError(f"{kind} source is missing coefficient {exc.args[0]}") from None
    raise InputError(f"unknown source kind {kind!r}")


def source_to_mapping(source):
    out = {"kind": describe(source), "basis": source.basis}
    if isinstance(source, Linear):
        out.update(eta1=source.eta1, eta0=source.eta0)
    elif isinstance(source, PolyCubic):
        out.update({f"kappa{i}": v for i, v in enumerate(source.coefficients)})
    else:
        out.update(alpha=source.alpha, beta=source.beta, gamma=source.gamma)
    return out
