"""Invertible approximations of the passive law.

Two ways of making the quartic rate polynomial tractable:

* the *coefficient* approximation replaces T^4 by a fitted quadratic, which
  leaves a quadratic rate polynomial with a logistic-type solution;
* the *O'Sullivan* approximations expand (theta + Ta)^4 around the ambient
  (theta = T - Ta) and truncate after the linear or the quadratic term.

All three accept linear heat sources only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import (
    ComplexRoots,
    DegenerateRange,
    NegativeConvection,
    NonLinearSource,
    UnstableSystem,
    WrongSignKappa2,
)
from .sources import Linear

# T^4 ~ q0 + q1 T + q2 T^2, tuned for roughly 20..65 C.
FIXED_QUADRATIC = (29700057265.0, -251483462.0, 598262.0)
FIXED_FIT_RANGE = (293.15, 338.15)
FIT_SAMPLES = 512
DYNAMIC_FIT_LIMIT = 500.0  # K


def _linear_coefficients(scn):
    if not isinstance(scn.source, Linear):
        raise NonLinearSource("approximate laws need a linear heat source")
    c = scn.source.kelvin_coefficients()
    return float(c[1]), float(c[0])


def _checked_h(scn, allow_negative_h):
    h = scn.require_h()
    if h < 0 and not allow_negative_h:
        raise NegativeConvection(f"h = {h:.4g} < 0")
    return h


# -- quadratic surrogate of T^4 ----------------------------------------------

@dataclass(frozen=True)
class QuadraticRadiationFit:
    q0: float
    q1: float
    q2: float
    fit_range: Tuple[float, float]
    max_rel_error: float
    rel_error_range: Tuple[float, float]  # signed (min, max) of (fit - T^4)/T^4

    def __call__(self, T):
        return P.polyval(T, (self.q0, self.q1, self.q2))


def _relative_errors(coeffs, lo, hi, samples=10 * FIT_SAMPLES):
    T = np.linspace(lo, hi, samples)
    return (P.polyval(T, coeffs) - T ** 4) / T ** 4


def fit_radiation_quadratic(temp_range=FIXED_FIT_RANGE, mode="fixed"):
    """Quadratic stand-in for T^4 over ``temp_range`` [K].

    ``mode="fixed"`` returns the fixed 20-65 C constants (the range
    only sets where the error is measured); ``mode="dynamic"`` minimizes
    the squared *relative* error on 512 equispaced samples of the range.
    """
    lo, hi = (float(v) for v in temp_range)
    if not hi > lo:
        raise DegenerateRange(f"fit range needs lo < hi, got [{lo}, {hi}]")
    if mode == "fixed":
        coeffs = FIXED_QUADRATIC
    elif mode == "dynamic":
        if lo <= 0 or hi > DYNAMIC_FIT_LIMIT:
            raise DegenerateRange(f"dynamic fit range must lie in (0, {DYNAMIC_FIT_LIMIT:g}] K")
        T = np.linspace(lo, hi, FIT_SAMPLES)
        coeffs = tuple(float(c) for c in P.polyfit(T, T ** 4, 2, w=T ** -4.0))
    else:
        raise ValueError(f"unknown fit mode {mode!r}")
    err = _relative_errors(coeffs, lo, hi)
    return QuadraticRadiationFit(*coeffs, fit_range=(lo, hi),
                                 max_rel_error=float(np.max(np.abs(err))),
                                 rel_error_range=(float(err.min()), float(err.max())))


def trajectory_fit(scn, t_equilibrium):
    """Dynamic fit over the span the body actually travels, T0 to Te."""
    lo, hi = sorted((scn.t_initial, t_equilibrium))
    return fit_radiation_quadratic((lo, hi), mode="dynamic")


# -- logistic solution shared by both quadratic laws ---------------------------

def _logistic(w1, w2, c0, decay, x0, t):
    """Solution of dx/dt = k (x - w1)(x - w2) with k < 0, written via
    G = exp(decay t) / c0 (decay < 0) so nothing overflows for large t."""
    t = np.asarray(t, dtype=float)
    if c0 == 0:
        return np.full_like(t, x0) if t.ndim else float(x0)
    G = np.exp(decay * t) / c0
    if x0 < w2:
        x = (w1 * G + w2) / (G + 1.0)
    elif x0 > w2:
        x = (w2 - w1 * G) / (1.0 - G)
    else:
        x = np.full_like(t, w2)
    x = np.where(t == 0, x0, x)
    return float(x) if x.ndim == 0 else x


# -- coefficient approximation -----------------------------------------------

@dataclass(frozen=True)
class QuadraticLaw:
    omega1: float
    omega2: float
    A: float
    kappa2: float
    c0: float
    branch: str
    T0: float
    degenerate: bool = False  # started on the unstable root

    @property
    def equilibrium(self):
        return self.omega2

    def __call__(self, t):
        return quadratic_temperature(self, t)


def build_quadratic_law(scn, fit=None, allow_negative_h=False):
    """Coefficient approximation of ``scn`` with T^4 replaced by ``fit``."""
    fit = fit or fit_radiation_quadratic()
    eta1, eta0 = _linear_coefficients(scn)
    h = _checked_h(scn, allow_negative_h)
    S, C, Ta = scn.surface, scn.heat_capacity, scn.t_ambient
    g = scn.radiative_conductance
    k2 = -g * fit.q2 / C
    k1 = (eta1 - h * S - g * fit.q1) / C
    k0 = (eta0 + h * S * Ta + g * Ta ** 4 - g * fit.q0) / C
    if not k2 < 0:
        raise WrongSignKappa2(f"quadratic rate coefficient {k2:.3g} must be negative")
    disc = k1 * k1 - 4.0 * k2 * k0
    if not disc > 0:
        raise ComplexRoots(f"discriminant {disc:.3g} <= 0")
    # cancellation-free pair of roots; k2 may be tiny when emissivity is
    q = -0.5 * (k1 + math.copysign(math.sqrt(disc), k1))
    w1, w2 = sorted((q / k2, k0 / q))
    T0 = scn.t_initial
    degenerate = abs(T0 - w1) <= 1e-9 * (w2 - w1)
    if degenerate:
        c0 = 0.0
    else:
        c0 = abs(T0 - w1) / abs(T0 - w2) if T0 != w2 else math.inf
    return QuadraticLaw(omega1=w1, omega2=w2, A=1.0 / (w2 - w1), kappa2=k2, c0=c0,
                        branch="heating" if T0 < w2 else "cooling", T0=T0,
                        degenerate=degenerate)


def quadratic_temperature(law, t):
    if math.isinf(law.c0):
        return _logistic(law.omega1, law.omega2, 1.0, 0.0, law.omega2, t)
    return _logistic(law.omega1, law.omega2, law.c0, law.kappa2 / law.A, law.T0, t)


# -- O'Sullivan expansions ---------------------------------------------------

@dataclass(frozen=True)
class OSullivanCoeffs:
    """Rate polynomial in theta = T - Ta, in watts:
    C dtheta/dt = -k theta^4 - l theta^3 - m theta^2 - n theta - p."""

    k: float
    l: float
    m: float
    n: float
    p: float


def osullivan_coeffs(scn, allow_negative_h=False):
    eta1, eta0 = _linear_coefficients(scn)
    h = _checked_h(scn, allow_negative_h)
    Ta, S = scn.t_ambient, scn.surface
    g = scn.radiative_conductance
    return OSullivanCoeffs(k=g, l=4 * g * Ta, m=6 * g * Ta ** 2,
                           n=h * S - eta1 + 4 * g * Ta ** 3,
                           p=-(eta1 * Ta + eta0))


def osullivan1_equilibrium(scn, coeffs=None, allow_negative_h=False):
    c = coeffs or osullivan_coeffs(scn, allow_negative_h)
    return scn.t_ambient - c.p / c.n


def osullivan1_temperature(scn, t, allow_negative_h=False):
    """First order: exponential relaxation with rate n/C."""
    c = osullivan_coeffs(scn, allow_negative_h)
    if not c.n > 0:
        raise UnstableSystem(f"linear coefficient n = {c.n:.4g} <= 0")
    t = np.asarray(t, dtype=float)
    theta0 = scn.t_initial - scn.t_ambient
    T = (theta0 + c.p / c.n) * np.exp(-c.n / scn.heat_capacity * t) - c.p / c.n + scn.t_ambient
    T = np.where(t == 0, scn.t_initial, T)
    return float(T) if T.ndim == 0 else T


def _osullivan2_roots(c):
    disc = c.n * c.n - 4.0 * c.p * c.m
    if not disc > 0:
        raise ComplexRoots(f"n^2 - 4pm = {disc:.3g} <= 0")
    root = math.sqrt(disc)
    return (-root - c.n) / (2.0 * c.m), (root - c.n) / (2.0 * c.m)


def osullivan2_equilibrium(scn, allow_negative_h=False):
    return _osullivan2_roots(osullivan_coeffs(scn, allow_negative_h))[1] + scn.t_ambient


def osullivan2_temperature(scn, t, allow_negative_h=False):
    """Second order: logistic solution in theta, shifted back by Ta."""
    c = osullivan_coeffs(scn, allow_negative_h)
    if not c.m > 0:
        # no radiation left: the second-order term vanishes
        return osullivan1_temperature(scn, t, allow_negative_h)
    w1, w2 = _osullivan2_roots(c)
    theta0 = scn.t_initial - scn.t_ambient
    c0 = abs(theta0 - w1) / abs(theta0 - w2) if theta0 != w2 else 1.0
    decay = -(c.m / scn.heat_capacity) * (w2 - w1)
    theta = _logistic(w1, w2, c0, decay, theta0, t)
    T = np.asarray(theta) + scn.t_ambient
    T = np.where(np.asarray(t) == 0, scn.t_initial, T)
    return float(T) if T.ndim == 0 else T
