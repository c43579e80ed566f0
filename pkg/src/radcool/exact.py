"""Closed-form passive cooling law t(T) and its numerical inverse T(t).

With convection, radiation and a polynomial heat source the lumped balance
is dT/dt = p(T), p a quartic with negative leading coefficient.  Separating
variables and splitting 1/p(T) into partial fractions over its two real
roots and one complex-conjugate pair gives t as a sum of three logarithms
and one arctangent.  Inverting that expression has no closed form, so
:func:`temperature_at_time` brackets it numerically.

All rate coefficients here are already divided by the heat capacity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import (
    AtEquilibrium,
    DegenerateRadiation,
    NegativeConvection,
    OutOfBasin,
    RepeatedRealRoot,
    UnexpectedRootStructure,
    UnstableEquilibrium,
)
from .quartic import polish, quartic_roots

# |T - Te| below this fraction of |Te - T0| counts as "at equilibrium"
EQUILIBRIUM_TOL = 1e-9
REPEATED_ROOT_TOL = 1e-6  # K


@dataclass(frozen=True)
class RatePolynomial:
    """dT/dt = -kappa4 T^4 + kappa3 T^3 + kappa2 T^2 + kappa1 T + kappa0."""

    kappa4: float
    kappa3: float
    kappa2: float
    kappa1: float
    kappa0: float

    def __post_init__(self):
        if not self.kappa4 > 0:
            raise DegenerateRadiation("kappa4 must be strictly positive")
        if not all(math.isfinite(k) for k in self.ascending()):
            raise ValueError("rate polynomial coefficients must be finite")

    def ascending(self):
        """Coefficients of p in increasing powers of T."""
        return (self.kappa0, self.kappa1, self.kappa2, self.kappa3, -self.kappa4)

    def __call__(self, T):
        return np.polynomial.polynomial.polyval(T, self.ascending())

    def derivative(self, T):
        c = np.polynomial.polynomial.polyder(self.ascending())
        return np.polynomial.polynomial.polyval(T, c)

    def term_scale(self, T):
        """Largest single-term magnitude at ``T``, for relative residuals."""
        return max(abs(k) * abs(T) ** i for i, k in enumerate(self.ascending()))


@dataclass(frozen=True)
class RootStructure:
    omega1: float
    omega2: float
    alpha: float
    beta: float

    def quadratic_factor(self, T):
        """(T - alpha)^2 + beta^2."""
        return (T - self.alpha) ** 2 + self.beta ** 2


@dataclass(frozen=True)
class PartialFractionConstants:
    A: float
    B: float
    C: float
    D: float

    def evaluate(self, roots, T):
        """A/(T-w1) + B/(T-w2) + (C T + D)/((T-alpha)^2 + beta^2)."""
        return (self.A / (T - roots.omega1) + self.B / (T - roots.omega2)
                + (self.C * T + self.D) / roots.quadratic_factor(T))


@dataclass(frozen=True)
class ExactLaw:
    rate: RatePolynomial
    roots: RootStructure
    pf: PartialFractionConstants
    c0: float
    T0: float
    Te: float

    @property
    def direction(self):
        return "heating" if self.Te > self.T0 else "cooling"

    @property
    def swing(self):
        return abs(self.Te - self.T0)

    def antiderivative(self, T):
        """The bracketed sum F(T) so that t = -(F(T) + c0) / kappa4."""
        r, pf = self.roots, self.pf
        return (pf.A * math.log(abs(T - r.omega1))
                + pf.B * math.log(abs(T - r.omega2))
                + 0.5 * pf.C * math.log(r.quadratic_factor(T))
                + (r.alpha * pf.C + pf.D) / r.beta * math.atan((T - r.alpha) / r.beta))

    def time_of_temperature(self, T):
        return time_of_temperature(self, T)

    def temperature_at_time(self, t, full_output=False):
        return temperature_at_time(self, t, full_output=full_output)

    def t99(self):
        """Time to cover 99 % of the swing."""
        return time_of_temperature(self, self.T0 + 0.99 * (self.Te - self.T0))


# -- construction ------------------------------------------------------------

def build_rate_polynomial(scn):
    """Normalized quartic rate polynomial of a scenario with polynomial heat source."""
    if scn.emissivity * scn.surface <= 0:
        raise DegenerateRadiation("emissivity * surface is zero; use the active law")
    h = scn.require_h()
    c = scn.source.kelvin_coefficients()  # raises NonPolynomialSource
    S, C, Ta = scn.surface, scn.heat_capacity, scn.t_ambient
    g = scn.radiative_conductance
    return RatePolynomial(
        kappa4=g / C,
        kappa3=float(c[3]) / C,
        kappa2=float(c[2]) / C,
        kappa1=(float(c[1]) - h * S) / C,
        kappa0=(float(c[0]) + S * h * Ta + g * Ta ** 4) / C,
    )


def solve_roots(p):
    """Two real roots and one complex pair of the rate polynomial."""
    coeffs = p.ascending()
    zs = quartic_roots(coeffs)
    scale = max(abs(z) for z in zs)
    real, cplx = [], []
    for z in zs:
        if abs(z.imag) <= 1e-7 * scale:
            real.append(polish(coeffs, complex(z.real, 0.0)).real)
        else:
            cplx.append(z)
    if len(real) != 2 or len(cplx) != 2:
        raise UnexpectedRootStructure(
            f"expected two real roots and one complex pair, got {len(real)} real "
            f"({', '.join(f'{z:.6g}' for z in zs)})")
    w1, w2 = sorted(real)
    upper = max(cplx, key=lambda z: z.imag)
    return RootStructure(omega1=float(w1), omega2=float(w2),
                         alpha=float(upper.real), beta=float(abs(upper.imag)))


def partial_fractions(r):
    """Constants of 1/((T-w1)(T-w2)((T-a)^2+b^2)) = A/(T-w1) + B/(T-w2) + (CT+D)/(...)."""
    if abs(r.omega1 - r.omega2) < REPEATED_ROOT_TOL:
        raise RepeatedRealRoot(f"real roots {r.omega1:.9g} and {r.omega2:.9g} coincide")
    a, b = r.alpha, r.beta
    q1 = a * a + b * b - r.omega1 * (2 * a - r.omega1)
    q2 = a * a + b * b - r.omega2 * (2 * a - r.omega2)
    A = 1.0 / ((r.omega1 - r.omega2) * q1)
    B = -A * q1 / q2
    C = -(A + B)
    D = A * (2 * a - r.omega1) + B * (2 * a - r.omega2)
    return PartialFractionConstants(A=A, B=B, C=C, D=D)


def equilibrium(law_or_roots, rate=None):
    """Stable equilibrium temperature (the larger real root)."""
    if isinstance(law_or_roots, ExactLaw):
        roots, rate = law_or_roots.roots, law_or_roots.rate
    else:
        roots = law_or_roots
    w2 = roots.omega2
    if rate is not None:
        slope = rate.derivative(w2)
    else:
        # p(T) = -kappa4 (T-w1)(T-w2)q(T): the sign of p'(w2) needs only the roots
        slope = -(w2 - roots.omega1) * roots.quadratic_factor(w2)
    if not slope < 0:
        raise UnstableEquilibrium(f"d(dT/dt)/dT = {slope:.3g} >= 0 at {w2:.6g} K")
    return w2


def build_exact_law(scn, allow_negative_h=False):
    """Assemble the closed-form law for ``scn`` (h must already be set)."""
    if scn.require_h() < 0 and not allow_negative_h:
        raise NegativeConvection(f"h = {scn.h:.4g} < 0; pass allow_negative_h=True to accept it")
    rate = build_rate_polynomial(scn)
    roots = solve_roots(rate)
    pf = partial_fractions(roots)
    te = equilibrium(roots, rate)
    T0 = scn.t_initial
    if not T0 > roots.omega1:
        raise OutOfBasin(f"initial temperature {T0:.6g} K lies below the unstable root "
                         f"{roots.omega1:.6g} K")
    law = ExactLaw(rate=rate, roots=roots, pf=pf, c0=0.0, T0=T0, Te=te)
    return ExactLaw(rate=rate, roots=roots, pf=pf, c0=-law.antiderivative(T0), T0=T0, Te=te)


# -- evaluation --------------------------------------------------------------

def _log_ratio(T, T0, w):
    """log|T - w| - log|T0 - w| without cancellation near either end."""
    x = (T - T0) / (T0 - w)
    if abs(x) < 0.5:
        return math.log1p(x)
    return math.log(abs(T - w) / abs(T0 - w))


def _elapsed(law, T):
    r, pf, T0 = law.roots, law.pf, law.T0
    a, b = r.alpha, r.beta
    u, u0 = (T - a) / b, (T0 - a) / b
    d_atan = math.atan2((T - T0) / b, 1.0 + u * u0)
    q_ratio = (T - T0) * (T + T0 - 2 * a) / r.quadratic_factor(T0)
    dF = (pf.A * _log_ratio(T, T0, r.omega1)
          + pf.B * _log_ratio(T, T0, r.omega2)
          + 0.5 * pf.C * math.log1p(q_ratio)
          + (a * pf.C + pf.D) / b * d_atan)
    return -dF / law.rate.kappa4


def time_of_temperature(law, T):
    """Seconds needed to go from ``law.T0`` to ``T``.

    Evaluated as differences F(T) - F(T0) term by term, which is the same
    as -(F(T) + c0)/kappa4 but keeps full precision for T close to T0.
    """
    T = float(T)
    if T == law.T0:
        return 0.0
    lo, hi = sorted((law.T0, law.Te))
    if not lo <= T <= hi:
        raise OutOfBasin(f"{T:.6g} K is outside [{lo:.6g}, {hi:.6g}] K")
    if abs(T - law.Te) <= EQUILIBRIUM_TOL * law.swing:
        raise AtEquilibrium(f"{T:.9g} K is the equilibrium; it is reached only as t -> inf")
    return _elapsed(law, T)


def _temperature_at_time_scalar(law, t):
    if t < 0:
        raise ValueError("time must be non-negative")
    if t == 0 or law.swing == 0:
        return law.T0, False
    sign = 1.0 if law.Te > law.T0 else -1.0
    far = law.Te - sign * 2.0 * EQUILIBRIUM_TOL * law.swing
    t_far = _elapsed(law, far)
    if t >= t_far:
        return law.Te, True
    T = brentq(lambda x: _elapsed(law, x) - t, law.T0, far,
               xtol=1e-14 * law.swing, rtol=4 * np.finfo(float).eps, maxiter=200)
    return T, False


def temperature_at_time(law, t, full_output=False):
    """Body temperature [K] after ``t`` seconds (scalar or array).

    Beyond the time resolvable in double precision the result is clamped to
    the equilibrium; with ``full_output=True`` a boolean saturation flag (or
    array of flags) is returned as well.
    """
    if np.ndim(t) == 0:
        T, sat = _temperature_at_time_scalar(law, float(t))
        return (T, sat) if full_output else T
    out = [_temperature_at_time_scalar(law, float(x)) for x in np.ravel(t)]
    shape = np.shape(t)
    T = np.array([o[0] for o in out]).reshape(shape)
    if full_output:
        return T, np.array([o[1] for o in out]).reshape(shape)
    return T
