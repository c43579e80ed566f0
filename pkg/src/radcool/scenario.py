"""Physical scenario of one isothermal body and the heat-rate primitives.

Temperatures are absolute (kelvin) throughout the library; :func:`celsius`
and :func:`to_celsius` are the only conversions and are exact affine maps.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np

from .errors import (
    EquilibriumBelowAmbient,
    InvalidScenario,
    MissingConvection,
    NegativeCoefficientWarning,
    UnstableSystem,
)
from .sources import (
    IHG_PRESETS,
    SLAB_SOURCE,
    ZERO_CELSIUS,
    HeatSourceModel,
)

SIGMA = 5.670e-8  # W/(m^2 K^4)

# Silica slab: 2 mm thick, rho*c_p in J/(m^3 K).
SLAB_THICKNESS = 2e-3
SLAB_VOLUMETRIC_HEAT = 1548709.0


def celsius(t_c):
    """Celsius reading -> kelvin."""
    if np.ndim(t_c):
        return np.asarray(t_c, dtype=float) + ZERO_CELSIUS
    return float(t_c) + ZERO_CELSIUS


def to_celsius(t_k):
    """Kelvin -> Celsius reading."""
    if np.ndim(t_k):
        return np.asarray(t_k, dtype=float) - ZERO_CELSIUS
    return float(t_k) - ZERO_CELSIUS


def slab_heat_capacity(surface, thickness=SLAB_THICKNESS):
    return surface * thickness * SLAB_VOLUMETRIC_HEAT


@dataclass(frozen=True)
class ThermalScenario:
    """Body, environment and heat source.

    Attributes
    ----------
    surface : cooling surface S [m^2]
    emissivity : gray-body emissivity in [0, 1]
    heat_capacity : C [J/K]
    t_ambient : ambient (fluid and radiative) temperature [K]
    t_initial : body temperature at t = 0 [K]
    h : convective coefficient [W/(m^2 K)], ``None`` until fixed by an
        equilibrium condition
    source : internal heat generation model
    temp_range : declared operating range [K]
    """

    surface: float
    emissivity: float
    heat_capacity: float
    t_ambient: float
    t_initial: float
    source: HeatSourceModel
    h: Optional[float] = None
    temp_range: Tuple[float, float] = (ZERO_CELSIUS, ZERO_CELSIUS + 100.0)

    def __post_init__(self):
        if not self.surface > 0:
            raise InvalidScenario("surface must be > 0")
        if not self.heat_capacity > 0:
            raise InvalidScenario("heat capacity must be > 0")
        if not 0.0 <= self.emissivity <= 1.0:
            raise InvalidScenario("emissivity must lie in [0, 1]")
        if not (self.t_ambient > 0 and self.t_initial > 0):
            raise InvalidScenario("temperatures must be positive kelvin")
        lo, hi = self.temp_range
        if not lo < hi:
            raise InvalidScenario("temp_range needs lo < hi")
        if not lo <= self.t_initial <= hi:
            raise InvalidScenario(
                f"initial temperature {self.t_initial:.3f} K outside declared range [{lo}, {hi}]")
        if self.h is not None and not math.isfinite(self.h):
            raise InvalidScenario("h must be finite")

    def with_h(self, h):
        return replace(self, h=float(h))

    def require_h(self):
        if self.h is None:
            raise MissingConvection("scenario has no convective coefficient; "
                                    "set h or derive it from an equilibrium temperature")
        return self.h

    @property
    def radiative_conductance(self):
        """eps * sigma * S [W/K^4]."""
        return self.emissivity * SIGMA * self.surface


# -- heat-rate primitives ----------------------------------------------------

def convection_rate(h, surface, T, t_fluid):
    """Heat gained by convection, h S (T_fluid - T) [W]."""
    return h * surface * (t_fluid - T)


def radiation_rate(emissivity, surface, T, t_surroundings):
    """Net radiative heat gained, eps sigma S (T_a^4 - T^4) [W]."""
    return emissivity * SIGMA * surface * (t_surroundings ** 4 - T ** 4)


def net_heat_rate(scn, T):
    """Total heat flow into the body at temperature ``T`` [W]."""
    h = scn.require_h()
    return (radiation_rate(scn.emissivity, scn.surface, T, scn.t_ambient)
            + convection_rate(h, scn.surface, T, scn.t_ambient)
            + scn.source(T))


def rate_of_change(scn, T):
    """dT/dt of the lumped body [K/s]."""
    return net_heat_rate(scn, T) / scn.heat_capacity


# -- equilibrium <-> convection coefficient ----------------------------------

def _check_equilibrium(scn, t_eq):
    if not t_eq > scn.t_ambient:
        raise EquilibriumBelowAmbient(
            f"equilibrium {to_celsius(t_eq):.3f} C must exceed ambient {to_celsius(scn.t_ambient):.3f} C")


def h_from_equilibrium_active(scn, t_eq):
    """Convective coefficient that makes ``t_eq`` the equilibrium without radiation.

    For a linear source this is (eta1*Te + eta0) / (S (Te - Ta)); other
    sources use H(Te) in the numerator and their slope at Te in the
    stability test.
    """
    _check_equilibrium(scn, t_eq)
    heat = float(scn.source(t_eq))
    slope = float(scn.source.derivative(t_eq))
    h = heat / (scn.surface * (t_eq - scn.t_ambient))
    if not h > slope / scn.surface:
        raise UnstableSystem(f"h = {h:.6g} does not exceed dH/dT / S = {slope / scn.surface:.6g}")
    return float(h)


def passive_h(scn, t_eq):
    """Eq.-of-balance coefficient with radiation, without sign warnings."""
    _check_equilibrium(scn, t_eq)
    rad = radiation_rate(scn.emissivity, scn.surface, t_eq, scn.t_ambient)
    return float((float(scn.source(t_eq)) + rad) / (scn.surface * (t_eq - scn.t_ambient)))


def h_from_equilibrium_passive(scn, t_eq):
    """Convective coefficient that makes ``t_eq`` the equilibrium of the passive body.

    A negative result means heat would have to be pumped in to hold ``t_eq``;
    it is returned anyway with a :class:`NegativeCoefficientWarning`.
    """
    h = passive_h(scn, t_eq)
    if h < 0:
        warnings.warn(f"equilibrium {to_celsius(t_eq):.2f} C needs h = {h:.4g} W/(m^2 K) < 0",
                      NegativeCoefficientWarning, stacklevel=2)
    return h


def with_passive_equilibrium(scn, t_eq):
    return scn.with_h(passive_h(scn, t_eq))


def with_active_equilibrium(scn, t_eq):
    return scn.with_h(h_from_equilibrium_active(scn, t_eq))


# -- presets -----------------------------------------------------------------

def slab_scenario(direction="cooling", surface=0.01, t_equilibrium=None, t_initial=None):
    """Silica-slab validation configuration with h fixed by the target equilibrium.

    Heating runs from 25 C towards 45 C, cooling from 45 C towards 25 C.
    """
    if direction == "heating":
        t0, te = celsius(25.0), celsius(45.0)
    elif direction == "cooling":
        t0, te = celsius(45.0), celsius(25.0)
    else:
        raise InvalidScenario(f"direction must be heating or cooling, got {direction!r}")
    if t_equilibrium is not None:
        te = t_equilibrium
    if t_initial is not None:
        t0 = t_initial
    base = ThermalScenario(
        surface=surface,
        emissivity=0.94,
        heat_capacity=slab_heat_capacity(surface),
        t_ambient=celsius(20.0),
        t_initial=t0,
        source=SLAB_SOURCE,
    )
    return with_passive_equilibrium(base, te)


def comparison_scenario(surface, ihg="max", direction="heating", t_initial=None):
    """Active/passive comparison configuration (h left unset).

    Ambient 20 C, emissivity 0.94; the body starts at 25 C when heating and
    at 55 C when cooling unless ``t_initial`` is given.
    """
    source = IHG_PRESETS[ihg] if isinstance(ihg, str) else ihg
    if t_initial is None:
        t_initial = celsius(25.0) if direction == "heating" else celsius(55.0)
    return ThermalScenario(
        surface=surface,
        emissivity=0.94,
        heat_capacity=slab_heat_capacity(surface),
        t_ambient=celsius(20.0),
        t_initial=t_initial,
        source=source,
    )
