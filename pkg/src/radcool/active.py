"""Exponential law of a convectively cooled body with linear heat generation.

Radiation is ignored whatever the emissivity.  With H(T) = eta1 T + eta0 the
balance C dT/dt = hS (Ta - T) + H(T) is linear and relaxes exponentially
towards T_inf = (eta0 + hS Ta) / (hS - eta1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NegativeConvection, NonLinearSource, UnstableSystem
from .sources import Linear


@dataclass(frozen=True)
class ActiveLaw:
    T_inf: float
    amplitude: float
    rate: float
    T0: float

    def __call__(self, t):
        return active_temperature(self, t)

    @property
    def equilibrium(self):
        return self.T_inf


def build_active_law(scn, allow_negative_h=False):
    """Exponential law for ``scn``; the source must be :class:`Linear`."""
    if not isinstance(scn.source, Linear):
        raise NonLinearSource("the active law needs a linear heat source; linearize it first")
    h = scn.require_h()
    if h < 0 and not allow_negative_h:
        raise NegativeConvection(f"h = {h:.4g} < 0")
    c = scn.source.kelvin_coefficients()
    eta0, eta1 = float(c[0]), float(c[1])
    hs = h * scn.surface
    if not hs > eta1:
        raise UnstableSystem(f"h S = {hs:.6g} W/K does not exceed dH/dT = {eta1:.6g} W/K")
    t_inf = (eta0 + hs * scn.t_ambient) / (hs - eta1)
    return ActiveLaw(T_inf=t_inf, amplitude=scn.t_initial - t_inf,
                     rate=(hs - eta1) / scn.heat_capacity, T0=scn.t_initial)


def active_temperature(law, t):
    """T_inf + (T0 - T_inf) exp(-rate t); scalar or array ``t``.

    t = 0 returns T0 itself, not the rounded sum.
    """
    if np.ndim(t) == 0:
        t = float(t)
        return law.T0 if t == 0 else law.T_inf + law.amplitude * math.exp(-law.rate * t)
    t = np.asarray(t, dtype=float)
    return np.where(t == 0, law.T0, law.T_inf + law.amplitude * np.exp(-law.rate * t))
