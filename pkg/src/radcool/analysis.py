"""Comparison metrics between passive and active cooling, and grid sweeps.

* :func:`rmse` scores an approximate law against the exact passive law.
* :func:`rcr` is the ratio of the convective coefficients a passive and an
  active body need to settle at the same temperature.
* :func:`delta_tau` is the normalized temperature gap between both
  trajectories when the passive one has covered 85 % of its swing.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, Optional, Union

import numpy as np

from .active import active_temperature, build_active_law
from .approximations import (
    build_quadratic_law,
    fit_radiation_quadratic,
    osullivan1_temperature,
    osullivan2_temperature,
    quadratic_temperature,
    trajectory_fit,
)
from .errors import DegenerateRange, InputError, ThermalError, ZeroHeatSource
from .exact import build_exact_law
from .oracle import crossing_time, integrate
from .scenario import (
    celsius,
    comparison_scenario,
    h_from_equilibrium_active,
    passive_h,
    radiation_rate,
    slab_scenario,
)
from .sources import Linear, is_polynomial, linearize

APPROXIMATIONS = ("coefficient", "osullivan1", "osullivan2", "exponential-active")
DEFAULT_S_RANGE = (1e-4, 6e-2)  # m^2


# -- RMSE --------------------------------------------------------------------

@dataclass(frozen=True)
class RmseReport:
    approximation: str
    rmse: float
    n: int
    window_end: float


def candidate_trajectory(scn, name, allow_negative_h=False, fit_mode="trajectory", law=None):
    """Vectorized t -> T map of a named approximation of ``scn``.

    ``fit_mode`` picks the T^4 surrogate of the coefficient approximation:
    ``"trajectory"`` fits over [T0, Te] of the exact law, ``"fixed"`` uses
    the fixed 20-65 C constants.
    """
    if name == "coefficient":
        if fit_mode == "fixed":
            fit = fit_radiation_quadratic()
        else:
            law = law or build_exact_law(scn, allow_negative_h)
            fit = trajectory_fit(scn, law.Te)
        q = build_quadratic_law(scn, fit, allow_negative_h)
        return lambda t: quadratic_temperature(q, t)
    if name == "osullivan1":
        return lambda t: osullivan1_temperature(scn, t, allow_negative_h)
    if name == "osullivan2":
        return lambda t: osullivan2_temperature(scn, t, allow_negative_h)
    if name == "exponential-active":
        a = build_active_law(scn, allow_negative_h)
        return lambda t: active_temperature(a, t)
    if name == "exact":
        law = law or build_exact_law(scn, allow_negative_h)
        return lambda t: law.temperature_at_time(t)
    raise InputError(f"unknown law {name!r}")


def rmse(scn, candidate: Union[str, Callable], n=500, allow_negative_h=False,
         fit_mode="trajectory"):
    """Root mean square gap between the exact law and ``candidate``.

    Sampled at ``n`` equispaced times over [0, t99] of the exact law.
    """
    law = build_exact_law(scn, allow_negative_h)
    t_end = law.t99()
    ts = np.linspace(0.0, t_end, n)
    reference = law.temperature_at_time(ts)
    if callable(candidate):
        name, f = getattr(candidate, "__name__", "custom"), candidate
    else:
        name = candidate
        f = candidate_trajectory(scn, candidate, allow_negative_h, fit_mode, law=law)
    diff = reference - np.asarray(f(ts), dtype=float)
    return RmseReport(approximation=name, rmse=float(np.sqrt(np.mean(diff ** 2))),
                      n=n, window_end=t_end)


def rmse_scenario(surface, direction, t_equilibrium):
    """Slab scenario used for the approximation study: 25 C start when
    heating, 55 C when cooling, h fixed by the requested equilibrium."""
    t0 = celsius(25.0) if direction == "heating" else celsius(55.0)
    return slab_scenario(direction, surface=surface, t_equilibrium=t_equilibrium, t_initial=t0)


# -- r_cr --------------------------------------------------------------------

def rcr(scn, t_equilibrium):
    """h_passive / h_active at equilibrium ``t_equilibrium``."""
    heat = float(scn.source(t_equilibrium))
    if heat == 0:
        raise ZeroHeatSource("H(Te) = 0; the ratio is undefined")
    rad = radiation_rate(scn.emissivity, scn.surface, t_equilibrium, scn.t_ambient)
    return (rad + heat) / heat


# -- delta tau ---------------------------------------------------------------

@dataclass(frozen=True)
class DeltaTau:
    value: float
    h_passive: float
    h_active: float
    crossing_time: float
    h_negative: bool


def _passive_crossing(scn, target, passive):
    if passive == "auto":
        passive = "exact" if is_polynomial(scn.source) and scn.emissivity > 0 else "oracle"
    if passive == "exact":
        return build_exact_law(scn, allow_negative_h=True).time_of_temperature(target)
    return crossing_time(scn, target)


def _active_temperature_at(scn, t_eq, t, baseline):
    h_ac = h_from_equilibrium_active(scn, t_eq)
    if isinstance(scn.source, Linear) or baseline == "tangent":
        src = scn.source if isinstance(scn.source, Linear) else linearize(scn.source, t_eq)
        law = build_active_law(replace(scn, emissivity=0.0, source=src, h=h_ac))
        return active_temperature(law, t), h_ac
    if baseline != "ode":
        raise InputError(f"unknown active baseline {baseline!r}")
    if t == 0:
        return scn.t_initial, h_ac
    series = integrate(replace(scn, emissivity=0.0, h=h_ac), t)
    return float(series.T[-1]), h_ac


def delta_tau(scn, t_equilibrium, fraction=0.85, active_baseline="ode", passive="auto"):
    """Lag of the active trajectory behind the passive one.

    Both bodies start at ``scn.t_initial`` and settle at ``t_equilibrium``:
    the passive one through radiation plus convection, the active one through
    convection alone.  When the passive body reaches T0 + fraction*(Te - T0)
    at t*, the result is (T_passive - T_active(t*)) / (Te - T0), positive
    when the passive body is ahead.

    ``active_baseline`` chooses how a non-linear source is handled on the
    active side: ``"ode"`` integrates the radiation-free balance with the
    full source, ``"tangent"`` replaces the source by its tangent at Te and
    uses the exponential law.
    """
    T0 = scn.t_initial
    if t_equilibrium == T0:
        raise DegenerateRange("equilibrium equals the initial temperature")
    h_pc = passive_h(scn, t_equilibrium)
    passive_scn = scn.with_h(h_pc)
    target = T0 + fraction * (t_equilibrium - T0)
    t_star = _passive_crossing(passive_scn, target, passive)
    T_ac, h_ac = _active_temperature_at(scn, t_equilibrium, t_star, active_baseline)
    value = (target - T_ac) / (t_equilibrium - T0)
    return DeltaTau(value=float(value), h_passive=h_pc, h_active=h_ac,
                    crossing_time=float(t_star), h_negative=h_pc < 0)


# -- sweeps ------------------------------------------------------------------

@dataclass(frozen=True)
class ComparisonRow:
    surface: float
    ihg_level: str
    t_equilibrium: float
    direction: str
    metric: str
    value: float
    h_negative: bool
    error: Optional[str] = None


def _sweep_point(args):
    metric, S, te, ihg, direction, t_initial, active_baseline = args
    h_negative = False
    try:
        scn = comparison_scenario(S, ihg, direction, t_initial)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            h_negative = passive_h(scn, te) < 0
        if metric == "rcr":
            value = rcr(scn, te)
        elif metric == "delta_tau":
            value = delta_tau(scn, te, active_baseline=active_baseline).value
        else:
            raise InputError(f"unknown metric {metric!r}")
        err = None
    except ThermalError as exc:
        value, err = math.nan, f"{type(exc).__name__}: {exc}"
    return ComparisonRow(surface=S, ihg_level=ihg if isinstance(ihg, str) else "custom",
                         t_equilibrium=te, direction=direction, metric=metric,
                         value=float(value), h_negative=bool(h_negative), error=err)


def sweep(metric, s_grid, te_grid, ihg="max", direction="heating", t_initial=None,
          active_baseline="ode", workers=1):
    """One :class:`ComparisonRow` per (S, Te) pair, S-major, in grid order.

    Failures at individual points land in the row's ``error`` field.  With
    ``workers > 1`` points run in separate processes; ordering is unchanged.
    """
    if metric not in ("rcr", "delta_tau"):
        raise InputError(f"metric must be rcr or delta_tau, got {metric!r}")
    if len(s_grid) == 0 or len(te_grid) == 0:
        raise InputError("sweep grids must be non-empty")
    jobs = [(metric, float(S), float(te), ihg, direction, t_initial, active_baseline)
            for S in s_grid for te in te_grid]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_sweep_point, jobs))
    return [_sweep_point(j) for j in jobs]


def _split(text, n_fields, what):
    parts = text.split(":")
    if len(parts) not in n_fields:
        raise InputError(f"malformed {what} {text!r}")
    return parts


def parse_s_grid(text):
    """``lo:hi:steps[:log]`` in m^2; a single number is a one-point grid."""
    parts = _split(text, (1, 3, 4), "surface grid")
    try:
        if len(parts) == 1:
            return np.array([float(parts[0])])
        lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise InputError(f"malformed surface grid {text!r}") from None
    if steps < 1 or lo <= 0 or hi < lo:
        raise InputError(f"surface grid needs 0 < lo <= hi and steps >= 1, got {text!r}")
    if len(parts) == 4:
        if parts[3] not in ("log", "lin"):
            raise InputError(f"grid spacing must be log or lin, got {parts[3]!r}")
        if parts[3] == "log":
            return np.geomspace(lo, hi, steps)
    return np.linspace(lo, hi, steps)


def parse_te_grid(text):
    """``lo:hi:steps`` in Celsius, returned in kelvin."""
    parts = _split(text, (1, 3), "equilibrium grid")
    try:
        if len(parts) == 1:
            return celsius(np.array([float(parts[0])]))
        lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise InputError(f"malformed equilibrium grid {text!r}") from None
    if steps < 1 or hi < lo:
        raise InputError(f"equilibrium grid needs lo <= hi and steps >= 1, got {text!r}")
    return celsius(np.linspace(lo, hi, steps))
