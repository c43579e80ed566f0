"""Lumped thermal models of passively and actively cooled bodies."""

from .active import ActiveLaw, active_temperature, build_active_law
from .analysis import ComparisonRow, RmseReport, delta_tau, rcr, rmse, sweep
from .approximations import (
    build_quadratic_law,
    fit_radiation_quadratic,
    osullivan1_temperature,
    osullivan2_temperature,
    osullivan_coeffs,
    quadratic_temperature,
)
from .exact import (
    ExactLaw,
    build_exact_law,
    build_rate_polynomial,
    equilibrium,
    partial_fractions,
    solve_roots,
    temperature_at_time,
    time_of_temperature,
)
from .oracle import TimeSeries, crossing_time, integrate
from .scenario import (
    SIGMA,
    ThermalScenario,
    celsius,
    h_from_equilibrium_active,
    h_from_equilibrium_passive,
    to_celsius,
)
from .sources import Exponential, Linear, PolyCubic, fit_source_polynomial, heat_rate

__version__ = "0.1.0"

__all__ = [
    "ActiveLaw",
    "ComparisonRow",
    "ExactLaw",
    "Exponential",
    "Linear",
    "PolyCubic",
    "RmseReport",
    "SIGMA",
    "ThermalScenario",
    "TimeSeries",
    "active_temperature",
    "build_active_law",
    "build_exact_law",
    "build_quadratic_law",
    "build_rate_polynomial",
    "celsius",
    "crossing_time",
    "delta_tau",
    "equilibrium",
    "fit_radiation_quadratic",
    "fit_source_polynomial",
    "h_from_equilibrium_active",
    "h_from_equilibrium_passive",
    "heat_rate",
    "integrate",
    "osullivan1_temperature",
    "osullivan2_temperature",
    "osullivan_coeffs",
    "partial_fractions",
    "quadratic_temperature",
    "rcr",
    "rmse",
    "solve_roots",
    "sweep",
    "temperature_at_time",
    "time_of_temperature",
    "to_celsius",
]
