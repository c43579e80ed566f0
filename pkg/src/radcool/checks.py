"""Self-test recipes for the reference values and numerical invariants, each
reported as PASS or FAIL.

Every check is deterministic (fixed seeds, fixed grids) so the report is
byte-identical across runs.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from typing import List

import numpy as np

from .active import active_temperature, build_active_law
from .analysis import delta_tau, rcr, rmse, rmse_scenario
from .approximations import fit_radiation_quadratic
from .errors import ThermalError
from .exact import build_exact_law
from .oracle import integrate
from .scenario import (
    celsius,
    comparison_scenario,
    convection_rate,
    h_from_equilibrium_passive,
    radiation_rate,
    slab_scenario,
)

SEED = 20240601
SOC_SURFACE = 2.5e-4  # m^2
TABLET_SURFACE = 5e-2
GRID_SURFACES = (1e-3, 1e-2, 5e-2)


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self):
        return f"{'PASS' if self.passed else 'FAIL'} [{self.number}] {self.name}: {self.detail}"


def _rel(a, b):
    return abs(a - b) / abs(b)


# -- 1 -----------------------------------------------------------------------

def check_table_h_values():
    base = slab_scenario("heating")
    got = {te: h_from_equilibrium_passive(base, celsius(te)) for te in (45.0, 25.0)}
    ref = {45.0: 11.144, 25.0: 76.939}
    errs = {te: _rel(got[te], ref[te]) for te in ref}
    ok = all(e < 1e-3 for e in errs.values())
    detail = ", ".join(f"h({te:g} C) = {got[te]:.4f} vs {ref[te]} ({100 * errs[te]:.3f}%)"
                       for te in ref)
    return CheckResult(1, "convection coefficients of the slab configuration", ok, detail)


# -- 2 -----------------------------------------------------------------------

def closed_form_vs_oracle(scn, n=2000, rel_tol=1e-9):
    """Max |exact - oracle| over [0, t99], normalized by the swing."""
    law = build_exact_law(scn, allow_negative_h=True)
    t_end = law.t99()
    series = integrate(scn, t_end, rel_tol=rel_tol)
    ts = np.unique(np.concatenate([np.linspace(0.0, t_end, n), series.t]))
    gap = np.max(np.abs(series(ts) - law.temperature_at_time(ts)))
    return gap / law.swing


def check_oracle_agreement():
    gaps = {d: closed_form_vs_oracle(slab_scenario(d)) for d in ("heating", "cooling")}
    ok = all(g < 1e-3 for g in gaps.values())
    detail = ", ".join(f"{d} max gap {g:.2e} of swing" for d, g in gaps.items())
    return CheckResult(2, "closed form against the ODE oracle (bound 1e-3)", ok, detail)


# -- 3 -----------------------------------------------------------------------

def check_quadratic_fit():
    fit = fit_radiation_quadratic((celsius(20.0), celsius(65.0)), mode="fixed")
    lo, hi = (100 * e for e in fit.rel_error_range)
    ok = lo >= -0.041 - 0.005 and hi <= 0.072 + 0.005
    return CheckResult(3, "fixed T^4 quadratic over 20-65 C", ok,
                       f"relative error in [{lo:.4f}%, {hi:.4f}%], allowed [-0.046%, 0.077%]")


# -- 4 -----------------------------------------------------------------------

RMSE_TE = (30.0, 35.0, 40.0, 45.0, 50.0)


def rmse_grid():
    """(S, direction, Te_c, {law: rmse}) over the approximation study grid."""
    rows = []
    for S in GRID_SURFACES:
        for direction in ("heating", "cooling"):
            for te in RMSE_TE:
                scn = rmse_scenario(S, direction, celsius(te))
                vals = {name: rmse(scn, name, allow_negative_h=True).rmse
                        for name in ("coefficient", "osullivan2", "osullivan1")}
                rows.append((S, direction, te, vals))
    return rows


def check_rmse_ordering():
    rows = rmse_grid()
    bad = []
    for S, direction, te, v in rows:
        rise = te - 20.0
        if rise <= 35 and v["coefficient"] > v["osullivan2"]:
            bad.append(f"coef>os2 at S={S:g} {direction} {te:g} C")
        if rise <= 15 and v["osullivan2"] > v["osullivan1"]:
            bad.append(f"os2>os1 at S={S:g} {direction} {te:g} C")
        if S == 1e-3 and max(v.values()) >= 0.1:
            bad.append(f"rmse >= 0.1 K at S=1e-3 {direction} {te:g} C")
    worst_small = max(max(v.values()) for S, _, _, v in rows if S == 1e-3)
    detail = (f"{len(rows)} grid points, largest RMSE at S=1e-3 is {worst_small:.4f} K"
              + (f"; violations: {'; '.join(bad)}" if bad else ""))
    return CheckResult(4, "RMSE ordering of the approximations", not bad, detail)


# -- 5 -----------------------------------------------------------------------

def check_rcr_landmarks():
    te_all = celsius(np.arange(25.0, 86.0, 5.0))
    soc = comparison_scenario(SOC_SURFACE, "max")
    soc_vals = [rcr(soc, te) for te in te_all]
    ok_soc = min(soc_vals) > 0.95

    surfaces = np.geomspace(1e-4, 6e-2, 12)
    te_hot = te_all[1:]  # strictly above ambient
    table = np.array([[rcr(comparison_scenario(S, "max"), te) for te in te_hot] for S in surfaces])
    ok_mono = bool(np.all(np.diff(table, axis=0) < 0) and np.all(np.diff(table, axis=1) < 0))

    tablet = comparison_scenario(TABLET_SURFACE, "max")
    tablet_vals = [rcr(tablet, te) for te in te_all if te >= celsius(45.0)]
    ok_tablet = max(tablet_vals) < 0.95
    detail = (f"min r_cr at 2.5 cm^2 = {min(soc_vals):.4f}; "
              f"monotone in S and Te: {'yes' if ok_mono else 'no'}; "
              f"max r_cr at 5 dm^2, Te >= 45 C = {max(tablet_vals):.4f}")
    return CheckResult(5, "r_cr landmarks with the full-speed source", ok_soc and ok_mono and ok_tablet,
                       detail)


# -- 6 -----------------------------------------------------------------------

def _dtau_curve(S, ihg, direction, te_c):
    scn = comparison_scenario(S, ihg, direction)
    out = []
    for te in te_c:
        try:
            out.append(delta_tau(scn, celsius(te)).value)
        except ThermalError:
            out.append(math.nan)
    return np.array(out)


def check_dtau_landmarks():
    heat_te = np.arange(30.0, 86.0, 5.0)
    shared_te = np.arange(30.0, 51.0, 5.0)
    notes, ok = [], True

    soc_max = _dtau_curve(SOC_SURFACE, "max", "heating", heat_te)
    ok &= bool(np.all(soc_max < 0.005))
    notes.append(f"2.5 cm^2 full-speed heating max {100 * np.nanmax(soc_max):.3f}%")

    soc_min = np.concatenate([_dtau_curve(SOC_SURFACE, "min", d, te)
                              for d, te in (("heating", heat_te), ("cooling", shared_te))])
    finite = soc_min[np.isfinite(soc_min)]
    ok &= bool(finite.size and np.all(finite < 0.08))
    notes.append(f"2.5 cm^2 low-power max {100 * finite.max():.3f}% "
                 f"({soc_min.size - finite.size} infeasible points skipped)")

    tablet = np.concatenate([_dtau_curve(TABLET_SURFACE, ihg, d, te)
                             for ihg in ("min", "max")
                             for d, te in (("heating", heat_te), ("cooling", shared_te))])
    ok &= bool(np.nanmax(tablet) >= 0.30)
    notes.append(f"5 dm^2 grid max {100 * np.nanmax(tablet):.1f}%")

    worse = shared = 0
    for S in (SOC_SURFACE, 7e-3, TABLET_SURFACE):
        for ihg in ("min", "max"):
            h = _dtau_curve(S, ihg, "heating", shared_te)
            c = _dtau_curve(S, ihg, "cooling", shared_te)
            both = np.isfinite(c) & np.isfinite(h)
            shared += int(both.sum())
            worse += int(np.sum(c[both] < h[both]))
    ok &= worse == 0
    notes.append(f"cooling below heating at {worse} of {shared} shared points")
    return CheckResult(6, "delta tau landmarks", ok, "; ".join(notes))


# -- 7 -----------------------------------------------------------------------

def property_scenarios():
    return [slab_scenario(d, surface=S) for d in ("heating", "cooling") for S in GRID_SURFACES]


def partial_fraction_gap(law, temps):
    r = law.roots
    lhs = law.pf.evaluate(r, temps)
    rhs = 1.0 / ((temps - r.omega1) * (temps - r.omega2) * r.quadratic_factor(temps))
    return float(np.max(np.abs(lhs - rhs) / np.abs(rhs)))


def derivative_gap(law, temps):
    """Max relative gap between a central difference of T(t) and p(T)."""
    worst = 0.0
    for T in temps:
        t = law.time_of_temperature(T)
        rate = float(law.rate(T))
        # step: a thousandth of the local relaxation time, kept inside [0, inf)
        dt = min(1e-3 * abs(law.Te - T) / abs(rate), 0.5 * t)
        num = (law.temperature_at_time(t + dt) - law.temperature_at_time(t - dt)) / (2 * dt)
        worst = max(worst, abs(num - rate) / abs(rate))
    return worst


def check_properties():
    rng = np.random.default_rng(SEED)
    pf = inv = ode = 0.0
    for scn in property_scenarios():
        law = build_exact_law(scn, allow_negative_h=True)
        pf = max(pf, partial_fraction_gap(law, rng.uniform(200.0, 400.0, 1000)))
        inner = law.T0 + (law.Te - law.T0) * rng.uniform(0.01, 0.99, 100)
        inv = max(inv, max(abs(law.temperature_at_time(law.time_of_temperature(T)) - T)
                           for T in inner))
        ode = max(ode, derivative_gap(law, law.T0 + (law.Te - law.T0) * rng.uniform(0.05, 0.95, 50)))

    trip = 0.0
    base = slab_scenario("heating")
    for te in base.t_ambient + rng.uniform(0.5, 80.0, 50):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            scn = base.with_h(h_from_equilibrium_passive(base, te))
        trip = max(trip, _rel(build_exact_law(scn, allow_negative_h=True).Te, te))

    # dyadic samples keep T +- x exact, so the convective check can demand equality
    T = rng.integers(250, 400, 200).astype(float)
    x = rng.integers(1, 200 * 1024, 200) / 1024.0
    conv = np.abs(convection_rate(10.0, 0.01, T - x, T)) - np.abs(convection_rate(10.0, 0.01, T + x, T))
    rad = np.abs(radiation_rate(0.94, 0.01, T + x, T)) - np.abs(radiation_rate(0.94, 0.01, T - x, T))
    sym_ok = bool(np.all(conv == 0) and np.all(rad > 0))

    eps_gap = 0.0
    # the exponential law needs h S > dH/dT, which the largest heated slab lacks
    for scn in (s for s in property_scenarios() if s.h > 0):
        thin = replace(scn, emissivity=1e-9)
        law = build_exact_law(thin, allow_negative_h=True)
        act = build_active_law(thin)
        ts = np.linspace(0.0, law.t99(), 100)
        eps_gap = max(eps_gap, float(np.max(np.abs(law.temperature_at_time(ts)
                                                   - active_temperature(act, ts)))))

    ok = (pf < 1e-10 and trip < 1e-6 and inv < 1e-6 and ode < 1e-5 and sym_ok and eps_gap < 1e-4)
    detail = (f"partial fractions {pf:.1e}, equilibrium round trip {trip:.1e}, "
              f"inversion {inv:.1e} K, derivative {ode:.1e}, "
              f"convective symmetry/radiative asymmetry {'ok' if sym_ok else 'broken'}, "
              f"vanishing emissivity {eps_gap:.1e} K")
    return CheckResult(7, "numerical invariants", ok, detail)


CHECKS = (check_table_h_values, check_oracle_agreement, check_quadratic_fit,
          check_rmse_ordering, check_rcr_landmarks, check_dtau_landmarks, check_properties)


def _run_once():
    results = []
    for i, check in enumerate(CHECKS, 1):
        try:
            results.append(check())
        except ThermalError as exc:  # a crash is a failure, not an abort
            results.append(CheckResult(i, check.__name__, False, f"{type(exc).__name__}: {exc}"))
    return results


def run_checks(repeat=True) -> List[CheckResult]:
    """Checks 1-7, plus check 8 comparing a second pass line by line."""
    results = _run_once()
    if repeat:
        again = [r.line() for r in _run_once()]
        same = again == [r.line() for r in results]
        results.append(CheckResult(8, "repeatable report", same,
                                   f"second pass {'identical' if same else 'differs'} "
                                   f"over {len(again)} lines"))
    return results
