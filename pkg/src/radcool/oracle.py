"""Reference solution of the raw lumped ODE by adaptive Runge-Kutta.

Independent of every closed form: it only evaluates the heat-rate
primitives, so it works for exponential sources too.  The stepper is the
Dormand-Prince 5(4) pair with first-same-as-last; dense output is a cubic
Hermite spline through the accepted steps.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .csvfmt import write_table
from .errors import NeverReached, StepUnderflow
from .scenario import rate_of_change

# Dormand-Prince tableau
_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
_B4 = (5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40)
_E = tuple(b5 - b4 for b5, b4 in zip(_B5, _B4))

MAX_STEPS = 1_000_000


@dataclass(frozen=True)
class TimeSeries:
    """Accepted steps (t, T, dT/dt) plus the tolerance they were computed at."""

    t: np.ndarray
    T: np.ndarray
    dTdt: np.ndarray
    tolerance_used: float

    @property
    def samples(self):
        return list(zip(self.t.tolist(), self.T.tolist()))

    @property
    def t_end(self):
        return float(self.t[-1])

    def __call__(self, t):
        """Cubic Hermite interpolant at ``t`` (scalar or array)."""
        tq = np.asarray(t, dtype=float)
        if np.any(tq < 0) or np.any(tq > self.t[-1] * (1 + 1e-12)):
            raise ValueError("query time outside the integrated interval")
        i = np.clip(np.searchsorted(self.t, tq, side="right") - 1, 0, len(self.t) - 2)
        t0, t1 = self.t[i], self.t[i + 1]
        h = t1 - t0
        s = (tq - t0) / h
        y0, y1, f0, f1 = self.T[i], self.T[i + 1], self.dTdt[i], self.dTdt[i + 1]
        h00 = (1 + 2 * s) * (1 - s) ** 2
        h10 = s * (1 - s) ** 2
        h01 = s * s * (3 - 2 * s)
        h11 = s * s * (s - 1)
        out = h00 * y0 + h10 * h * f0 + h01 * y1 + h11 * h * f1
        return float(out) if out.ndim == 0 else out

    def to_csv(self, stream=None):
        """Write ``t_s,T_c`` rows; returns the text if no stream is given."""
        buf = stream or io.StringIO()
        write_table(buf, ["t_s", "T_c"], [self.t, self.T - 273.15])
        return None if stream else buf.getvalue()


def _initial_step(scn):
    slope = (abs(scn.h or 0.0) * scn.surface + abs(float(scn.source.derivative(scn.t_initial)))
             + 4 * scn.radiative_conductance * scn.t_initial ** 3)
    if slope == 0:
        return 1.0
    return 1e-3 * scn.heat_capacity / slope


def integrate(scn, t_end, rel_tol=1e-9, stop_temperature=None):
    """Integrate dT/dt from ``scn.t_initial`` over [0, t_end].

    The local error estimate is kept below ``rel_tol`` times the state
    magnitude.  With ``stop_temperature`` the run ends at the step that
    first reaches that temperature (the crossing is then inside the last
    interval).
    """
    if not t_end > 0:
        raise ValueError("t_end must be positive")
    if not 1e-12 <= rel_tol <= 1e-3:
        raise ValueError("rel_tol must lie in [1e-12, 1e-3]")
    scn.require_h()

    def f(y):
        return float(rate_of_change(scn, y))

    t, y = 0.0, float(scn.t_initial)
    k1 = f(y)
    ts, ys, fs = [t], [y], [k1]
    h = min(_initial_step(scn), t_end)
    direction = None
    if stop_temperature is not None:
        direction = math.copysign(1.0, stop_temperature - y)
        if stop_temperature == y:
            return TimeSeries(np.array(ts), np.array(ys), np.array(fs), rel_tol)

    for _ in range(MAX_STEPS):
        if t >= t_end:
            break
        h = min(h, t_end - t)
        if h < 1e-14 * max(t, 1.0):
            raise StepUnderflow(f"step size {h:.3g} s underflowed at t = {t:.6g} s")
        ks = [k1]
        for j in range(1, 7):
            yj = y + h * sum(a * k for a, k in zip(_A[j], ks))
            ks.append(f(yj))
        y5 = y + h * sum(b * k for b, k in zip(_B5, ks))
        err = abs(h * sum(e * k for e, k in zip(_E, ks)))
        scale = rel_tol * max(abs(y), abs(y5))
        ratio = err / scale
        if ratio <= 1.0:
            t = t + h if t_end - (t + h) > 1e-12 * t_end else t_end
            y, k1 = y5, ks[6]
            ts.append(t)
            ys.append(y)
            fs.append(k1)
            if direction is not None and direction * (y - stop_temperature) >= 0:
                break
        factor = 0.9 * ratio ** -0.2 if ratio > 0 else 5.0
        h *= min(5.0, max(0.2, factor))
    else:
        raise StepUnderflow(f"more than {MAX_STEPS} steps needed")
    return TimeSeries(np.array(ts), np.array(ys), np.array(fs), rel_tol)


def _reachable(scn, target):
    """True if dT/dt keeps the sign of (target - T0) on the way to target."""
    T0 = scn.t_initial
    grid = np.linspace(T0, target, 257)
    rates = np.array([float(rate_of_change(scn, T)) for T in grid[:-1]])
    return bool(np.all(np.sign(target - T0) * rates > 0))


def crossing_time(source, T_target, rel_tol=1e-9, t_max=1e8):
    """First time the trajectory reaches ``T_target``.

    ``source`` is a :class:`TimeSeries` or a scenario; in the latter case it
    is integrated until the crossing.  The crossing is located by bracketed
    root search on the dense output to 1e-6 s relative.
    """
    if isinstance(source, TimeSeries):
        series = source
        T0 = float(series.T[0])
        if T_target == T0:
            return 0.0
        sign = math.copysign(1.0, T_target - T0)
        hit = np.nonzero(sign * (series.T - T_target) >= 0)[0]
        if len(hit) == 0:
            raise NeverReached(f"{T_target:.6g} K not reached within {series.t_end:.6g} s")
    else:
        scn = source
        if T_target == scn.t_initial:
            return 0.0
        if not _reachable(scn, T_target):
            raise NeverReached(f"{T_target:.6g} K lies beyond the equilibrium reachable "
                               f"from {scn.t_initial:.6g} K")
        series = integrate(scn, t_max, rel_tol=rel_tol, stop_temperature=T_target)
        return crossing_time(series, T_target)
    j = int(hit[0])
    lo, hi = float(series.t[j - 1]), float(series.t[j])
    return brentq(lambda x: series(x) - T_target, lo, hi, xtol=1e-12, rtol=1e-12)


def find_equilibrium(scn, span=1000.0, step=1.0):
    """Stable rest temperature reached from ``scn.t_initial`` [K].

    Walks from T0 in the direction the body moves until dT/dt changes sign,
    then refines with a bracketed root search.
    """
    T0 = scn.t_initial
    r0 = float(rate_of_change(scn, T0))
    if r0 == 0:
        return T0
    sign = math.copysign(1.0, r0)
    lo = T0
    for k in range(1, int(span / step) + 1):
        hi = T0 + sign * k * step
        if hi <= 0:
            break
        if math.copysign(1.0, float(rate_of_change(scn, hi))) != sign:
            a, b = sorted((lo, hi))
            return brentq(lambda x: float(rate_of_change(scn, x)), a, b, xtol=1e-12)
        lo = hi
    raise NeverReached(f"no equilibrium within {span:g} K of {T0:.6g} K")
