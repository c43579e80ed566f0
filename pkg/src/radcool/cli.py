"""Command line front end.

Every subcommand writes CSV (header first, 9 significant digits, times in
seconds, temperatures in Celsius) to standard output or ``--out``.  Exit
status is 0 on success, 2 for bad input and 1 when the numerics fail; the
diagnostic is a single ``error: <ErrorName>: <detail>`` line on stderr.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager

import numpy as np

from . import analysis, checks
from .active import active_temperature, build_active_law
from .csvfmt import write_table
from .errors import InputError, NonPolynomialSource, NumericalError
from .exact import build_exact_law
from .oracle import crossing_time, find_equilibrium, integrate
from .scenario import celsius, to_celsius
from .scenario_io import load_scenario

LAWS = ("exact", "oracle", "active", "coefficient", "osullivan1", "osullivan2")


class CliError(InputError):
    """Malformed flag value."""


# -- helpers -----------------------------------------------------------------

@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _scenario(args):
    if not args.scenario:
        raise CliError("--scenario is required for this command")
    return load_scenario(args.scenario, args.set)


def _law_names(text):
    names = [n.strip() for n in text.split(",") if n.strip()]
    unknown = [n for n in names if n not in LAWS]
    if not names or unknown:
        raise CliError(f"unknown law(s) {', '.join(unknown) or text!r}; choose from {', '.join(LAWS)}")
    return names


def _t99(scn, allow_negative_h):
    try:
        return build_exact_law(scn, allow_negative_h).t99()
    except NonPolynomialSource:
        te = find_equilibrium(scn)
        return crossing_time(scn, scn.t_initial + 0.99 * (te - scn.t_initial))


def _t_end(args, scn):
    if args.t_end == "auto":
        return _t99(scn, args.allow_negative_h)
    try:
        value = float(args.t_end)
    except ValueError:
        raise CliError(f"--t-end must be a number of seconds or 'auto', got {args.t_end!r}") from None
    if not value > 0:
        raise CliError("--t-end must be positive")
    return value


def _samples(args):
    if args.samples < 2:
        raise CliError("--samples must be at least 2")
    return args.samples


def _trajectory(scn, name, args, t_end):
    """Vectorized t -> T [K] for law ``name``."""
    if name == "oracle":
        series = integrate(scn, t_end, rel_tol=args.rel_tol)
        return series
    if name == "active":
        law = build_active_law(scn, args.allow_negative_h)
        return lambda t: active_temperature(law, t)
    return analysis.candidate_trajectory(scn, name, args.allow_negative_h)


# -- subcommands -------------------------------------------------------------

def cmd_trace(args):
    scn = _scenario(args)
    name = _law_names(args.law)
    if len(name) != 1:
        raise CliError("trace takes a single --law; use compare for several")
    t_end = _t_end(args, scn)
    ts = np.linspace(0.0, t_end, _samples(args))
    T = _trajectory(scn, name[0], args, t_end)(ts)
    with _output(args.out) as out:
        write_table(out, ["t_s", "T_c"], [ts, to_celsius(T)])


def cmd_compare(args):
    scn = _scenario(args)
    names = _law_names(args.laws)
    t_end = _t_end(args, scn)
    ts = np.linspace(0.0, t_end, _samples(args))
    cols = [to_celsius(_trajectory(scn, n, args, t_end)(ts)) for n in names]
    with _output(args.out) as out:
        write_table(out, ["t_s"] + [f"T_{n}_c" for n in names], [ts] + cols)


def cmd_invert(args):
    scn = _scenario(args)
    law = build_exact_law(scn, args.allow_negative_h)
    if not args.temps:
        raise CliError("--temps is required (comma-separated Celsius values)")
    try:
        temps = [float(v) for v in args.temps.split(",")]
    except ValueError:
        raise CliError(f"--temps must be comma-separated numbers, got {args.temps!r}") from None
    times = [law.time_of_temperature(celsius(v)) for v in temps]
    with _output(args.out) as out:
        write_table(out, ["T_c", "t_s"], [temps, times], decimal_columns={0})


def cmd_rmse(args):
    scn = _scenario(args)
    names = _law_names(args.laws) if args.laws else ["coefficient", "osullivan1", "osullivan2"]
    reports = []
    for n in names:
        cand = "exponential-active" if n == "active" else n
        if n == "oracle":
            raise CliError("the oracle is a reference, not an approximation")
        reports.append(analysis.rmse(scn, cand, n=args.samples if args.samples_given else 500,
                                     allow_negative_h=args.allow_negative_h, fit_mode=args.fit))
    with _output(args.out) as out:
        write_table(out, ["law", "rmse_k", "n", "window_end_s"],
                    [[r.approximation for r in reports], [r.rmse for r in reports],
                     [r.n for r in reports], [r.window_end for r in reports]],
                    decimal_columns=set())


def _sweep(args, metric):
    s_grid = analysis.parse_s_grid(args.s_grid)
    te_grid = analysis.parse_te_grid(args.te_grid)
    rows = analysis.sweep(metric, s_grid, te_grid, ihg=args.ihg, direction=args.direction,
                          active_baseline=getattr(args, "active_baseline", "ode"),
                          workers=args.workers)
    with _output(args.out) as out:
        write_table(out, ["S_m2", "ihg", "direction", "Te_c", metric, "h_negative", "error"],
                    [[r.surface for r in rows], [r.ihg_level for r in rows],
                     [r.direction for r in rows], [to_celsius(r.t_equilibrium) for r in rows],
                     [r.value for r in rows], [r.h_negative for r in rows],
                     [r.error or "" for r in rows]],
                    decimal_columns={3})


def cmd_rcr_sweep(args):
    _sweep(args, "rcr")


def cmd_dtau_sweep(args):
    _sweep(args, "delta_tau")


def cmd_oracle(args):
    scn = _scenario(args)
    t_end = _t_end(args, scn)
    series = integrate(scn, t_end, rel_tol=args.rel_tol)
    with _output(args.out) as out:
        if args.samples_given:
            ts = np.linspace(0.0, t_end, _samples(args))
            write_table(out, ["t_s", "T_c"], [ts, to_celsius(series(ts))])
        else:
            series.to_csv(out)


def cmd_check(args):
    results = checks.run_checks()
    with _output(args.out) as out:
        for r in results:
            out.write(r.line() + "\n")
    return 0 if all(r.passed for r in results) else 1


# -- parser ------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="radcool", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--out", metavar="PATH", help="write CSV here instead of stdout")
        return p

    def scenario_flags(p):
        p.add_argument("--scenario", metavar="PATH", help="key=value scenario file")
        p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                       help="override a scenario key (repeatable)")
        p.add_argument("--allow-negative-h", action="store_true",
                       help="accept a negative convection coefficient")

    def time_flags(p, samples=200):
        p.add_argument("--t-end", default="auto", metavar="SECONDS|auto",
                       help="end of the time window; auto = time to cover 99%% of the swing")
        p.add_argument("--samples", type=int, default=None, metavar="N",
                       help=f"number of output rows (default {samples})")
        p.add_argument("--rel-tol", type=float, default=1e-9, metavar="X",
                       help="relative tolerance of the ODE oracle")

    p = add("trace", cmd_trace, "temperature trajectory of one law")
    scenario_flags(p)
    time_flags(p)
    p.add_argument("--law", default="exact", metavar="NAME", help=", ".join(LAWS))

    p = add("compare", cmd_compare, "trajectories of several laws side by side")
    scenario_flags(p)
    time_flags(p)
    p.add_argument("--laws", default="exact,oracle,active,coefficient", metavar="NAME[,NAME...]")

    p = add("invert", cmd_invert, "time needed to reach given temperatures (exact law)")
    scenario_flags(p)
    p.add_argument("--temps", metavar="C[,C...]", help="target temperatures in Celsius")

    p = add("rmse", cmd_rmse, "RMSE of approximations against the exact law")
    scenario_flags(p)
    p.add_argument("--laws", default=None, metavar="NAME[,NAME...]")
    p.add_argument("--samples", type=int, default=None, metavar="N", help="sample count (default 500)")
    p.add_argument("--fit", choices=("trajectory", "fixed"), default="trajectory",
                   help="T^4 surrogate of the coefficient law: fitted to [T0, Te] or the fixed 20-65 C constants")

    for name, func, metric_help in (("rcr-sweep", cmd_rcr_sweep, "convection ratio over a grid"),
                                    ("dtau-sweep", cmd_dtau_sweep, "temperature lag over a grid")):
        p = add(name, func, metric_help)
        p.add_argument("--s-grid", default="1e-4:6e-2:12:log", metavar="LO:HI:STEPS[:log]",
                       help="surfaces in m^2")
        p.add_argument("--te-grid", default="25:85:13", metavar="LO:HI:STEPS",
                       help="equilibrium temperatures in Celsius")
        p.add_argument("--ihg", choices=("min", "max"), default="max", help="heat source preset")
        p.add_argument("--direction", choices=("heating", "cooling"), default="heating")
        p.add_argument("--workers", type=int, default=1, help="parallel processes")
        p.add_argument("--metric", default=None, help=argparse.SUPPRESS)
        if name == "dtau-sweep":
            p.add_argument("--active-baseline", choices=("ode", "tangent"), default="ode",
                           help="active side for non-linear sources: full source ODE or tangent line")

    p = add("oracle", cmd_oracle, "reference trajectory by adaptive Runge-Kutta")
    scenario_flags(p)
    time_flags(p)

    add("check", cmd_check, "run the self-test recipes and print PASS/FAIL lines")
    return parser


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "samples"):
        args.samples_given = args.samples is not None
        if args.samples is None:
            args.samples = 200
    if getattr(args, "metric", None) not in (None, "rcr" if args.command == "rcr-sweep" else "delta_tau"):
        parser.error(f"--metric does not match the {args.command} command")
    try:
        status = args.func(args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (NumericalError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return status or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
