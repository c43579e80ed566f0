"""A 10 x 10 cm silica slab with a linear heat source, heated from 25 C to
45 C and cooled from 45 C to 25 C.

For each direction the script prints the convective coefficient that pins the
equilibrium, then compares the closed-form passive law against a Runge-Kutta
run of the same balance and against the plain exponential law that ignores
radiation.  The closed form and the integrator should agree to well under a
millikelvin; the exponential law misses by far more.
"""

import numpy as np

from radcool import build_active_law, build_exact_law, integrate, to_celsius
from radcool.scenario import slab_scenario


def main():
    for direction in ("heating", "cooling"):
        scn = slab_scenario(direction)
        law = build_exact_law(scn)
        t_end = law.t99()
        ts = np.linspace(0.0, t_end, 9)
        oracle = integrate(scn, t_end)(ts)
        # the exponential law with the same h, radiation dropped
        active = build_active_law(scn)(ts)
        exact = law.temperature_at_time(ts)

        print(f"\n{direction}: h = {scn.h:.3f} W/(m^2 K), equilibrium {to_celsius(law.Te):.3f} C, "
              f"t99 = {t_end:.1f} s")
        print(f"{'t [s]':>9} {'exact [C]':>11} {'oracle-exact [mK]':>18} {'no radiation [C]':>17}")
        for t, e, o, a in zip(ts, exact, oracle, active):
            print(f"{t:9.1f} {to_celsius(e):11.4f} {1e3 * (o - e):18.2e} {to_celsius(a):17.4f}")

        target = law.T0 + 0.85 * (law.Te - law.T0)
        print(f"85% of the swing ({to_celsius(target):.2f} C) is reached after "
              f"{law.time_of_temperature(target):.1f} s")


if __name__ == "__main__":
    main()
