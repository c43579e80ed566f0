"""When can radiation be ignored?

Two yardsticks over surface area and equilibrium temperature, for a body
whose heat source grows exponentially with temperature:

* r_cr, the ratio between the convective coefficients a radiating and a
  non-radiating body need to settle at the same temperature (1 = radiation
  irrelevant);
* delta tau, how far behind the non-radiating trajectory lags when the
  radiating one has covered 85% of its swing.
"""

import numpy as np

from radcool import celsius
from radcool.analysis import sweep

SURFACES = (2.5e-4, 7e-3, 5e-2)  # chip, phone, tablet
TE_C = np.arange(30.0, 86.0, 10.0)


def table(metric, ihg, direction="heating"):
    rows = sweep(metric, SURFACES, celsius(TE_C), ihg=ihg, direction=direction)
    grid = np.array([r.value for r in rows]).reshape(len(SURFACES), len(TE_C))
    print(f"\n{metric}, {ihg} heat source, {direction}")
    print(f"{'S [m^2]':>8} " + " ".join(f"{te:8.0f}C" for te in TE_C))
    for S, line in zip(SURFACES, grid):
        print(f"{S:8g} " + " ".join("      --" if np.isnan(v) else f"{v:9.4f}" for v in line))


def main():
    table("rcr", "max")
    table("delta_tau", "max")
    table("delta_tau", "min")
    print("\n-- marks points where the non-radiating body has no stable rest point"
          "\nat that temperature or the radiating one never gets to 85% of the swing.")


if __name__ == "__main__":
    main()
