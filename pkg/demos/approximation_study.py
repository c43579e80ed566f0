"""How much accuracy do the invertible approximations give up?

Over slabs of 10 cm^2, 1 dm^2 and 5 dm^2, heated from 25 C or cooled from
55 C towards 30..50 C, the script prints the RMSE of each approximation
against the closed-form law over the time to 99% of the swing.
"""

from radcool.checks import rmse_grid

LAWS = ("coefficient", "osullivan2", "osullivan1")


def main():
    print(f"{'S [m^2]':>8} {'direction':>9} {'Te [C]':>7} " + " ".join(f"{n:>12}" for n in LAWS))
    for S, direction, te, values in rmse_grid():
        cells = " ".join(f"{values[n]:12.5f}" for n in LAWS)
        print(f"{S:8g} {direction:>9} {te:7.1f} {cells}")
    print("\nRMSE in kelvin.  The first-order expansion loses ground fastest as the"
          "\nsurface and the rise above ambient grow, because its rest point ignores"
          "\nthe quadratic radiation term.")


if __name__ == "__main__":
    main()
