"""Quartic roots: Ferrari's closed form followed by Newton polishing.

The closed form loses digits when the coefficients span many decades (the
radiative coefficient of a small body is ~1e-11 while the constant term is
~1), so the polynomial is made monic and rescaled to unit root magnitude
before Ferrari, and every root is then refined by Newton iteration on the
original coefficients in complex arithmetic.
"""

import cmath

import numpy as np


def _cbrt(z):
    if z == 0:
        return 0j
    return cmath.exp(cmath.log(z) / 3.0)


def cubic_roots(a2, a1, a0):
    """Roots of the monic cubic x^3 + a2 x^2 + a1 x + a0 (Cardano, complex)."""
    p = a1 - a2 * a2 / 3.0
    q = 2.0 * a2 ** 3 / 27.0 - a2 * a1 / 3.0 + a0
    disc = cmath.sqrt(q * q / 4.0 + p ** 3 / 27.0)
    u = _cbrt(-q / 2.0 + disc)
    if abs(u) < 1e-300:
        u = _cbrt(-q / 2.0 - disc)
    omega = complex(-0.5, 3 ** 0.5 / 2)
    roots = []
    for k in range(3):
        uk = u * omega ** k
        vk = -p / (3.0 * uk) if uk != 0 else 0j
        roots.append(uk + vk - a2 / 3.0)
    return roots


def ferrari(a3, a2, a1, a0):
    """Roots of the monic quartic x^4 + a3 x^3 + a2 x^2 + a1 x + a0."""
    # depressed quartic y^4 + p y^2 + q y + r, x = y - a3/4
    s = a3 / 4.0
    p = a2 - 6.0 * s * s
    q = a1 - 2.0 * a2 * s + 8.0 * s ** 3
    r = a0 - a1 * s + a2 * s * s - 3.0 * s ** 4

    # resolvent cubic 8m^3 + 8p m^2 + (2p^2 - 8r) m - q^2 = 0
    ms = cubic_roots(p, (p * p - 4.0 * r) / 4.0, -q * q / 8.0)
    m = max(ms, key=abs)
    if abs(m) < 1e-300:
        # biquadratic: y^4 + p y^2 + r
        z = cmath.sqrt(p * p / 4.0 - r)
        ys = []
        for w in (-p / 2.0 + z, -p / 2.0 - z):
            ys += [cmath.sqrt(w), -cmath.sqrt(w)]
    else:
        root2m = cmath.sqrt(2.0 * m)
        ys = []
        for sign in (1.0, -1.0):
            # y^2 + sign*sqrt(2m) y + (p/2 + m - sign*q/(2 sqrt(2m))) = 0
            b = sign * root2m
            c = p / 2.0 + m - sign * q / (2.0 * root2m)
            d = cmath.sqrt(b * b - 4.0 * c)
            ys += [(-b + d) / 2.0, (-b - d) / 2.0]
    return [y - s for y in ys]


def polish(coeffs, z, iterations=60):
    """Newton-refine root ``z`` of the polynomial with ascending ``coeffs``.

    Stops when a step no longer reduces the residual.
    """
    c = np.asarray(coeffs, dtype=complex)
    dc = np.polynomial.polynomial.polyder(c)
    val = np.polynomial.polynomial.polyval(z, c)
    for _ in range(iterations):
        der = np.polynomial.polynomial.polyval(z, dc)
        if der == 0:
            break
        z_new = z - val / der
        val_new = np.polynomial.polynomial.polyval(z_new, c)
        if abs(val_new) >= abs(val):
            break
        z, val = z_new, val_new
        if val == 0:
            break
    return complex(z)


def quartic_roots(coeffs):
    """All four complex roots of a quartic given by ascending ``coeffs`` (c0..c4).

    ``c4`` must be non-zero.  The roots are polished against the original
    coefficients.
    """
    c = np.asarray(coeffs, dtype=float)
    if c.shape != (5,) or c[4] == 0:
        raise ValueError("need five coefficients with a non-zero leading term")
    a = c[:4] / c[4]  # monic: x^4 + a3 x^3 + a2 x^2 + a1 x + a0
    # scale x = s*y so that the rescaled coefficients are O(1)
    s = max(abs(a[3 - k]) ** (1.0 / (k + 1)) for k in range(4))
    if s == 0:
        return [0j] * 4
    b3, b2, b1, b0 = a[3] / s, a[2] / s ** 2, a[1] / s ** 3, a[0] / s ** 4
    roots = [s * y for y in ferrari(b3, b2, b1, b0)]
    return [polish(c, z) for z in roots]
