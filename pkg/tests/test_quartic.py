import numpy as np
import pytest
from hypothesis import assume, given, strategies as st
from numpy.polynomial import polynomial as P

from radcool.quartic import cubic_roots, quartic_roots


def expand(roots):
    return P.polyfromroots(roots).real


def test_synthetic_two_real_one_pair():
    roots = [280.0, 320.0, complex(-100, 50), complex(-100, -50)]
    got = sorted(quartic_roots(expand(roots)), key=lambda z: (z.real, z.imag))
    want = sorted(roots, key=lambda z: (complex(z).real, complex(z).imag))
    for g, w in zip(got, want):
        assert abs(g - w) / abs(w) < 1e-9


def test_pure_radiation_quartic():
    Ta = 293.15
    zs = quartic_roots([-Ta ** 4, 0, 0, 0, 1.0])
    for target in (Ta, -Ta, 1j * Ta, -1j * Ta):
        assert min(abs(z - target) for z in zs) < 1e-9 * Ta


def test_cubic_roots_of_known_cubic():
    rs = cubic_roots(-6.0, 11.0, -6.0)  # (x-1)(x-2)(x-3)
    assert sorted(r.real for r in rs) == pytest.approx([1, 2, 3])


@given(st.floats(-500, 500), st.floats(-500, 500), st.floats(-500, 500), st.floats(1, 800),
       st.floats(1e-12, 1.0))
def test_random_factorizations(w1, w2, a, b, lead):
    assume(abs(w1 - w2) > 1.0)
    coeffs = lead * expand([w1, w2, complex(a, b), complex(a, -b)])
    zs = quartic_roots(coeffs)
    for target in (w1, w2, complex(a, b)):
        assert min(abs(z - target) for z in zs) < 1e-6 * max(abs(target), 1.0)


def test_agrees_with_companion_matrix():
    c = [50.0, 35.0, 4.0, 0.0, 1.0]
    ours = sorted(quartic_roots(c), key=lambda z: (round(z.real, 6), z.imag))
    ref = sorted(np.roots(c[::-1]), key=lambda z: (round(z.real, 6), z.imag))
    assert np.allclose(ours, ref, rtol=1e-9)
